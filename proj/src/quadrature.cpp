#include "hdl/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace hdl {

Rule1D gauss_legendre_01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: order must be >= 1");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton iteration on P_n over [-1,1]; nodes come out in descending x,
    // symmetry halves the work.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        // map [-1,1] -> (0,1)
        r.nodes[i] = 0.5 * (1.0 - x);
        r.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        r.weights[i] = 0.5 * w;
        r.weights[n - 1 - i] = 0.5 * w;
    }
    return r;
}

Rule1D gauss_jacobi_01(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi_01: order must be >= 1");
    if (alpha <= -1.0) throw std::domain_error("gauss_jacobi_01: alpha must be > -1");

    // Recurrence coefficients of the monic Jacobi polynomials for the
    // weight (1+x)^alpha on [-1,1], then Golub-Welsch.
    const double b = alpha;
    Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 1);
    diag[0] = b / (b + 2.0);
    const double beta0 = std::pow(2.0, b + 1.0) / (b + 1.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + b;
        diag[k] = (b * b) / (s * (s + 2.0));
        double betak;
        if (k == 1)
            betak = 4.0 * (b + 1.0) / ((b + 2.0) * (b + 2.0) * (b + 3.0));
        else
            betak = 4.0 * k * k * (k + b) * (k + b) / (s * s * (s * s - 1.0));
        sub[k - 1] = std::sqrt(betak);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    if (n == 1) {
        Rule1D r;
        r.nodes = {0.5 * (1.0 + diag[0])};
        r.weights = {beta0 * std::pow(2.0, -(b + 1.0))};
        return r;
    }
    es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi_01: tridiagonal eigensolve failed");

    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double scale = std::pow(2.0, -(b + 1.0));
    for (int i = 0; i < n; ++i) {
        const double x = es.eigenvalues()[i];
        const double q0 = es.eigenvectors()(0, i);
        r.nodes[i] = 0.5 * (1.0 + x);
        r.weights[i] = scale * beta0 * q0 * q0;
    }
    return r;
}

} // namespace hdl
