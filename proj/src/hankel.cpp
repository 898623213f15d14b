#include "hdl/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hdl {

int svd_cap() {
    if (const char* env = std::getenv("HDL_SVD_CAP")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
    return 8192;
}

HankelTruncation hankel_matrix(const SymbolSeries& s, int N) {
    if (N < 1) throw std::invalid_argument("hankel_matrix: N must be >= 1");
    HankelTruncation h;
    h.source_degree = s.degree();
    h.entries = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 0; k < N; ++k)
        for (int m = 0; m < N; ++m) {
            const std::int64_t idx = static_cast<std::int64_t>(k) + m + 1;
            if (idx <= s.degree()) h.entries(k, m) = std::conj(s.coeff(idx));
        }
    return h;
}

namespace {

SingularSpectrum from_eigenvalues_abs(const Eigen::VectorXd& ev) {
    SingularSpectrum sp;
    sp.s.reserve(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i) sp.s.push_back(std::abs(ev[i]));
    std::sort(sp.s.begin(), sp.s.end(), std::greater<double>());
    return sp;
}

SingularSpectrum from_gram_eigenvalues(const Eigen::VectorXd& ev, double neg_tol) {
    double scale = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) scale = std::max(scale, std::abs(ev[i]));
    SingularSpectrum sp;
    sp.s.reserve(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        double l = ev[i];
        if (l < 0.0) {
            if (l < -neg_tol * std::max(1.0, scale))
                throw std::runtime_error(
                    "spectrum extraction: eigenvalue " + std::to_string(l) +
                    " below the negativity tolerance (matrix scale " + std::to_string(scale) + ")");
            l = 0.0;
            ++sp.clipped;
        }
        sp.s.push_back(std::sqrt(l));
    }
    std::sort(sp.s.begin(), sp.s.end(), std::greater<double>());
    return sp;
}

bool is_real(const Eigen::MatrixXcd& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j).imag() != 0.0) return false;
    return true;
}

} // namespace

SingularSpectrum singular_values(const HankelTruncation& h) {
    const int N = h.N();
    if (N > svd_cap())
        throw std::invalid_argument("singular_values: N exceeds the matrix-size cap (HDL_SVD_CAP)");
    if (is_real(h.entries)) {
        // real symmetric Hankel: singular values are |eigenvalues|
        const Eigen::MatrixXd A = h.entries.real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.compute(A, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("singular_values: symmetric eigensolve failed at N=" +
                                     std::to_string(N));
        return from_eigenvalues_abs(es.eigenvalues());
    }
    const Eigen::MatrixXcd G = h.entries.adjoint() * h.entries;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es;
    es.compute(G, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("singular_values: Hermitian eigensolve failed at N=" +
                                 std::to_string(N));
    return from_gram_eigenvalues(es.eigenvalues(), 1e-14);
}

double schatten_norm(const SingularSpectrum& sp, double p) {
    if (!(p > 0.0)) throw std::domain_error("schatten_norm: p must be > 0");
    double acc = 0.0;
    for (double s : sp.s) acc += std::pow(s, p);
    return std::pow(acc, 1.0 / p);
}

double schatten_lorentz(const SingularSpectrum& sp, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw std::domain_error("schatten_lorentz: p, q must be > 0");
    if (std::isinf(q)) {
        double sup = 0.0;
        for (std::size_t j = 0; j < sp.s.size(); ++j)
            sup = std::max(sup, std::pow(static_cast<double>(j + 1), 1.0 / p) * sp.s[j]);
        return sup;
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < sp.s.size(); ++j)
        acc += std::pow(static_cast<double>(j + 1), q / p - 1.0) * std::pow(sp.s[j], q);
    return std::pow(acc, 1.0 / q);
}

double dixmier_norm(const SingularSpectrum& sp) {
    double sup = 0.0, cum = 0.0;
    for (std::size_t n = 0; n < sp.s.size(); ++n) {
        cum += sp.s[n];
        sup = std::max(sup, cum / std::log(static_cast<double>(n) + 2.0));
    }
    return sup;
}

StepFunction partial_sum_step(const SingularSpectrum& sp) {
    std::size_t m = sp.s.size();
    while (m > 0 && sp.s[m - 1] == 0.0) --m;
    std::vector<double> bk, val;
    bk.reserve(m);
    val.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        bk.push_back(static_cast<double>(j + 1));
        val.push_back(sp.s[j]);
    }
    return StepFunction(std::move(bk), std::move(val));
}

BergmanSpectrum bergman_hankel_spectrum(const SymbolSeries& s, double alpha, int N) {
    if (!(alpha > -1.0)) throw std::domain_error("bergman_hankel_spectrum: alpha must be > -1");
    const int deg = s.degree();
    if (N < deg + 2) throw std::invalid_argument("bergman_hankel_spectrum: need N >= degree + 2");
    if (N > svd_cap())
        throw std::invalid_argument("bergman_hankel_spectrum: N exceeds the matrix-size cap");

    // monomial norms w_n = n! Gamma(a+2) / Gamma(n+a+2), by recurrence
    std::vector<double> w(static_cast<std::size_t>(N + deg) + 1);
    w[0] = 1.0;
    for (std::size_t n = 0; n + 1 < w.size(); ++n)
        w[n + 1] = w[n] * (static_cast<double>(n) + 1.0) / (static_cast<double>(n) + alpha + 2.0);

    // G = T_{|f|^2} - T_f T_{conj f}, Hermitian, bandwidth = degree
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 0; k < N; ++k) {
        for (int n = std::max(0, k - deg); n <= k; ++n) {
            cplx t1(0.0, 0.0);
            for (int b = 0; b <= deg; ++b) {
                const int a = (k - n) + b;
                if (a > deg) break;
                t1 += s.coeff(a) * std::conj(s.coeff(b)) *
                      (w[static_cast<std::size_t>(n + a)] /
                       std::sqrt(w[static_cast<std::size_t>(n)] * w[static_cast<std::size_t>(k)]));
            }
            cplx t2(0.0, 0.0);
            for (int m = std::max(0, k - deg); m <= n; ++m) {
                t2 += s.coeff(k - m) * std::conj(s.coeff(n - m)) *
                      (std::sqrt(w[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(n)]) /
                       w[static_cast<std::size_t>(m)]);
            }
            G(k, n) = t1 - t2;
            if (n != k) G(n, k) = std::conj(G(k, n));
        }
    }

    bool diagonal = true;
    for (int k = 0; k < N && diagonal; ++k)
        for (int n = std::max(0, k - deg); n < k; ++n)
            if (G(k, n) != cplx(0.0, 0.0)) {
                diagonal = false;
                break;
            }

    SingularSpectrum sp;
    if (diagonal) {
        Eigen::VectorXd ev(N);
        for (int k = 0; k < N; ++k) ev[k] = G(k, k).real();
        sp = from_gram_eigenvalues(ev, 1e-10);
    } else if (is_real(G)) {
        const Eigen::MatrixXd A = G.real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.compute(A, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("bergman_hankel_spectrum: eigensolve failed");
        sp = from_gram_eigenvalues(es.eigenvalues(), 1e-10);
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es;
        es.compute(G, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("bergman_hankel_spectrum: eigensolve failed");
        sp = from_gram_eigenvalues(es.eigenvalues(), 1e-10);
    }

    BergmanSpectrum out;
    out.N = N;
    out.alpha = alpha;
    out.tail_coeff = sp.s.empty() ? 0.0 : sp.s.back() * static_cast<double>(N);
    out.spec = std::move(sp);
    return out;
}

} // namespace hdl
