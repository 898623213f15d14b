#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdl/discquad.hpp"
#include "hdl/quadrature.hpp"
#include "hdl/rearrange.hpp"

#include <cmath>

using namespace hdl;

namespace {

// pi Gamma(kp/2+1) Gamma(p-1) / Gamma(kp/2+p), the order-1 power integral of
// f = z^{k+1}/(k+1)
double gamma_order1(int k, double p) {
    return M_PI * std::exp(std::lgamma(k * p / 2.0 + 1.0) + std::lgamma(p - 1.0) -
                           std::lgamma(k * p / 2.0 + p));
}

// pi k^p Gamma((k-1)p/2+1) Gamma(2p-1) / Gamma((k-1)p/2+2p), order 2
double gamma_order2(int k, double p) {
    return M_PI * std::pow(static_cast<double>(k), p) *
           std::exp(std::lgamma((k - 1) * p / 2.0 + 1.0) + std::lgamma(2.0 * p - 1.0) -
                    std::lgamma((k - 1) * p / 2.0 + 2.0 * p));
}

SymbolSeries paper_monomial(int k) { // z^{k+1}/(k+1)
    return monomial_symbol(k + 1, cplx(1.0 / (k + 1.0), 0.0));
}

SymbolSeries exp_like(int deg) { // sum z^n/n!, derivative-zero-free
    std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
    double f = 1.0;
    for (int n = 0; n <= deg; ++n) {
        c[static_cast<std::size_t>(n)] = cplx(1.0 / f, 0.0);
        f *= (n + 1.0);
    }
    return SymbolSeries(std::move(c));
}

} // namespace

TEST_CASE("gauss rules: jacobi(0) agrees with legendre and moments are exact") {
    const Rule1D gl = gauss_legendre_01(16);
    const Rule1D gj = gauss_jacobi_01(16, 0.0);
    double wsum = 0.0;
    for (int i = 0; i < 16; ++i) {
        CHECK(gj.nodes[i] == doctest::Approx(gl.nodes[i]).epsilon(1e-12));
        CHECK(gj.weights[i] == doctest::Approx(gl.weights[i]).epsilon(1e-12));
        wsum += gl.weights[i];
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));

    for (double alpha : {-0.9, -0.5, 0.5, 2.0}) {
        const Rule1D r = gauss_jacobi_01(8, alpha);
        for (int j = 0; j <= 15; ++j) { // exact through degree 2n-1
            double acc = 0.0;
            for (int i = 0; i < 8; ++i) acc += r.weights[i] * std::pow(r.nodes[i], j);
            CHECK(acc == doctest::Approx(1.0 / (alpha + j + 1.0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("unit integrand: f = z at order 1, p = 2 integrates to pi") {
    const DiscGrid grid(64, 64);
    const double v = besov_seminorm_integral(monomial_symbol(1, cplx(1.0, 0.0)), 1, 2.0, grid);
    CHECK(v * v == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("Gamma-formula golden values, both orders, k = 2..6") {
    const DiscGrid grid(256, 1024);
    for (int k = 2; k <= 6; ++k) {
        const SymbolSeries f = paper_monomial(k);
        for (double p : {1.1, 1.25, 1.5, 2.0}) {
            const double v1 = besov_seminorm_integral(f, 1, p, grid);
            CHECK(std::abs(std::pow(v1, p) - gamma_order1(k, p)) <=
                  1e-6 * gamma_order1(k, p));
            const double v2 = besov_seminorm_integral(f, 2, p, grid);
            CHECK(std::abs(std::pow(v2, p) - gamma_order2(k, p)) <=
                  1e-6 * gamma_order2(k, p));
        }
    }
}

TEST_CASE("degree-64 monomials stay within the 1e-6 contract") {
    const DiscGrid grid(256, 1024);
    const int d = 64;
    const SymbolSeries f = monomial_symbol(d, cplx(0.5, 0.0));
    for (int order : {1, 2}) {
        double fac = 0.5;
        for (int i = 0; i < order; ++i) fac *= static_cast<double>(d - i);
        for (double p : {1.1, 1.5, 2.0}) {
            const double a = (d - order) * p / 2.0;
            const double want = std::pow(fac, p) * M_PI *
                                std::exp(std::lgamma(a + 1.0) + std::lgamma(order * p - 1.0) -
                                         std::lgamma(a + order * p));
            const double got = std::pow(besov_seminorm_integral(f, order, p, grid), p);
            CHECK(std::abs(got - want) <= 1e-6 * want);
        }
    }
}

TEST_CASE("quadrature refinement changes smooth fixtures below 1e-8") {
    const SymbolSeries f = exp_like(24);
    const DiscGrid g1(256, 1024), g2(512, 2048);
    for (double p : {1.2, 1.5, 2.0})
        for (int order : {1, 2}) {
            const double a = besov_seminorm_integral(f, order, p, g1);
            const double b = besov_seminorm_integral(f, order, p, g2);
            CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b)));
        }
}

TEST_CASE("rotation invariance of the seminorms") {
    const SymbolSeries f = exp_like(16);
    std::vector<cplx> rc = f.coeffs;
    const double alpha = 0.7;
    for (std::size_t n = 0; n < rc.size(); ++n)
        rc[n] *= cplx(std::cos(alpha * n), std::sin(alpha * n));
    const SymbolSeries fr{std::move(rc)};
    const DiscGrid grid(128, 512);
    for (double p : {1.25, 2.0})
        for (int order : {1, 2}) {
            const double a = besov_seminorm_integral(f, order, p, grid);
            const double b = besov_seminorm_integral(fr, order, p, grid);
            CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
        }
}

TEST_CASE("domain errors") {
    const DiscGrid grid(32, 64);
    CHECK_THROWS_AS(besov_seminorm_integral(monomial_symbol(2, cplx(1, 0)), 1, 0.9, grid),
                    std::domain_error);
    CHECK_THROWS_AS(besov_seminorm_integral(monomial_symbol(2, cplx(1, 0)), 2, 0.4, grid),
                    std::domain_error);
    CHECK_THROWS(DiscGrid(32, 100)); // angular grid not a power of two
}

TEST_CASE("scaled scan: order 2 dies at p -> 1, order 1 tends to pi") {
    const DiscGrid grid(256, 1024);
    std::vector<double> p_grid;
    for (int m = 1; m <= 10; ++m) p_grid.push_back(1.0 + std::ldexp(1.0, -m));

    const SymbolSeries f = paper_monomial(4); // z^5/5
    const LimitCurve c2 = scaled_scan_integral(f, 2, p_grid, grid);
    CHECK(c2.y.back() < 1e-2);
    for (std::size_t i = 1; i < c2.y.size(); ++i) CHECK(c2.y[i] < c2.y[i - 1]);

    const LimitCurve c1 = scaled_scan_integral(f, 1, p_grid, grid);
    CHECK(std::abs(c1.y.back() - M_PI) <= 0.02 * M_PI);

    const LimitCurve z = scaled_scan_integral(SymbolSeries{}, 2, p_grid, grid);
    for (double v : z.y) CHECK(v == 0.0);

    CHECK_THROWS_AS(scaled_scan_integral(f, 2, std::vector<double>{2.5}, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaled_scan_integral(f, 2, std::vector<double>{1.25, 1.5}, grid),
                    std::invalid_argument);
}

TEST_CASE("F_samples: degenerate degrees give zero values with retained mass") {
    const DiscGrid grid(32, 64);
    const MeasuredSamples z = F_samples(monomial_symbol(1, cplx(2.0, 0.0)), grid);
    REQUIRE(!z.samples.empty());
    for (const auto& s : z.samples) CHECK(s.value == 0.0);

    // bookkeeping: cloud mass equals the node mass of (1-|z|^2)^{-2} dz
    double want = 0.0;
    for (int i = 0; i < grid.R; ++i)
        want += M_PI * grid.radial.weights[static_cast<std::size_t>(i)] /
                (grid.radial.nodes[static_cast<std::size_t>(i)] *
                 grid.radial.nodes[static_cast<std::size_t>(i)]);
    CHECK(z.total_mass() == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("F_samples L^p consistency with the weighted area integral") {
    const DiscGrid grid(256, 128);
    SymbolSeries f = exp_like(16);
    const MeasuredSamples cloud = F_samples(f, grid);
    const StepFunction F = rearrange(cloud);
    for (double p : {1.25, 1.5, 2.0}) {
        const double via_rearr = std::pow(F.integral_pow(p), 1.0 / p);
        const double direct = besov_seminorm_integral(f, 2, p, grid);
        CHECK(std::abs(via_rearr - direct) <= 1e-4 * direct);
    }
}
