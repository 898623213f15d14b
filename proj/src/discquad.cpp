#include "hdl/discquad.hpp"
#include "hdl/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hdl {

DiscGrid::DiscGrid(int R_, std::size_t M_) : R(R_), M(M_) {
    if (R < 2) throw std::invalid_argument("DiscGrid: radial order must be >= 2");
    if (!is_pow2(M)) throw std::invalid_argument("DiscGrid: angular grid must be a power of two");
    radial = gauss_legendre_01(R);
}

namespace {

const Rule1D& jacobi_rule_cached(int n, double alpha) {
    static std::map<std::pair<int, double>, Rule1D> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, alpha});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, alpha), gauss_jacobi_01(n, alpha)).first;
    return it->second;
}

// mean over the M-point circle grid of |g(r e^{i theta})|^p
double angular_mean_abs_pow(const SymbolSeries& g, double r, double p, std::size_t M) {
    std::vector<cplx> a(M, cplx(0.0, 0.0));
    double rn = 1.0;
    for (std::size_t n = 0; n < g.coeffs.size(); ++n) {
        a[n] = g.coeffs[n] * rn;
        rn *= r;
    }
    fft_pow2(a, +1);
    double acc = 0.0;
    for (const cplx& v : a) acc += std::pow(std::abs(v), p);
    return acc / static_cast<double>(M);
}

void check_angular(const SymbolSeries& g, const DiscGrid& grid) {
    if (grid.M < 4 * (static_cast<std::size_t>(g.degree()) + 1))
        throw std::invalid_argument("DiscGrid: angular grid below 4*(degree+1) (aliasing)");
}

// int_D |f^{(order)}|^p (1-|z|^2)^{order*p-2} dz
// = pi * int_0^1 u^{order*p-2} [angular mean |f^{(order)}|^p at r=sqrt(1-u)] du
double besov_power_integral(const SymbolSeries& s, int order, double p, const DiscGrid& grid) {
    if (order < 1) throw std::invalid_argument("besov: derivative order must be >= 1");
    if (!(p > 1.0 / order)) throw std::domain_error("besov: requires p > 1/order");
    const SymbolSeries g = derivative_series(s, order);
    check_angular(g, grid);
    const double expo = order * p - 2.0;
    const Rule1D& rule = jacobi_rule_cached(grid.R, expo);
    double acc = 0.0;
    for (int i = 0; i < grid.R; ++i) {
        const double u = rule.nodes[static_cast<std::size_t>(i)];
        const double r = std::sqrt(1.0 - u);
        acc += rule.weights[static_cast<std::size_t>(i)] * angular_mean_abs_pow(g, r, p, grid.M);
    }
    return M_PI * acc;
}

} // namespace

double besov_seminorm_integral(const SymbolSeries& s, int order, double p, const DiscGrid& grid) {
    return std::pow(besov_power_integral(s, order, p, grid), 1.0 / p);
}

LimitCurve scaled_scan_integral(const SymbolSeries& s, int order,
                                const std::vector<double>& p_grid, const DiscGrid& grid) {
    if (p_grid.empty()) throw std::invalid_argument("scaled_scan_integral: empty p grid");
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (!(p_grid[i] > 1.0 && p_grid[i] <= 2.0))
            throw std::invalid_argument("scaled_scan_integral: p grid must lie in (1,2]");
        if (i > 0 && !(p_grid[i] < p_grid[i - 1]))
            throw std::invalid_argument("scaled_scan_integral: p grid must descend toward 1");
    }
    std::vector<double> y;
    y.reserve(p_grid.size());
    for (double p : p_grid) y.push_back((p - 1.0) * besov_power_integral(s, order, p, grid));
    return attach_estimate(p_grid, y);
}

MeasuredSamples F_samples(const SymbolSeries& s, const DiscGrid& grid) {
    const SymbolSeries g = derivative_series(s, 2); // zero series if degree < 2
    check_angular(g, grid);
    MeasuredSamples out;
    out.samples.reserve(static_cast<std::size_t>(grid.R) * grid.M);
    for (int i = 0; i < grid.R; ++i) {
        const double u = grid.radial.nodes[static_cast<std::size_t>(i)];
        const double r = std::sqrt(1.0 - u);
        // node mass of (1-|z|^2)^{-2} dz shared over the angular grid
        const double mass = M_PI * grid.radial.weights[static_cast<std::size_t>(i)] /
                            (u * u * static_cast<double>(grid.M));
        std::vector<cplx> a(grid.M, cplx(0.0, 0.0));
        double rn = 1.0;
        for (std::size_t n = 0; n < g.coeffs.size(); ++n) {
            a[n] = g.coeffs[n] * rn;
            rn *= r;
        }
        fft_pow2(a, +1);
        for (const cplx& v : a) out.samples.push_back({u * u * std::abs(v), mass});
    }
    return out;
}

} // namespace hdl
