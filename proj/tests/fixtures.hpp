#ifndef HDL_TESTS_FIXTURES_HPP
#define HDL_TESTS_FIXTURES_HPP

#include "hdl/rearrange.hpp"

#include <cmath>
#include <vector>

namespace hdl::fixtures {

// Nonincreasing step discretization of C/(1+t) on [0, T) with log-spaced
// pieces and piece-averaged values, so int_0^t h = C log(1+t) exactly at
// every breakpoint.
inline StepFunction c_over_one_plus_t(double C, double T, int pieces) {
    std::vector<double> bk, val;
    bk.reserve(static_cast<std::size_t>(pieces));
    val.reserve(static_cast<std::size_t>(pieces));
    const double t0 = 1e-3;
    double left = 0.0;
    for (int i = 0; i < pieces; ++i) {
        const double right =
            i + 1 == pieces
                ? T
                : t0 * std::pow(T / t0, static_cast<double>(i + 1) / static_cast<double>(pieces));
        if (!(right > left)) continue;
        const double mean = C * (std::log1p(right) - std::log1p(left)) / (right - left);
        bk.push_back(right);
        val.push_back(mean);
        left = right;
    }
    return StepFunction(std::move(bk), std::move(val));
}

// p-grid 1 + 2^{-m}, m = 1..m_max, descending toward 1
inline std::vector<double> dyadic_p_grid(int m_max) {
    std::vector<double> g;
    for (int m = 1; m <= m_max; ++m) g.push_back(1.0 + std::ldexp(1.0, -m));
    return g;
}

inline std::vector<double> geometric_grid(double start, double stop, int count) {
    std::vector<double> g;
    for (int i = 0; i < count; ++i)
        g.push_back(start * std::pow(stop / start, static_cast<double>(i) / (count - 1.0)));
    return g;
}

} // namespace hdl::fixtures

#endif
