#include "hdl/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hdl {

std::string to_string(Extrapolation e) {
    switch (e) {
        case Extrapolation::none: return "none";
        case Extrapolation::last3_richardson: return "last-3-richardson";
        case Extrapolation::plateau_mean: return "plateau-mean";
        case Extrapolation::flattest_pair: return "flattest-pair";
    }
    return "none";
}

void LimitCurve::validate() const {
    if (x.size() != y.size()) throw std::invalid_argument("LimitCurve: size mismatch");
    if (x.size() < 1) throw std::invalid_argument("LimitCurve: empty");
    for (std::size_t i = 1; i < x.size(); ++i) {
        const bool inc = x[1] > x[0];
        if (inc ? !(x[i] > x[i - 1]) : !(x[i] < x[i - 1]))
            throw std::invalid_argument("LimitCurve: abscissae must be strictly monotone");
    }
}

double richardson_last3(const std::vector<double>& y) {
    const std::size_t n = y.size();
    if (n < 3) return y.empty() ? 0.0 : y.back();
    const double y1 = y[n - 3], y2 = y[n - 2], y3 = y[n - 1];
    const double den = (y3 - y2) - (y2 - y1);
    if (std::abs(den) < 1e-300) return y3;
    return y3 - (y3 - y2) * (y3 - y2) / den;
}

LimitCurve attach_estimate(std::vector<double> x, std::vector<double> y, int window,
                           double rel_tol) {
    LimitCurve c;
    c.x = std::move(x);
    c.y = std::move(y);
    c.validate();
    const std::size_t n = c.y.size();

    double ymax = 0.0;
    for (double v : c.y) ymax = std::max(ymax, std::abs(v));
    if (ymax == 0.0) {
        c.method = Extrapolation::plateau_mean;
        c.plateau = true;
        c.estimate = 0.0;
        return c;
    }

    const std::size_t w = static_cast<std::size_t>(std::max(window, 2));
    if (n >= w) {
        double lo = c.y[n - w], hi = c.y[n - w];
        double sum = 0.0;
        for (std::size_t i = n - w; i < n; ++i) {
            lo = std::min(lo, c.y[i]);
            hi = std::max(hi, c.y[i]);
            sum += c.y[i];
        }
        const double mean = sum / static_cast<double>(w);
        if (std::abs(mean) > 0.0 && (hi - lo) <= rel_tol * std::abs(mean)) {
            c.method = Extrapolation::plateau_mean;
            c.plateau = true;
            c.estimate = mean;
            return c;
        }
    }

    if (n == 1) {
        c.method = Extrapolation::none;
        c.estimate = c.y[0];
        return c;
    }

    // flattest consecutive pair; ties go to the pair nearest the limit
    std::size_t best = 0;
    double best_rel = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double denom = std::max({std::abs(c.y[i]), std::abs(c.y[i + 1]), 1e-300});
        const double rel = std::abs(c.y[i + 1] - c.y[i]) / denom;
        if (rel <= best_rel) {
            best_rel = rel;
            best = i;
        }
    }
    c.method = Extrapolation::flattest_pair;
    c.plateau = false;
    c.estimate = c.y[best + 1];
    return c;
}

} // namespace hdl
