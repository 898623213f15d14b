#include "hdl/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hdl {

double MeasuredSamples::total_mass() const {
    double m = 0.0;
    for (const auto& s : samples) m += s.mass;
    return m;
}

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : bk(std::move(breakpoints)), val(std::move(values)) {
    if (bk.size() != val.size())
        throw std::invalid_argument("StepFunction: breakpoints/values size mismatch");
    double prev = 0.0;
    for (std::size_t i = 0; i < bk.size(); ++i) {
        if (!(bk[i] > prev) || !std::isfinite(bk[i]))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
        prev = bk[i];
        if (!(val[i] >= 0.0) || !std::isfinite(val[i]))
            throw std::invalid_argument("StepFunction: values must be finite and >= 0");
        if (i > 0 && val[i] > val[i - 1])
            throw std::invalid_argument("StepFunction: values must be nonincreasing");
    }
}

double StepFunction::value_at(double t) const {
    if (t < 0.0) return 0.0;
    double left = 0.0;
    for (std::size_t i = 0; i < pieces(); ++i) {
        if (t < bk[i] && t >= left) return val[i];
        left = bk[i];
    }
    return 0.0;
}

double StepFunction::integral() const {
    double acc = 0.0, left = 0.0;
    for (std::size_t i = 0; i < pieces(); ++i) {
        acc += val[i] * (bk[i] - left);
        left = bk[i];
    }
    return acc;
}

double StepFunction::integral_to(double t) const {
    if (t <= 0.0) return 0.0;
    double acc = 0.0, left = 0.0;
    for (std::size_t i = 0; i < pieces(); ++i) {
        const double right = std::min(bk[i], t);
        if (right > left) acc += val[i] * (right - left);
        if (t <= bk[i]) break;
        left = bk[i];
    }
    return acc;
}

namespace {

// v^p * dt without intermediate under/overflow
double pow_times(double v, double p, double dt) {
    if (v <= 0.0 || dt <= 0.0) return 0.0;
    const double lg = p * std::log(v) + std::log(dt);
    if (lg < -700.0) return 0.0;
    if (std::abs(std::log(v)) * p > 500.0 || dt > 1e100) return std::exp(lg);
    return std::pow(v, p) * dt;
}

} // namespace

double StepFunction::integral_pow(double p) const {
    double acc = 0.0, left = 0.0;
    for (std::size_t i = 0; i < pieces(); ++i) {
        acc += pow_times(val[i], p, bk[i] - left);
        left = bk[i];
    }
    return acc;
}

double StepFunction::integral_pow_to(double p, double t) const {
    if (t <= 0.0) return 0.0;
    double acc = 0.0, left = 0.0;
    for (std::size_t i = 0; i < pieces(); ++i) {
        const double right = std::min(bk[i], t);
        if (right > left) acc += pow_times(val[i], p, right - left);
        if (t <= bk[i]) break;
        left = bk[i];
    }
    return acc;
}

StepFunction rearrange(const MeasuredSamples& samples) {
    if (samples.samples.empty())
        throw std::invalid_argument("rearrange: empty sample cloud");
    std::vector<MeasuredSamples::Sample> s = samples.samples;
    for (const auto& x : s) {
        if (!(x.value >= 0.0) || !std::isfinite(x.value))
            throw std::invalid_argument("rearrange: values must be finite and >= 0");
        if (!(x.mass > 0.0) || !std::isfinite(x.mass))
            throw std::invalid_argument("rearrange: masses must be positive");
    }
    std::sort(s.begin(), s.end(),
              [](const auto& a, const auto& b) { return a.value > b.value; });

    std::vector<double> bk, val;
    bk.reserve(s.size());
    val.reserve(s.size());
    double cum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double mass = s[i].mass;
        while (i + 1 < s.size() && s[i + 1].value == s[i].value) {
            mass += s[i + 1].mass;
            ++i;
        }
        cum += mass;
        bk.push_back(cum);
        val.push_back(s[i].value);
    }
    return StepFunction(std::move(bk), std::move(val));
}

StepFunction lacunary_rearrangement(const LacunarySpec& spec) {
    const int M = spec.max_index();
    if (M + 1 > 1020)
        throw std::invalid_argument("lacunary_rearrangement: 2^(M+1) exceeds double range");
    std::vector<double> bk, val;
    for (int j = 0; j <= M; ++j) {
        const double v = spec.c[static_cast<std::size_t>(j)].value();
        const double right = std::ldexp(1.0, j + 1) - 1.0;
        if (!val.empty() && val.back() == v) {
            bk.back() = right; // merge equal plateau
        } else {
            bk.push_back(right);
            val.push_back(v);
        }
    }
    return StepFunction(std::move(bk), std::move(val));
}

double distribution(const StepFunction& h, double lambda) {
    double r = 0.0;
    for (std::size_t i = 0; i < h.pieces(); ++i) {
        if (h.val[i] > lambda)
            r = h.bk[i];
        else
            break;
    }
    return r;
}

double lp_norm(const StepFunction& h, double p) {
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be >= 1");
    return std::pow(h.integral_pow(p), 1.0 / p);
}

double lorentz_quasinorm(const StepFunction& h, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw std::domain_error("lorentz_quasinorm: p, q must be > 0");
    if (std::isinf(q)) {
        // sup over piece i of t^{1/p} v_i, attained at the right endpoint
        double sup = 0.0;
        for (std::size_t i = 0; i < h.pieces(); ++i)
            sup = std::max(sup, std::pow(h.bk[i], 1.0 / p) * h.val[i]);
        return sup;
    }
    // each piece integrates t^{q/p-1} in closed form
    const double e = q / p;
    double acc = 0.0, left = 0.0;
    for (std::size_t i = 0; i < h.pieces(); ++i) {
        const double seg = (std::pow(h.bk[i], e) - std::pow(left, e)) / e;
        acc += pow_times(h.val[i], q, seg);
        left = h.bk[i];
    }
    return std::pow(acc, 1.0 / q);
}

namespace {

// Supremum of g(t) = (int_0^t h) / log(shift + t) over t > t_min.
// On each piece the numerator is affine with slope v >= 0 and
// psi(t) = v (shift+t) log(shift+t) - (a + v(t-t0)) is increasing, so g has
// at most one interior stationary point and it is a minimum; the supremum
// sits at a piece endpoint.  The psi root is still evaluated as a safeguard.
double sup_scaled_integral(const StepFunction& h, double shift, double t_min) {
    const auto g = [&](double t) {
        const double den = std::log(shift + t);
        return den > 0.0 ? h.integral_to(t) / den : 0.0;
    };
    double sup = 0.0;
    if (std::log(shift + t_min) > 0.0 && t_min > 0.0) sup = std::max(sup, g(t_min));
    double left = 0.0;
    for (std::size_t i = 0; i < h.pieces(); ++i) {
        const double lo = std::max(left, t_min);
        const double hi = h.bk[i];
        left = h.bk[i];
        if (hi <= lo) continue;
        sup = std::max(sup, g(hi));
        const double v = h.val[i];
        if (v > 0.0) {
            const double a0 = h.integral_to(lo);
            const auto psi = [&](double t) {
                return v * (shift + t) * std::log(shift + t) - (a0 + v * (t - lo));
            };
            if (psi(lo) < 0.0 && psi(hi) > 0.0) {
                double x0 = lo, x1 = hi;
                for (int it = 0; it < 200 && (x1 - x0) > 1e-12 * std::max(1.0, x1); ++it) {
                    const double mid = 0.5 * (x0 + x1);
                    (psi(mid) < 0.0 ? x0 : x1) = mid;
                }
                sup = std::max(sup, g(0.5 * (x0 + x1)));
            }
        }
    }
    return sup;
}

} // namespace

double dix_log_norm(const StepFunction& h) { return sup_scaled_integral(h, 2.0, 0.0); }

double sup_log_average_above2(const StepFunction& h) { return sup_scaled_integral(h, 0.0, 2.0); }

double holmstedt_K(const StepFunction& h, double t) {
    if (!(t > 0.0)) throw std::domain_error("holmstedt_K: t must be > 0");
    const double s = t * t;
    const double head = h.integral_to(s);
    const double tail_sq = std::max(0.0, h.integral_pow(2.0) - h.integral_pow_to(2.0, s));
    return head + t * std::sqrt(tail_sq);
}

double lg_interp_norm(const StepFunction& h, const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("lg_interp_norm: empty grid");
    double sup = 0.0;
    for (double t : t_grid) {
        if (!(t > 0.0)) continue;
        sup = std::max(sup, holmstedt_K(h, t) / std::log(2.0 + t));
    }
    return sup;
}

std::vector<double> default_lg_grid(const StepFunction& h) {
    // breakpoint images sqrt(t_i), a fine geometric head below them (the
    // t * L^2 term peaks inside the support), and a geometric tail
    std::vector<double> g;
    for (double t : h.bk) g.push_back(std::sqrt(t));
    const double anchor = h.bk.empty() ? 1.0 : std::sqrt(h.support_end());
    double t = std::max(anchor, 1e-3) / 1024.0;
    for (int i = 0; i < 640 && t < 1e300; ++i) {
        g.push_back(t);
        t *= 1.02;
    }
    t = std::max(anchor, 1e-3);
    for (int i = 0; i < 48; ++i) {
        g.push_back(t);
        t *= 1.5;
    }
    std::sort(g.begin(), g.end());
    return g;
}

StepFunction dilate(const StepFunction& h, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("dilate: a must be > 0");
    std::vector<double> bk = h.bk;
    for (double& t : bk) t *= a;
    return StepFunction(std::move(bk), h.val);
}

} // namespace hdl
