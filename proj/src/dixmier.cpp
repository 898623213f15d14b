#include "hdl/dixmier.hpp"
#include "hdl/dyadic.hpp"
#include "hdl/fft.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hdl {

double log_average(const StepFunction& h, double t) {
    if (!(t > 1.0)) throw std::domain_error("log_average: t must be > 1");
    return h.integral_to(t) / std::log(t);
}

double hardy_mean(const StepFunction& h, double t) {
    if (!(t > 1.0)) throw std::domain_error("hardy_mean: t must be > 1");
    double acc = 0.0, left = 0.0;
    for (std::size_t i = 0; i < h.pieces(); ++i) {
        const double lo = std::max(left, 1.0);
        const double hi = std::min(h.bk[i], t);
        if (hi > lo && h.val[i] > 0.0) acc += h.val[i] * (std::log(hi) - std::log(lo));
        left = h.bk[i];
        if (left >= t) break;
    }
    return acc / std::log(t);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw std::runtime_error("hardy_mean: adaptive integration failed to converge");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double hardy_mean(const std::function<double(double)>& f, double t, double tol) {
    if (!(t > 1.0)) throw std::domain_error("hardy_mean: t must be > 1");
    // int_1^t f(x) dx/x = int_0^{log t} f(e^y) dy
    const auto g = [&](double y) { return f(std::exp(y)); };
    const double b = std::log(t);
    const double fa = g(0.0), fb = g(b), fm = g(0.5 * b);
    const double whole = b / 6.0 * (fa + 4.0 * fm + fb);
    const double integral =
        adaptive_simpson(g, 0.0, b, fa, fm, fb, whole, tol * std::max(1.0, std::abs(whole)), 48);
    return integral / b;
}

namespace {

void check_p_grid(const std::vector<double>& p_grid) {
    if (p_grid.empty()) throw std::invalid_argument("p grid must be nonempty");
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (!(p_grid[i] > 1.0 && p_grid[i] <= 2.0))
            throw std::invalid_argument("p grid must lie in (1,2]");
        if (i > 0 && !(p_grid[i] < p_grid[i - 1]))
            throw std::invalid_argument("p grid must descend toward 1");
    }
}

} // namespace

LimitCurve scaled_schatten_scan(const StepFunction& h, const std::vector<double>& p_grid) {
    check_p_grid(p_grid);
    std::vector<double> y;
    y.reserve(p_grid.size());
    for (double p : p_grid) y.push_back((p - 1.0) * h.integral_pow(p));
    LimitCurve c = attach_estimate(p_grid, y);
    c.method = Extrapolation::last3_richardson;
    c.estimate = richardson_last3(y);
    return c;
}

SandwichReport sandwich_check(const StepFunction& h, const std::vector<double>& p_grid,
                              const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("sandwich_check: empty t grid");
    check_p_grid(p_grid);
    SandwichReport rep;

    std::vector<double> y;
    for (double p : p_grid) y.push_back((p - 1.0) * h.integral_pow(p));
    rep.scan = attach_estimate(p_grid, y); // plateau / flattest-pair estimator
    rep.ls = rep.scan.estimate;

    std::vector<double> ly;
    for (double t : t_grid) {
        if (!(t > 1.0)) throw std::invalid_argument("sandwich_check: t grid must lie in (1,inf)");
        ly.push_back(log_average(h, t));
    }
    rep.log_curve = attach_estimate(t_grid, ly);
    rep.ll = 0.0;
    for (double v : ly) rep.ll = std::max(rep.ll, v); // limsup surrogate

    const double slack = 1e-12;
    const bool upper = rep.ls <= 1.1 * rep.ll + slack;
    const bool lower = rep.ll <= 1.1 * std::exp(1.0) * rep.ls + slack;
    rep.pass = upper && lower;
    return rep;
}

IdentityReport log_mean_identity_check(const StepFunction& h, const std::vector<double>& r_grid,
                                       const std::vector<double>& t_grid) {
    if (r_grid.empty() || t_grid.empty())
        throw std::invalid_argument("log_mean_identity_check: empty grid");
    IdentityReport rep;

    std::vector<double> zy;
    for (double r : r_grid) {
        if (!(r >= 1.0)) throw std::invalid_argument("r grid must lie in [1,inf)");
        const double p = 1.0 + 1.0 / r;
        zy.push_back(h.integral_pow(p) / r);
    }
    rep.zeta_curve = attach_estimate(r_grid, zy);

    std::vector<double> ly;
    for (double t : t_grid) ly.push_back(log_average(h, t));
    rep.log_curve = attach_estimate(t_grid, ly);

    const double denom = std::max(std::abs(rep.log_curve.estimate), 1e-300);
    rep.rel_diff = std::abs(rep.zeta_curve.estimate - rep.log_curve.estimate) / denom;

    rep.c_H = sup_log_average_above2(h);
    const double c = 1.1 * rep.c_H;
    rep.mu_pass = true;
    for (double t : t_grid) {
        if (t < std::exp(1.0)) continue;
        const double mu = distribution(h, 1.0 / t);
        if (mu > c * t * std::log(t) * (1.0 + 1e-9)) {
            rep.mu_pass = false;
            break;
        }
    }
    return rep;
}

// --------------------------------------------------------------- sigma means

double SigmaMeanParams::log_a() const { return std::log(a); }

double SigmaMeanParams::q() const {
    const double l = log_a();
    return l * l / (1.0 + l * l);
}

SigmaMeanParams SigmaMeanParams::from_delta(double A, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("delta must lie in (0,1)");
    if (!(A > 0.0)) throw std::domain_error("A must be > 0");
    return SigmaMeanParams{A, (1.0 - delta) * A, 0.0, std::exp(1.0 / std::sqrt(delta))};
}

double sigma_mean_closed_form(const SigmaMeanParams& params, double y) {
    if (!(y > 1.0)) throw std::domain_error("sigma_mean_closed_form: y must be > 1");
    const double la = params.log_a();
    const auto G = [&](double x) {
        const double u = std::log(x) / la;
        return x * la / (1.0 + la * la) * (la * std::cos(u) + std::sin(u));
    };
    const double decay = y > 700.0 ? 0.0 : std::exp(-y);
    return params.A * (y - 1.0) / y + params.B / y * (G(y) - G(1.0)) +
           params.C / y * (1.0 / std::exp(1.0) - decay);
}

DemoReport nonmeasurability_demo(double delta, double A, int k_cap) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("nonmeasurability_demo: delta must lie in (0,1)");
    const SigmaMeanParams params = SigmaMeanParams::from_delta(A, delta);
    const double la = params.log_a();

    // largest k with a^{(2k+1)pi} < 1e300
    const double budget = std::log(1e300) / (la * M_PI);
    int k_max = static_cast<int>(std::floor((budget - 1.0) / 2.0));
    if (k_cap > 0) k_max = std::min(k_max, k_cap);
    if (k_max < 1)
        throw std::invalid_argument("nonmeasurability_demo: a^{2k pi} overflows for every k >= 1");

    DemoReport rep;
    rep.delta = delta;
    rep.A = params.A;
    rep.B = params.B;
    rep.a = params.a;
    rep.q = params.q();
    rep.k_max = k_max;
    for (int k = 1; k <= k_max; ++k) {
        const double y1 = std::exp(2.0 * k * M_PI * la);
        const double y2 = std::exp((2.0 * k + 1.0) * M_PI * la);
        rep.curve1.push_back(sigma_mean_closed_form(params, y1));
        rep.curve2.push_back(sigma_mean_closed_form(params, y2));
    }
    rep.L1 = rep.curve1.back();
    rep.L2 = rep.curve2.back();
    rep.ratio = rep.L1 / rep.L2;
    rep.expected = 1.0 / delta;
    rep.rel_err = std::abs(rep.ratio - rep.expected) * delta;
    rep.pass = rep.rel_err < 0.01;
    return rep;
}

// --------------------------------------------------------- equivalence scans

double dyadic_nu_power(const DyadicBlocks& blocks, double p) {
    double acc = 0.0;
    for (int n = 0; n <= blocks.n_max; ++n) {
        const auto& b = blocks.blocks[static_cast<std::size_t>(n)];
        const std::size_t grid = next_pow2(4 * (static_cast<std::size_t>(b.degree()) + 1));
        const double bn = block_lp_norm(b, p, grid);
        acc += std::ldexp(1.0, n) * std::pow(bn, p);
    }
    return acc;
}

std::vector<double> EquivalenceReport::estimates() const {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {scaled_area ? scaled_area->estimate : nan, log_area ? log_area->estimate : nan,
            scaled_dyadic ? scaled_dyadic->estimate : nan, log_dyadic ? log_dyadic->estimate : nan};
}

namespace {

LimitCurve log_average_curve(const StepFunction& h, const std::vector<double>& t_grid) {
    std::vector<double> y;
    y.reserve(t_grid.size());
    for (double t : t_grid) y.push_back(log_average(h, t));
    return attach_estimate(t_grid, y);
}

void check_t_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("t grid must be nonempty");
    for (double t : t_grid)
        if (!(t > 1.0)) throw std::invalid_argument("t grid must lie in (1,inf)");
}

} // namespace

EquivalenceReport equivalence_scan(const SymbolSeries& s, const std::vector<double>& p_grid,
                                   const std::vector<double>& t_grid, const DiscGrid& grid) {
    check_p_grid(p_grid);
    check_t_grid(t_grid);
    EquivalenceReport rep;

    rep.scaled_area = scaled_scan_integral(s, 2, p_grid, grid);

    const StepFunction F = rearrange(F_samples(s, grid));
    rep.log_area = log_average_curve(F, t_grid);

    const DyadicBlocks blocks = project_blocks(s, blocks_for_degree(s.degree()));
    std::vector<double> zy;
    for (double p : p_grid) zy.push_back((p - 1.0) * dyadic_nu_power(blocks, p));
    rep.scaled_dyadic = attach_estimate(p_grid, zy);

    const StepFunction Phi = rearrange(phi_samples(blocks));
    rep.log_dyadic = log_average_curve(Phi, t_grid);
    return rep;
}

EquivalenceReport equivalence_scan(const LacunarySpec& spec, const std::vector<double>& p_grid,
                                   const std::vector<double>& t_grid) {
    check_p_grid(p_grid);
    check_t_grid(t_grid);
    EquivalenceReport rep;

    // sum_n 2^n c_n^p in the log2 domain (the gap profile underflows otherwise)
    std::vector<double> zy;
    for (double p : p_grid) {
        double acc = 0.0;
        for (int n = 0; n <= spec.max_index(); ++n)
            acc += std::exp2(static_cast<double>(n) +
                             p * spec.c[static_cast<std::size_t>(n)].log2());
        zy.push_back((p - 1.0) * acc);
    }
    rep.scaled_dyadic = attach_estimate(p_grid, zy);

    const StepFunction Phi = lacunary_rearrangement(spec);
    rep.log_dyadic = log_average_curve(Phi, t_grid);
    return rep;
}

} // namespace hdl
