#ifndef HDL_DIXMIER_HPP
#define HDL_DIXMIER_HPP

#include "hdl/curves.hpp"
#include "hdl/discquad.hpp"
#include "hdl/rearrange.hpp"
#include "hdl/symbols.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace hdl {

// (int_0^t h) / log t, t > 1.
double log_average(const StepFunction& h, double t);

// Hardy mean M f(t) = (1/log t) int_1^t f(x) dx/x.  The step-function
// overload is exact; the callable overload integrates adaptively on the
// log-substituted axis.
double hardy_mean(const StepFunction& h, double t);
double hardy_mean(const std::function<double(double)>& f, double t, double tol = 1e-10);

// Curve p |-> (p-1) int_0^inf h^p over a descending p-grid in (1,2],
// tagged with its last-3-Richardson extrapolation.
LimitCurve scaled_schatten_scan(const StepFunction& h, const std::vector<double>& p_grid);

// Estimates of |H|_limsup = limsup_{p->1} (p-1) int H^p  and
// |H|_limlog = limsup_{t->inf} (1/log t) int_0^t H, with the two-sided
// comparison ls <= ll <= e*ls checked at 10% estimator slack.
struct SandwichReport {
    double ls = 0.0;
    double ll = 0.0;
    bool pass = false;
    LimitCurve scan;      // over the p grid
    LimitCurve log_curve; // over the t grid
};
SandwichReport sandwich_check(const StepFunction& h, const std::vector<double>& p_grid,
                              const std::vector<double>& t_grid);

// Compares the plateau of (1/r) int h^{1+1/r} against the plateau of the
// log average, and verifies the distribution bound mu_h(1/t) <= c t log t
// for t >= e with c = 1.1 * sup_{t>2} (1/log t) int_0^t h.
struct IdentityReport {
    LimitCurve zeta_curve; // over the r grid
    LimitCurve log_curve;  // over the t grid
    double rel_diff = 0.0;
    double c_H = 0.0;
    bool mu_pass = false;
};
IdentityReport log_mean_identity_check(const StepFunction& h, const std::vector<double>& r_grid,
                                       const std::vector<double>& t_grid);

// Constants of the oscillating profile sigma(x) = (A + B cos lg_a lg x) x + C
// and its Hardy-mean limits A +- B q along the two canonical subsequences.
struct SigmaMeanParams {
    double A, B, C, a;
    double q() const;       // ln^2 a / (1 + ln^2 a)
    double log_a() const;   // ln a

    static SigmaMeanParams from_delta(double A, double delta); // B=(1-delta)A, a=e^{1/sqrt(delta)}
};

// Exact finite-scale Hardy mean of sigma(x)/x in the variable y = log t:
//   A (y-1)/y + (B/y) [G(x)]_{x=1}^{x=y} + (C/y)(1/e - e^{-y}),
//   G(x) = x ln a/(1+ln^2 a) (ln a cos lg_a x + sin lg_a x).
double sigma_mean_closed_form(const SigmaMeanParams& params, double y);

// Evaluates the two subsequences y = a^{2 k pi} and y = a^{(2k+1) pi} up to
// the largest k with a^{(2k+1) pi} < 1e300 and reports the limit ratio
// against 1/delta.
struct DemoReport {
    double delta, A, B, a, q;
    double L1, L2, ratio, expected;
    double rel_err; // |ratio - 1/delta| * delta
    int k_max;
    std::vector<double> curve1, curve2;
    bool pass;
};
DemoReport nonmeasurability_demo(double delta, double A = 2.0, int k_cap = 0);

// The four equivalent Dixmier-criterion estimators:
//   (scaled_area)   (p-1) int_D |f''|^p (1-|z|^2)^{2p-2} dz
//   (log_area)      (1/log t) int_0^t F,  F the area rearrangement
//   (scaled_dyadic) (p-1) sum_n 2^n mean|f*W_n|^p
//   (log_dyadic)    (1/log t) int_0^t Phi, Phi the block rearrangement
// Polynomial input fills all four; lacunary input fills the dyadic pair
// exactly without materializing the series.
struct EquivalenceReport {
    std::optional<LimitCurve> scaled_area;
    std::optional<LimitCurve> log_area;
    std::optional<LimitCurve> scaled_dyadic;
    std::optional<LimitCurve> log_dyadic;

    std::vector<double> estimates() const; // NaN where absent
};
EquivalenceReport equivalence_scan(const SymbolSeries& s, const std::vector<double>& p_grid,
                                   const std::vector<double>& t_grid, const DiscGrid& grid);
EquivalenceReport equivalence_scan(const LacunarySpec& spec, const std::vector<double>& p_grid,
                                   const std::vector<double>& t_grid);

// sum_n 2^n * mean_theta |f*W_n|^p over all blocks
double dyadic_nu_power(const struct DyadicBlocks& blocks, double p);

} // namespace hdl

#endif
