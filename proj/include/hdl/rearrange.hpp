#ifndef HDL_REARRANGE_HPP
#define HDL_REARRANGE_HPP

#include "hdl/symbols.hpp"

#include <vector>

namespace hdl {

// Weighted nonnegative samples (value, mass) of a function on a measure
// space; the discretization carrier for rearrangements.
struct MeasuredSamples {
    struct Sample {
        double value;
        double mass;
    };
    std::vector<Sample> samples;

    double total_mass() const;
};

// Right-open piecewise-constant nonincreasing function on [0, inf):
// value val[i] on [bk[i-1], bk[i]) with bk[-1] = 0, and 0 beyond bk.back().
struct StepFunction {
    std::vector<double> bk;  // right endpoints, strictly increasing, > 0
    std::vector<double> val; // nonincreasing, >= 0

    StepFunction() = default;
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    std::size_t pieces() const { return val.size(); }
    double support_end() const { return bk.empty() ? 0.0 : bk.back(); }
    double value_at(double t) const;

    double integral() const;            // int_0^inf
    double integral_to(double t) const; // int_0^t
    // int_0^inf h^p and int_0^t h^p; products are formed in the log domain
    // when a piece would underflow (tiny values on huge pieces).
    double integral_pow(double p) const;
    double integral_pow_to(double p, double t) const;
};

StepFunction rearrange(const MeasuredSamples& samples);

// Exact rearrangement of a lacunary symbol's dyadic block cloud:
// value c_j on [2^j - 1, 2^{j+1} - 1).
StepFunction lacunary_rearrangement(const LacunarySpec& spec);

// Distribution function sup{ t : h(t) > lambda } (strict superlevel set).
double distribution(const StepFunction& h, double lambda);

double lp_norm(const StepFunction& h, double p);

// (int_0^inf (t^{1/p} h(t))^q dt/t)^{1/q}; q = infinity gives
// sup_t t^{1/p} h(t).  Requires p, q > 0.
double lorentz_quasinorm(const StepFunction& h, double p, double q);

// sup_{t>0} (int_0^t h) / log(2+t), attained at a breakpoint (the interior
// stationary point of each piece is a minimum); evaluated exactly.
double dix_log_norm(const StepFunction& h);

// sup_{t>2} (int_0^t h) / log t
double sup_log_average_above2(const StepFunction& h);

// int_0^{t^2} h + t * (int_{t^2}^inf h^2)^{1/2}, t > 0.
double holmstedt_K(const StepFunction& h, double t);

// sup over the grid of holmstedt_K(h,t)/log(2+t).
double lg_interp_norm(const StepFunction& h, const std::vector<double>& t_grid);

// Grid for lg_interp_norm: breakpoint images sqrt(t_i) plus a geometric tail.
std::vector<double> default_lg_grid(const StepFunction& h);

StepFunction dilate(const StepFunction& h, double a); // h(x/a)

} // namespace hdl

#endif
