#ifndef HDL_CURVES_HPP
#define HDL_CURVES_HPP

#include <string>
#include <vector>

namespace hdl {

enum class Extrapolation { none, last3_richardson, plateau_mean, flattest_pair };

std::string to_string(Extrapolation e);

// Sampled estimator curve x |-> y with a limit estimate attached.  The
// abscissae must be strictly monotone; the limit sits at the back of the
// sample order (curves are stored with the last point nearest the limit).
struct LimitCurve {
    std::vector<double> x;
    std::vector<double> y;
    Extrapolation method = Extrapolation::none;
    double estimate = 0.0;
    bool plateau = false;

    void validate() const;
};

// Plateau mean of the trailing window when the last `window` points agree to
// `rel_tol`; otherwise the y at the limit-side end of the flattest
// consecutive pair.  Curves that are identically ~0 estimate 0.
LimitCurve attach_estimate(std::vector<double> x, std::vector<double> y,
                           int window = 5, double rel_tol = 1e-3);

// Aitken delta-squared on the last three points.
double richardson_last3(const std::vector<double>& y);

} // namespace hdl

#endif
