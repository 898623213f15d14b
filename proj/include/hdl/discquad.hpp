#ifndef HDL_DISCQUAD_HPP
#define HDL_DISCQUAD_HPP

#include "hdl/curves.hpp"
#include "hdl/quadrature.hpp"
#include "hdl/rearrange.hpp"
#include "hdl/symbols.hpp"

#include <vector>

namespace hdl {

// Quadrature carrier for area integrals over the unit disc in the variable
// u = 1 - r^2: a normalized Gauss-Legendre rule of order R (weights sum
// to 1) plus a uniform angular grid of size M (power of two).  The weighted
// Besov integrals additionally build Gauss-Jacobi rules per boundary
// exponent internally; the stored rule backs the F(t) sample cloud.
struct DiscGrid {
    int R;
    std::size_t M;
    Rule1D radial; // Gauss-Legendre in u on (0,1)

    DiscGrid(int R_, std::size_t M_);
};

// || f ||_{(order),p} = ( int_D |f^{(order)}(z)|^p (1-|z|^2)^{order*p-2} dz )^{1/p},
// requires p > 1/order.  Relative accuracy ~1e-6 or better on polynomial
// fixtures of degree <= 64 at R = 256, M = 1024.
double besov_seminorm_integral(const SymbolSeries& s, int order, double p, const DiscGrid& grid);

// Curve p |-> (p-1) * ||f||_{(order),p}^p over a p-grid sorted descending
// toward 1 inside (1,2].
LimitCurve scaled_scan_integral(const SymbolSeries& s, int order,
                                const std::vector<double>& p_grid, const DiscGrid& grid);

// Sample cloud of (1-|z|^2)^2 |f''(z)| against the measure (1-|z|^2)^{-2} dz
// on the grid nodes; its rearrangement approximates F.
MeasuredSamples F_samples(const SymbolSeries& s, const DiscGrid& grid);

} // namespace hdl

#endif
