#ifndef HDL_QUADRATURE_HPP
#define HDL_QUADRATURE_HPP

#include <vector>

namespace hdl {

// One-dimensional rule on (0,1): integral ~= sum_i weights[i]*g(nodes[i]).
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre on (0,1); weights sum to 1.
Rule1D gauss_legendre_01(int n);

// Gauss-Jacobi on (0,1) for the weight u^alpha, alpha > -1: the rule
// integrates u^alpha * g(u) with g sampled at the nodes, exactly for
// polynomial g up to degree 2n-1.  Weights sum to 1/(alpha+1).
Rule1D gauss_jacobi_01(int n, double alpha);

} // namespace hdl

#endif
