#ifndef HDL_DYADIC_HPP
#define HDL_DYADIC_HPP

#include "hdl/rearrange.hpp"
#include "hdl/symbols.hpp"

#include <cstdint>
#include <vector>

namespace hdl {

// Triangular frequency window W_n: weight 1 at k = 2^n, linear ramps on
// [2^{n-1}, 2^n] and [2^n, 2^{n+1}], zero outside the open interval
// (2^{n-1}, 2^{n+1}).  W_0 has weights 1 at k = 0 and k = 1.
struct DyadicWindow {
    int n;
    std::int64_t k_min; // first index with nonzero weight
    std::vector<double> weights;

    double weight_at(std::int64_t k) const;
    std::int64_t k_max() const { return k_min + static_cast<std::int64_t>(weights.size()) - 1; }
};

struct DyadicBlocks {
    std::vector<SymbolSeries> blocks; // block n = f * W_n
    int n_max;
    bool covers_degree; // 2^n_max >= degree of the source
};

DyadicWindow window_coeffs(int n);

// Smallest n_max with 2^n_max >= max(degree, 1).
int blocks_for_degree(int degree);

DyadicBlocks project_blocks(const SymbolSeries& s, int n_max);

// (mean over the circle grid of |b|^p)^{1/p}; grid_size must be a power of
// two >= 4*(degree+1).  Exact for p = 2 by Parseval.
double block_lp_norm(const SymbolSeries& b, double p, std::size_t grid_size);

// || { 2^{n s} ||f*W_n||_{L^p} } ||_{l^q}, q = infinity handled as the sup.
double dyadic_besov_norm(const DyadicBlocks& blocks, double s, double p, double q);

// Sample cloud of (theta, n) |-> |f*W_n(e^{i theta})| with mass 2^n/grid_n
// per node; grid_n = next_pow2(oversample * 2^{n+1}), oversample >= 4.
MeasuredSamples phi_samples(const DyadicBlocks& blocks, int oversample = 4);

} // namespace hdl

#endif
