#ifndef HDL_HANKEL_HPP
#define HDL_HANKEL_HPP

#include "hdl/rearrange.hpp"
#include "hdl/symbols.hpp"

#include <Eigen/Dense>

namespace hdl {

// N x N truncation of the Hankel matrix with entry(k,m) = conj(f_{k+m+1});
// constant on anti-diagonals, zero once k+m+1 exceeds the symbol degree.
// For N >= degree the truncation carries the whole (finite-rank) operator.
struct HankelTruncation {
    Eigen::MatrixXcd entries;
    int source_degree;

    int N() const { return static_cast<int>(entries.rows()); }
};

struct SingularSpectrum {
    std::vector<double> s; // nonincreasing, >= 0
    int clipped = 0;       // negative eigenvalues zeroed during extraction

    std::size_t size() const { return s.size(); }
};

// Matrix-size cap for dense spectra; HDL_SVD_CAP overrides the default 8192.
int svd_cap();

HankelTruncation hankel_matrix(const SymbolSeries& s, int N);

// Full spectrum of the truncation.  Real symmetric input goes through a
// dense symmetric eigensolve (|eigenvalues|); complex input through the
// Hermitian square H*H.
SingularSpectrum singular_values(const HankelTruncation& h);

double schatten_norm(const SingularSpectrum& sp, double p);

// q < inf: (sum_j (j+1)^{q/p-1} s_j^q)^{1/q};  q = inf: sup_j (j+1)^{1/p} s_j.
double schatten_lorentz(const SingularSpectrum& sp, double p, double q);

// sup_n sum_{j<=n} s_j / log(n+2)
double dixmier_norm(const SingularSpectrum& sp);

// Step function s_j on [j, j+1) (right-open), zero tail dropped.
StepFunction partial_sum_step(const SingularSpectrum& sp);

struct BergmanSpectrum {
    SingularSpectrum spec;
    int N;
    double alpha;
    // Heuristic 1/n tail coefficient calibrated on the f = z closed form:
    // s_j ~ tail_coeff / j beyond the truncation.  Reported, never asserted.
    double tail_coeff;
};

// Singular values of the weighted-Bergman-space Hankel operator with symbol
// conj(f), computed as sqrt of the eigenvalues of the positive block
// G = T_{|f|^2} - T_f T_{conj f} in the orthonormal monomial basis
// e_n = z^n / sqrt(w_n), w_{n+1}/w_n = (n+1)/(n+alpha+2).
BergmanSpectrum bergman_hankel_spectrum(const SymbolSeries& s, double alpha, int N);

} // namespace hdl

#endif
