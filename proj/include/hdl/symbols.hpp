#ifndef HDL_SYMBOLS_HPP
#define HDL_SYMBOLS_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace hdl {

using cplx = std::complex<double>;

// Positive real stored as mantissa * 2^exp2 with mantissa in [1,2), so that
// magnitudes like 2^(-1681) stay representable.  value() may underflow to 0;
// log2() never does.
struct ScaledReal {
    double mantissa = 1.0;
    std::int64_t exp2 = 0;

    static ScaledReal from_double(double v);
    static ScaledReal from_int_shift(std::int64_t k, std::int64_t shift); // k * 2^shift

    double value() const;
    double log2() const;
    ScaledReal mul_pow2(std::int64_t j) const; // this * 2^j

    bool operator<(const ScaledReal& o) const;
    bool operator<=(const ScaledReal& o) const;
};

// Finite Taylor truncation f(z) = sum_{n=0}^{N} coeffs[n] z^n.
struct SymbolSeries {
    std::vector<cplx> coeffs; // size degree()+1

    SymbolSeries() : coeffs{cplx(0.0, 0.0)} {}
    explicit SymbolSeries(std::vector<cplx> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    cplx coeff(std::int64_t n) const; // 0 outside [0, degree]
    cplx eval(cplx z) const;          // Horner
};

// Lacunary symbol sum_m c[m] z^(2^m), c positive and nonincreasing.
struct LacunarySpec {
    std::vector<ScaledReal> c;

    explicit LacunarySpec(std::vector<ScaledReal> coeffs);
    static LacunarySpec from_values(const std::vector<double>& values);

    int max_index() const { return static_cast<int>(c.size()) - 1; } // M
};

SymbolSeries monomial_symbol(int k, cplx scale);

// Materializes the lacunary symbol as a dense series of degree 2^M.
// Refuses M > 24 (memory); coefficients below double range come out as 0.
SymbolSeries lacunary_to_series(const LacunarySpec& spec);

// Drops lacunary terms with frequency 2^m > max_freq.  Exact for any Hankel
// truncation that cannot see past anti-diagonal max_freq.
LacunarySpec lacunary_truncate(const LacunarySpec& spec, std::int64_t max_freq);

// Coefficient profile c_j = (sigma(j)-sigma(j-1))/2^j for the oscillating
// linear-growth profile sigma(x) = (A + B cos lg_a lg x) x + C, with the head
// j < j0 flattened to c_{j0}.  See SigmaExample for the associated constants.
struct SigmaExample {
    LacunarySpec spec;
    double A, B, a, C;
    int j0;
};
SigmaExample make_sigma_example(double A, double B, double a, int j_max);
LacunarySpec sigma_example(double A, double B, double a, int j_max);

// Block-constant profile: c_j = a_k on (N_k, N_{k+1}], N_k = k^2,
// a_k = k * 2^(-N_{k+1}), with c_0 = c_1 = a_0 = 1.  sup_j 2^j c_j = k_max.
LacunarySpec gap_example(int k_max);

SymbolSeries derivative_series(const SymbolSeries& s, int order);

// f(e^{2 pi i j/grid_size}), j = 0..grid_size-1, by zero-padded inverse DFT.
// grid_size must be a power of two >= 2*(degree+1).
std::vector<cplx> eval_on_circle_grid(const SymbolSeries& s, std::size_t grid_size);

} // namespace hdl

#endif
