#include "hdl/symbols.hpp"
#include "hdl/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace hdl {

// ---------------------------------------------------------------- ScaledReal

ScaledReal ScaledReal::from_double(double v) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("ScaledReal: value must be positive and finite");
    int e = 0;
    double m = std::frexp(v, &e); // m in [0.5,1)
    return ScaledReal{2.0 * m, static_cast<std::int64_t>(e) - 1};
}

ScaledReal ScaledReal::from_int_shift(std::int64_t k, std::int64_t shift) {
    ScaledReal r = from_double(static_cast<double>(k));
    r.exp2 += shift;
    return r;
}

double ScaledReal::value() const {
    if (exp2 > 2000) throw std::overflow_error("ScaledReal: value overflows double");
    if (exp2 < -2000) return 0.0;
    return std::ldexp(mantissa, static_cast<int>(exp2));
}

double ScaledReal::log2() const { return std::log2(mantissa) + static_cast<double>(exp2); }

ScaledReal ScaledReal::mul_pow2(std::int64_t j) const { return ScaledReal{mantissa, exp2 + j}; }

bool ScaledReal::operator<(const ScaledReal& o) const {
    if (exp2 != o.exp2) return exp2 < o.exp2;
    return mantissa < o.mantissa;
}

bool ScaledReal::operator<=(const ScaledReal& o) const { return !(o < *this); }

// -------------------------------------------------------------- SymbolSeries

SymbolSeries::SymbolSeries(std::vector<cplx> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.assign(1, cplx(0.0, 0.0));
}

cplx SymbolSeries::coeff(std::int64_t n) const {
    if (n < 0 || n > degree()) return cplx(0.0, 0.0);
    return coeffs[static_cast<std::size_t>(n)];
}

cplx SymbolSeries::eval(cplx z) const {
    cplx acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

// -------------------------------------------------------------- LacunarySpec

LacunarySpec::LacunarySpec(std::vector<ScaledReal> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) throw std::invalid_argument("LacunarySpec: needs at least one coefficient");
    for (std::size_t m = 0; m + 1 < c.size(); ++m)
        if (c[m] < c[m + 1])
            throw std::invalid_argument("LacunarySpec: coefficients must be nonincreasing");
}

LacunarySpec LacunarySpec::from_values(const std::vector<double>& values) {
    std::vector<ScaledReal> c;
    c.reserve(values.size());
    for (double v : values) c.push_back(ScaledReal::from_double(v));
    return LacunarySpec(std::move(c));
}

// ---------------------------------------------------------------- generators

SymbolSeries monomial_symbol(int k, cplx scale) {
    if (k < 0) throw std::invalid_argument("monomial_symbol: k must be >= 0");
    std::vector<cplx> c(static_cast<std::size_t>(k) + 1, cplx(0.0, 0.0));
    c.back() = scale;
    return SymbolSeries(std::move(c));
}

SymbolSeries lacunary_to_series(const LacunarySpec& spec) {
    const int M = spec.max_index();
    if (M > 24)
        throw std::invalid_argument("lacunary_to_series: 2^M too large to materialize (M > 24)");
    const std::size_t deg = std::size_t{1} << M;
    std::vector<cplx> c(deg + 1, cplx(0.0, 0.0));
    for (int m = 0; m <= M; ++m)
        c[std::size_t{1} << m] = cplx(spec.c[static_cast<std::size_t>(m)].value(), 0.0);
    return SymbolSeries(std::move(c));
}

LacunarySpec lacunary_truncate(const LacunarySpec& spec, std::int64_t max_freq) {
    std::vector<ScaledReal> kept;
    for (int m = 0; m <= spec.max_index(); ++m) {
        if (m < 63 && (std::int64_t{1} << m) <= max_freq)
            kept.push_back(spec.c[static_cast<std::size_t>(m)]);
    }
    if (kept.empty()) throw std::invalid_argument("lacunary_truncate: nothing left");
    return LacunarySpec(std::move(kept));
}

namespace {

double lg_a(double x, double a) { return std::log(x) / std::log(a); }

// sigma(x) without the constant C (which cancels in differences)
double sigma_raw(double x, double A, double B, double a) {
    return (A + B * std::cos(lg_a(std::log(x), a))) * x;
}

} // namespace

SigmaExample make_sigma_example(double A, double B, double a, int j_max) {
    if (!(A > B && B > 0.0)) throw std::invalid_argument("sigma_example: need A > B > 0");
    if (!(a > 1.0)) throw std::invalid_argument("sigma_example: need a > 1");
    if (j_max < 3) throw std::invalid_argument("sigma_example: need j_max >= 3");
    if (j_max > 400) throw std::invalid_argument("sigma_example: j_max too large");

    // d_j = sigma(j) - sigma(j-1) = 2^j c_j, defined for j >= 3
    std::vector<double> d(static_cast<std::size_t>(j_max) + 1, 0.0);
    for (int j = 3; j <= j_max; ++j)
        d[static_cast<std::size_t>(j)] = sigma_raw(j, A, B, a) - sigma_raw(j - 1, A, B, a);

    // smallest start index from which c_j > 0 and c_{j+1} <= c_j through j_max;
    // c_{j+1} <= c_j is d_{j+1} <= 2 d_j
    int j0 = -1;
    for (int cand = 3; cand <= j_max / 2; ++cand) {
        bool ok = d[static_cast<std::size_t>(cand)] > 0.0;
        for (int j = cand; ok && j < j_max; ++j)
            ok = d[static_cast<std::size_t>(j + 1)] > 0.0 &&
                 d[static_cast<std::size_t>(j + 1)] <= 2.0 * d[static_cast<std::size_t>(j)];
        if (ok) {
            j0 = cand;
            break;
        }
    }
    if (j0 < 0)
        throw std::runtime_error("sigma_example: no monotone start index j0 <= j_max/2");

    std::vector<ScaledReal> c(static_cast<std::size_t>(j_max) + 1, ScaledReal{});
    for (int j = j0; j <= j_max; ++j)
        c[static_cast<std::size_t>(j)] =
            ScaledReal::from_double(d[static_cast<std::size_t>(j)]).mul_pow2(-j);
    for (int j = 0; j < j0; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j0)];

    // Pin C by the partial-sum identity at k = j0:
    //   sum_{j<=j0} 2^j c_j = sigma_raw(j0) + C, and the head contributes
    //   c_{j0} * (2^{j0} - 1).
    const double cj0 = c[static_cast<std::size_t>(j0)].value();
    const double C = cj0 * (std::ldexp(1.0, j0) - 1.0) - sigma_raw(j0 - 1, A, B, a);

    return SigmaExample{LacunarySpec(std::move(c)), A, B, a, C, j0};
}

LacunarySpec sigma_example(double A, double B, double a, int j_max) {
    return make_sigma_example(A, B, a, j_max).spec;
}

LacunarySpec gap_example(int k_max) {
    if (k_max < 1) throw std::invalid_argument("gap_example: k_max must be >= 1");
    auto N = [](std::int64_t k) -> std::int64_t { return k == 0 ? 1 : k * k; };
    const std::int64_t M = N(k_max + 1);
    std::vector<ScaledReal> c(static_cast<std::size_t>(M) + 1, ScaledReal{});
    c[0] = ScaledReal{1.0, 0};
    c[1] = ScaledReal{1.0, 0};
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const ScaledReal ak = ScaledReal::from_int_shift(k, -N(k + 1));
        for (std::int64_t j = N(k) + 1; j <= N(k + 1); ++j)
            c[static_cast<std::size_t>(j)] = ak;
    }
    return LacunarySpec(std::move(c));
}

// ------------------------------------------------------------------- algebra

SymbolSeries derivative_series(const SymbolSeries& s, int order) {
    if (order < 1) throw std::invalid_argument("derivative_series: order must be >= 1");
    const int deg = s.degree();
    if (order > deg) return SymbolSeries();
    std::vector<cplx> c(static_cast<std::size_t>(deg - order) + 1);
    for (int n = 0; n + order <= deg; ++n) {
        double fac = 1.0;
        for (int i = 1; i <= order; ++i) fac *= static_cast<double>(n + i);
        c[static_cast<std::size_t>(n)] = s.coeffs[static_cast<std::size_t>(n + order)] * fac;
    }
    return SymbolSeries(std::move(c));
}

std::vector<cplx> eval_on_circle_grid(const SymbolSeries& s, std::size_t grid_size) {
    const std::size_t need = 2 * (static_cast<std::size_t>(s.degree()) + 1);
    if (!is_pow2(grid_size) || grid_size < need)
        throw std::invalid_argument(
            "eval_on_circle_grid: grid must be a power of two >= 2*(degree+1) (aliasing)");
    std::vector<cplx> a(grid_size, cplx(0.0, 0.0));
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) a[n] = s.coeffs[n];
    fft_pow2(a, +1);
    return a;
}

} // namespace hdl
