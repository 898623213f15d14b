#include "hdl/dyadic.hpp"
#include "hdl/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace hdl {

double DyadicWindow::weight_at(std::int64_t k) const {
    if (k < k_min || k > k_max()) return 0.0;
    return weights[static_cast<std::size_t>(k - k_min)];
}

DyadicWindow window_coeffs(int n) {
    if (n < 0) throw std::invalid_argument("window_coeffs: n must be >= 0");
    if (n == 0) return DyadicWindow{0, 0, {1.0, 1.0}};
    if (n > 60) throw std::invalid_argument("window_coeffs: block index too large");
    const std::int64_t lo = std::int64_t{1} << (n - 1);
    const std::int64_t mid = lo << 1;
    const std::int64_t hi = mid << 1;
    DyadicWindow w{n, lo + 1, {}};
    w.weights.reserve(static_cast<std::size_t>(hi - lo - 1));
    for (std::int64_t k = lo + 1; k < hi; ++k) {
        // exact in binary: integer numerators over power-of-two denominators
        const double a = k <= mid ? static_cast<double>(k - lo) / static_cast<double>(lo)
                                  : static_cast<double>(hi - k) / static_cast<double>(mid);
        w.weights.push_back(a);
    }
    return w;
}

int blocks_for_degree(int degree) {
    int n = 0;
    while ((std::int64_t{1} << n) < std::max(degree, 1)) ++n;
    return n;
}

DyadicBlocks project_blocks(const SymbolSeries& s, int n_max) {
    if (n_max < 0) throw std::invalid_argument("project_blocks: n_max must be >= 0");
    DyadicBlocks out;
    out.n_max = n_max;
    out.covers_degree = (std::int64_t{1} << std::min(n_max, 62)) >= s.degree();
    out.blocks.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const DyadicWindow w = window_coeffs(n);
        const std::int64_t top = std::min<std::int64_t>(w.k_max(), s.degree());
        std::vector<cplx> c(static_cast<std::size_t>(std::max<std::int64_t>(top + 1, 1)),
                            cplx(0.0, 0.0));
        for (std::int64_t k = w.k_min; k <= top; ++k)
            c[static_cast<std::size_t>(k)] = s.coeff(k) * w.weight_at(k);
        out.blocks.emplace_back(std::move(c));
    }
    return out;
}

double block_lp_norm(const SymbolSeries& b, double p, std::size_t grid_size) {
    if (!(p >= 1.0)) throw std::domain_error("block_lp_norm: p must be >= 1");
    const std::size_t need = 4 * (static_cast<std::size_t>(b.degree()) + 1);
    if (!is_pow2(grid_size) || grid_size < need)
        throw std::invalid_argument(
            "block_lp_norm: grid must be a power of two >= 4*(degree+1) (aliasing)");
    const auto vals = eval_on_circle_grid(b, grid_size);
    double acc = 0.0;
    for (const cplx& v : vals) acc += std::pow(std::abs(v), p);
    return std::pow(acc / static_cast<double>(grid_size), 1.0 / p);
}

namespace {

std::size_t block_grid(const SymbolSeries& b, int oversample) {
    return next_pow2(static_cast<std::size_t>(oversample) *
                     (static_cast<std::size_t>(b.degree()) + 1));
}

} // namespace

double dyadic_besov_norm(const DyadicBlocks& blocks, double s, double p, double q) {
    if (!(p >= 1.0)) throw std::domain_error("dyadic_besov_norm: p must be >= 1");
    if (!(q >= 1.0)) throw std::domain_error("dyadic_besov_norm: q must be >= 1 or infinity");
    double acc = 0.0, sup = 0.0;
    for (int n = 0; n <= blocks.n_max; ++n) {
        const auto& b = blocks.blocks[static_cast<std::size_t>(n)];
        const double bn = block_lp_norm(b, p, block_grid(b, 4));
        const double term = std::pow(2.0, n * s) * bn;
        if (std::isinf(q))
            sup = std::max(sup, term);
        else
            acc += std::pow(term, q);
    }
    return std::isinf(q) ? sup : std::pow(acc, 1.0 / q);
}

MeasuredSamples phi_samples(const DyadicBlocks& blocks, int oversample) {
    if (oversample < 4) throw std::invalid_argument("phi_samples: oversample must be >= 4");
    MeasuredSamples out;
    for (int n = 0; n <= blocks.n_max; ++n) {
        const auto& b = blocks.blocks[static_cast<std::size_t>(n)];
        const std::size_t grid = next_pow2(static_cast<std::size_t>(oversample) *
                                           (std::size_t{1} << (n + 1)));
        const double mass = std::ldexp(1.0, n) / static_cast<double>(grid); // 2^n / grid
        out.samples.reserve(out.samples.size() + grid);

        // one-term blocks (every lacunary block) have constant modulus
        int nonzero = 0;
        cplx only(0.0, 0.0);
        for (const cplx& c : b.coeffs)
            if (c != cplx(0.0, 0.0)) {
                ++nonzero;
                only = c;
            }
        if (nonzero <= 1) {
            const double v = std::abs(only);
            for (std::size_t j = 0; j < grid; ++j) out.samples.push_back({v, mass});
            continue;
        }

        const auto vals = eval_on_circle_grid(b, grid);
        for (const cplx& v : vals) out.samples.push_back({std::abs(v), mass});
    }
    return out;
}

} // namespace hdl
