#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdl/dyadic.hpp"
#include "hdl/fft.hpp"
#include "hdl/json_io.hpp"
#include "hdl/rearrange.hpp"

#include <cmath>
#include <random>

using namespace hdl;

TEST_CASE("window_coeffs ramps") {
    const DyadicWindow w0 = window_coeffs(0);
    CHECK(w0.weight_at(0) == 1.0);
    CHECK(w0.weight_at(1) == 1.0);
    CHECK(w0.weight_at(2) == 0.0);

    const DyadicWindow w2 = window_coeffs(2);
    CHECK(w2.weight_at(2) == 0.0); // open interval endpoint
    CHECK(w2.weight_at(3) == 0.5);
    CHECK(w2.weight_at(4) == 1.0);
    CHECK(w2.weight_at(5) == 0.75);
    CHECK(w2.weight_at(6) == 0.5);
    CHECK(w2.weight_at(7) == 0.25);
    CHECK(w2.weight_at(8) == 0.0);
}

TEST_CASE("windows partition unity") {
    // a_{n,k} + a_{n+1,k} = 1 on [2^n, 2^{n+1}] for n >= 1, and the k = 1
    // boundary is covered by W_0 alone
    CHECK(window_coeffs(0).weight_at(1) + window_coeffs(1).weight_at(1) == 1.0);
    for (int n = 1; n <= 9; ++n) {
        const DyadicWindow a = window_coeffs(n), b = window_coeffs(n + 1);
        for (std::int64_t k = std::int64_t{1} << n; k <= std::int64_t{1} << (n + 1); ++k) {
            CHECK(a.weight_at(k) >= 0.0);
            CHECK(a.weight_at(k) <= 1.0);
            CHECK(a.weight_at(k) + b.weight_at(k) == 1.0);
        }
    }
}

TEST_CASE("project_blocks single-frequency placement") {
    const SymbolSeries z4 = monomial_symbol(4, cplx(1.0, 0.0));
    const DyadicBlocks b4 = project_blocks(z4, blocks_for_degree(4));
    for (int n = 0; n <= b4.n_max; ++n)
        for (int k = 0; k <= b4.blocks[static_cast<std::size_t>(n)].degree(); ++k)
            CHECK(b4.blocks[static_cast<std::size_t>(n)].coeff(k) ==
                  (n == 2 && k == 4 ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));

    const SymbolSeries z3 = monomial_symbol(3, cplx(1.0, 0.0));
    const DyadicBlocks b3 = project_blocks(z3, 2);
    CHECK(b3.blocks[1].coeff(3) == cplx(0.5, 0.0));
    CHECK(b3.blocks[2].coeff(3) == cplx(0.5, 0.0));
    CHECK(b3.blocks[0].coeff(3) == cplx(0.0, 0.0));

    const SymbolSeries one = monomial_symbol(0, cplx(1.0, 0.0));
    const DyadicBlocks b0 = project_blocks(one, 3);
    CHECK(b0.blocks[0].coeff(0) == cplx(1.0, 0.0));
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= b0.blocks[static_cast<std::size_t>(n)].degree(); ++k)
            CHECK(b0.blocks[static_cast<std::size_t>(n)].coeff(k) == cplx(0.0, 0.0));

    // too few blocks for the degree is flagged
    CHECK_FALSE(project_blocks(monomial_symbol(5, cplx(1.0, 0.0)), 1).covers_degree);

    // block export keeps the block index next to the taylor payload
    const std::string js = block_to_json(b3.blocks[1], 1);
    CHECK(js.find("\"block_index\":1") != std::string::npos);
    CHECK(js.find("\"kind\":\"taylor\"") != std::string::npos);
}

TEST_CASE("random polynomials reconstruct from their blocks") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        const int deg = 1 + static_cast<int>(rng() % 256);
        std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = cplx(U(rng), U(rng));
        const SymbolSeries f{std::vector<cplx>(c)};
        const DyadicBlocks blocks = project_blocks(f, blocks_for_degree(deg));
        CHECK(blocks.covers_degree);
        for (int k = 0; k <= deg; ++k) {
            cplx sum(0.0, 0.0);
            for (const auto& b : blocks.blocks) sum += b.coeff(k);
            CHECK(std::abs(sum - c[static_cast<std::size_t>(k)]) < 1e-13);
        }
    }
}

TEST_CASE("block_lp_norm basics") {
    // single character: every L^p norm is |c|
    for (int n : {0, 1, 3}) {
        const SymbolSeries b = monomial_symbol(1 << n, cplx(0.37, 0.0));
        for (double p : {1.0, 2.0, 7.0})
            CHECK(block_lp_norm(b, p, 256) == doctest::Approx(0.37).epsilon(1e-12));
    }

    const SymbolSeries onez{std::vector<cplx>{cplx(1.0, 0.0), cplx(1.0, 0.0)}}; // 1 + z
    CHECK(block_lp_norm(onez, 2.0, 64) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    // p -> inf proxy approaches the sup |1 + e^{i theta}| = 2
    CHECK(std::abs(block_lp_norm(onez, 64.0, 256) - 2.0) / 2.0 < 0.05);

    CHECK_THROWS_AS(block_lp_norm(onez, 2.0, 4), std::invalid_argument);
}

TEST_CASE("block_lp_norm at p = 2 matches the Parseval oracle") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        const int deg = static_cast<int>(rng() % 60);
        std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = cplx(U(rng), U(rng));
        double sq = 0.0;
        for (const auto& x : c) sq += std::norm(x);
        const SymbolSeries f{std::move(c)};
        const std::size_t grid = next_pow2(4 * (static_cast<std::size_t>(deg) + 1));
        CHECK(block_lp_norm(f, 2.0, grid) == doctest::Approx(std::sqrt(sq)).epsilon(1e-10));
    }
}

TEST_CASE("dyadic_besov_norm closed forms") {
    // f = z^4: single block at n = 2, norm 2^{2s} with s = 1/p
    for (double p : {1.0, 2.0, 4.0}) {
        const DyadicBlocks b = project_blocks(monomial_symbol(4, cplx(1.0, 0.0)), 3);
        CHECK(dyadic_besov_norm(b, 1.0 / p, p, p) ==
              doctest::Approx(std::pow(2.0, 2.0 / p)).epsilon(1e-12));
    }

    // lacunary: the l^p norm of {2^{n/p} c_n} is (sum 2^n c_n^p)^{1/p}
    const std::vector<double> cs = {1.0, 0.5, 0.25, 0.2};
    const SymbolSeries f = lacunary_to_series(LacunarySpec::from_values(cs));
    for (double p : {1.0, 1.5, 2.0}) {
        double want = 0.0;
        for (std::size_t n = 0; n < cs.size(); ++n)
            want += std::ldexp(std::pow(cs[n], p), static_cast<int>(n));
        want = std::pow(want, 1.0 / p);
        const DyadicBlocks b = project_blocks(f, blocks_for_degree(f.degree()));
        CHECK(dyadic_besov_norm(b, 1.0 / p, p, p) == doctest::Approx(want).epsilon(1e-11));
    }

    // zero symbol
    const DyadicBlocks z = project_blocks(SymbolSeries{}, 2);
    CHECK(dyadic_besov_norm(z, 0.5, 2.0, 2.0) == 0.0);

    // p = q = 2, s = 0 equals the l^2 sum of block norms
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<cplx> c(33);
    for (auto& x : c) x = cplx(U(rng), U(rng));
    const SymbolSeries g{std::move(c)};
    const DyadicBlocks gb = project_blocks(g, blocks_for_degree(g.degree()));
    double sq = 0.0;
    for (const auto& b : gb.blocks) {
        const double bn =
            block_lp_norm(b, 2.0, next_pow2(4 * (static_cast<std::size_t>(b.degree()) + 1)));
        sq += bn * bn;
    }
    CHECK(dyadic_besov_norm(gb, 0.0, 2.0, 2.0) == doctest::Approx(std::sqrt(sq)).epsilon(1e-12));

    // q = infinity is the sup
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(dyadic_besov_norm(gb, 0.0, 2.0, inf) <= dyadic_besov_norm(gb, 0.0, 2.0, 2.0));
}

TEST_CASE("phi_samples bookkeeping and the lacunary exact cloud") {
    const std::vector<double> cs = {1.0, 0.5, 0.125};
    const SymbolSeries f = lacunary_to_series(LacunarySpec::from_values(cs));
    const DyadicBlocks blocks = project_blocks(f, blocks_for_degree(f.degree()));
    const MeasuredSamples cloudv = phi_samples(blocks);

    // total mass = sum_n 2^n, exactly
    double want_mass = 0.0;
    for (int n = 0; n <= blocks.n_max; ++n) want_mass += std::ldexp(1.0, n);
    CHECK(cloudv.total_mass() == want_mass);

    // every sample of block n carries value c_n; the rearrangement equals
    // the closed-form lacunary one
    const StepFunction phi = rearrange(cloudv);
    const StepFunction want = lacunary_rearrangement(LacunarySpec::from_values(cs));
    REQUIRE(phi.pieces() == want.pieces());
    for (std::size_t i = 0; i < phi.pieces(); ++i) {
        CHECK(phi.val[i] == doctest::Approx(want.val[i]).epsilon(1e-14));
        CHECK(phi.bk[i] == doctest::Approx(want.bk[i]).epsilon(1e-14));
    }

    // zero blocks keep their mass
    const DyadicBlocks zb = project_blocks(SymbolSeries{}, 2);
    const MeasuredSamples zc = phi_samples(zb);
    CHECK(zc.total_mass() == 1.0 + 2.0 + 4.0);
    for (const auto& s : zc.samples) CHECK(s.value == 0.0);
}
