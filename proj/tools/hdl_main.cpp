// hdl: spectral laboratory for Hankel operators on the Hardy space.
//
// Subcommands: besov, dyadic, hankel, bergman, dixmier, demo-nonmeasurable,
// example.  Reports are deterministic: the same configuration produces
// byte-identical output (floats at 17 significant digits, fixed field order).
// Exit codes: 0 success, 2 configuration error, 3 numeric failure.

#include <CLI11.hpp>

#include "hdl/dixmier.hpp"
#include "hdl/dyadic.hpp"
#include "hdl/fft.hpp"
#include "hdl/hankel.hpp"
#include "hdl/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace hdl;

namespace {

constexpr int kSchemaVersion = 1;

// ------------------------------------------------------------------ plumbing

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double to_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: '" + s + "'");
    return v;
}

// "geometric:start:stop:count" or "explicit:[v1,v2,...]" (brackets optional)
std::vector<double> parse_grid(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts[0] == "geometric") {
        if (parts.size() != 4) throw std::invalid_argument("grid: geometric:start:stop:count");
        const double start = to_double(parts[1]), stop = to_double(parts[2]);
        const int count = static_cast<int>(to_double(parts[3]));
        if (count < 2 || !(start > 0.0) || !(stop > 0.0) || start == stop)
            throw std::invalid_argument("grid: bad geometric range");
        std::vector<double> g;
        for (int i = 0; i < count; ++i)
            g.push_back(start * std::pow(stop / start, static_cast<double>(i) / (count - 1.0)));
        return g;
    }
    if (parts[0] == "explicit") {
        if (parts.size() != 2) throw std::invalid_argument("grid: explicit:[v1,v2,...]");
        std::string body = parts[1];
        if (!body.empty() && body.front() == '[') body = body.substr(1);
        if (!body.empty() && body.back() == ']') body.pop_back();
        std::vector<double> g;
        for (const auto& tok : split(body, ','))
            if (!tok.empty()) g.push_back(to_double(tok));
        if (g.empty()) throw std::invalid_argument("grid: empty explicit list");
        return g;
    }
    throw std::invalid_argument("grid: unknown kind '" + parts[0] + "'");
}

std::vector<double> default_p_grid() {
    std::vector<double> g;
    for (int m = 1; m <= 12; ++m) g.push_back(1.0 + std::ldexp(1.0, -m));
    return g;
}

std::vector<double> default_t_grid() {
    std::vector<double> g;
    for (int i = 0; i < 25; ++i) g.push_back(1e2 * std::pow(1e6, i / 24.0));
    return g;
}

std::vector<double> descending(std::vector<double> g) {
    std::sort(g.begin(), g.end(), std::greater<double>());
    return g;
}

std::vector<double> ascending(std::vector<double> g) {
    std::sort(g.begin(), g.end());
    return g;
}

// --symbol accepts inline JSON, generator shorthands, or a file path:
//   '{"kind":...}' | monomial:k[:re[:im]] | gap:k_max |
//   sigma:A:B:a:j_max | lacunary:c0,c1,... | path/to/file.json
SymbolInput resolve_symbol(const std::string& src) {
    if (src.empty()) throw std::invalid_argument("--symbol is required");
    if (src.front() == '{') return parse_symbol_json(src);
    const auto parts = split(src, ':');
    if (parts[0] == "monomial") {
        if (parts.size() < 2 || parts.size() > 4)
            throw std::invalid_argument("symbol: monomial:k[:re[:im]]");
        const int k = static_cast<int>(to_double(parts[1]));
        const double re = parts.size() > 2 ? to_double(parts[2]) : 1.0;
        const double im = parts.size() > 3 ? to_double(parts[3]) : 0.0;
        return monomial_symbol(k, cplx(re, im));
    }
    if (parts[0] == "gap") {
        if (parts.size() != 2) throw std::invalid_argument("symbol: gap:k_max");
        return gap_example(static_cast<int>(to_double(parts[1])));
    }
    if (parts[0] == "sigma") {
        if (parts.size() != 5) throw std::invalid_argument("symbol: sigma:A:B:a:j_max");
        return sigma_example(to_double(parts[1]), to_double(parts[2]), to_double(parts[3]),
                             static_cast<int>(to_double(parts[4])));
    }
    if (parts[0] == "lacunary") {
        if (parts.size() != 2) throw std::invalid_argument("symbol: lacunary:c0,c1,...");
        std::vector<double> c;
        for (const auto& tok : split(parts[1], ',')) c.push_back(to_double(tok));
        return LacunarySpec::from_values(c);
    }
    return read_symbol_file(src);
}

// materialize for operations that need Taylor coefficients; max_freq > 0
// truncates lacunary tails first (exact for Hankel truncations of size
// N <= (max_freq+1)/2)
SymbolSeries materialize(const SymbolInput& in, std::int64_t max_freq = 0) {
    if (std::holds_alternative<SymbolSeries>(in)) return std::get<SymbolSeries>(in);
    LacunarySpec spec = std::get<LacunarySpec>(in);
    if (max_freq > 0) spec = lacunary_truncate(spec, max_freq);
    return lacunary_to_series(spec);
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

void emit_curve(JsonWriter& w, const char* name, const LimitCurve& c) {
    w.key(name).begin_object();
    w.key("grid").value(c.x);
    w.key("values").value(c.y);
    w.key("estimate").value(c.estimate);
    w.key("method").value(to_string(c.method));
    w.key("plateau").value(c.plateau);
    w.end_object();
}

struct CommonOpts {
    std::string symbol;
    std::string out;
    std::string format = "json";
    std::string p_grid_spec;
    std::string t_grid_spec;
    std::int64_t deg = 0; // lacunary truncation limit, 0 = keep all
};

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_symbol = true) {
    if (wants_symbol)
        cmd->add_option("--symbol", o.symbol,
                        "symbol source: inline JSON, monomial:k[:re[:im]], gap:k_max, "
                        "sigma:A:B:a:j_max, lacunary:c0,c1,..., or a file path");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--deg", o.deg, "drop lacunary frequencies above this index");
}

std::vector<double> resolve_p_grid(const CommonOpts& o) {
    return descending(o.p_grid_spec.empty() ? default_p_grid() : parse_grid(o.p_grid_spec));
}

std::vector<double> resolve_t_grid(const CommonOpts& o) {
    return ascending(o.t_grid_spec.empty() ? default_t_grid() : parse_grid(o.t_grid_spec));
}

// ---------------------------------------------------------------- besov cmd

// closed-form power integral for one-term symbols c z^d at derivative order o:
// |c d!/(d-o)!|^p * pi * Gamma((d-o)p/2+1) Gamma(op-1) / Gamma((d-o)p/2+op)
std::optional<double> monomial_gamma_power(const SymbolSeries& s, int order, double p) {
    int d = -1;
    cplx coef(0.0, 0.0);
    for (int n = 0; n <= s.degree(); ++n)
        if (s.coeff(n) != cplx(0.0, 0.0)) {
            if (d >= 0) return std::nullopt;
            d = n;
            coef = s.coeff(n);
        }
    if (d < order) return std::nullopt;
    double fac = 1.0;
    for (int i = 0; i < order; ++i) fac *= static_cast<double>(d - i);
    const double amp = std::abs(coef) * fac;
    const double a = (d - order) * p / 2.0;
    return std::pow(amp, p) * M_PI *
           std::exp(std::lgamma(a + 1.0) + std::lgamma(order * p - 1.0) -
                    std::lgamma(a + order * p));
}

int cmd_besov(const CommonOpts& o, int order, int R, std::size_t M) {
    const SymbolSeries f = materialize(resolve_symbol(o.symbol), o.deg);
    const DiscGrid grid(R, M);
    const auto p_grid = resolve_p_grid(o);
    const DyadicBlocks blocks = project_blocks(f, blocks_for_degree(f.degree()));

    struct Row {
        double p, integral, scaled, dyadic, scaled_dyadic, ratio;
        std::optional<double> golden;
    };
    std::vector<Row> rows;
    for (double p : p_grid) {
        Row r{};
        r.p = p;
        r.integral = besov_seminorm_integral(f, order, p, grid);
        r.scaled = (p - 1.0) * std::pow(r.integral, p);
        r.dyadic = dyadic_besov_norm(blocks, 1.0 / p, p, p);
        r.scaled_dyadic = (p - 1.0) * dyadic_nu_power(blocks, p);
        r.ratio = r.dyadic > 0.0 ? r.integral / r.dyadic : 0.0;
        r.golden = monomial_gamma_power(f, order, p);
        rows.push_back(r);
    }

    if (o.format == "csv") {
        std::string csv = "p,integral_norm,scaled_integral_power,dyadic_norm,"
                          "scaled_dyadic_power,integral_over_dyadic,gamma_closed_form\n";
        for (const auto& r : rows) {
            csv += format_g17(r.p) + "," + format_g17(r.integral) + "," + format_g17(r.scaled) +
                   "," + format_g17(r.dyadic) + "," + format_g17(r.scaled_dyadic) + "," +
                   format_g17(r.ratio) + "," + (r.golden ? format_g17(*r.golden) : "") + "\n";
        }
        write_output(o.out, csv);
        return 0;
    }
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("command").value("besov");
    w.key("order").value(order);
    w.key("degree").value(f.degree());
    w.key("rows").begin_array();
    for (const auto& r : rows) {
        w.begin_object();
        w.key("p").value(r.p);
        w.key("integral_norm").value(r.integral);
        w.key("scaled_integral_power").value(r.scaled);
        w.key("dyadic_norm").value(r.dyadic);
        w.key("scaled_dyadic_power").value(r.scaled_dyadic);
        w.key("integral_over_dyadic").value(r.ratio);
        if (r.golden) w.key("gamma_closed_form").value(*r.golden);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    write_output(o.out, w.str() + "\n");
    return 0;
}

// --------------------------------------------------------------- dyadic cmd

int cmd_dyadic(const CommonOpts& o, double p, double s, double q) {
    const SymbolSeries f = materialize(resolve_symbol(o.symbol), o.deg);
    const DyadicBlocks blocks = project_blocks(f, blocks_for_degree(f.degree()));
    std::vector<double> norms, weighted;
    for (int n = 0; n <= blocks.n_max; ++n) {
        const auto& b = blocks.blocks[static_cast<std::size_t>(n)];
        const double bn =
            block_lp_norm(b, p, next_pow2(4 * (static_cast<std::size_t>(b.degree()) + 1)));
        norms.push_back(bn);
        weighted.push_back(std::pow(2.0, n * s) * bn);
    }
    const double total = dyadic_besov_norm(blocks, s, p, q);

    if (o.format == "csv") {
        std::string csv = "n,block_lp_norm,weighted\n";
        for (std::size_t n = 0; n < norms.size(); ++n)
            csv += std::to_string(n) + "," + format_g17(norms[n]) + "," +
                   format_g17(weighted[n]) + "\n";
        write_output(o.out, csv);
        return 0;
    }
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("command").value("dyadic");
    w.key("p").value(p);
    w.key("s").value(s);
    w.key("q").value(q);
    w.key("block_norms").value(norms);
    w.key("weighted").value(weighted);
    w.key("norm").value(total);
    w.end_object();
    write_output(o.out, w.str() + "\n");
    return 0;
}

// --------------------------------------------------------- spectrum reports

std::string spectrum_csv(const SingularSpectrum& sp) {
    std::string csv = "j,s_j,cumulative,cumulative_over_log\n";
    double cum = 0.0;
    for (std::size_t j = 0; j < sp.size(); ++j) {
        cum += sp.s[j];
        csv += std::to_string(j) + "," + format_g17(sp.s[j]) + "," + format_g17(cum) + "," +
               format_g17(cum / std::log(static_cast<double>(j) + 2.0)) + "\n";
    }
    return csv;
}

void emit_spectrum_summary(JsonWriter& w, const SingularSpectrum& sp) {
    const double inf = std::numeric_limits<double>::infinity();
    w.key("summary").begin_object();
    w.key("schatten_1").value(schatten_norm(sp, 1.0));
    w.key("schatten_2").value(schatten_norm(sp, 2.0));
    w.key("dixmier_norm").value(dixmier_norm(sp));
    w.key("lorentz_1_inf").value(schatten_lorentz(sp, 1.0, inf));
    w.key("clipped").value(sp.clipped);
    w.end_object();
}

void emit_spectrum_json(const CommonOpts& o, const char* command, const SingularSpectrum& sp,
                        const std::function<void(JsonWriter&)>& extra) {
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("command").value(command);
    extra(w);
    emit_spectrum_summary(w, sp);
    w.key("spectrum").value(sp.s);
    w.end_object();
    write_output(o.out, w.str() + "\n");
}

int cmd_hankel(const CommonOpts& o, int N) {
    const SymbolInput in = resolve_symbol(o.symbol);
    const std::int64_t cutoff = o.deg > 0 ? o.deg : 2 * static_cast<std::int64_t>(N) - 1;
    const SymbolSeries f = materialize(in, cutoff);
    const HankelTruncation h = hankel_matrix(f, N);
    const SingularSpectrum sp = singular_values(h);
    if (o.format == "csv") {
        write_output(o.out, spectrum_csv(sp));
        return 0;
    }
    emit_spectrum_json(o, "hankel", sp, [&](JsonWriter& w) {
        w.key("N").value(N);
        w.key("degree").value(f.degree());
    });
    return 0;
}

int cmd_bergman(const CommonOpts& o, double alpha, int N) {
    const SymbolSeries f = materialize(resolve_symbol(o.symbol), o.deg);
    const BergmanSpectrum b = bergman_hankel_spectrum(f, alpha, N);

    // target sqrt(alpha+1) * (1/2pi) int |f'|
    const SymbolSeries df = derivative_series(f, 1);
    const std::size_t grid = next_pow2(4 * (static_cast<std::size_t>(df.degree()) + 1));
    const double target = std::sqrt(alpha + 1.0) * block_lp_norm(df, 1.0, grid);

    double cum = 0.0, curve_end = 0.0;
    for (std::size_t j = 0; j < b.spec.size(); ++j) {
        cum += b.spec.s[j];
        curve_end = cum / std::log(static_cast<double>(j) + 2.0);
    }

    if (o.format == "csv") {
        write_output(o.out, spectrum_csv(b.spec));
        return 0;
    }
    emit_spectrum_json(o, "bergman", b.spec, [&](JsonWriter& w) {
        w.key("N").value(b.N);
        w.key("alpha").value(alpha);
        w.key("degree").value(f.degree());
        w.key("tail_coeff").value(b.tail_coeff);
        w.key("trace_target").value(target);
        w.key("curve_at_end").value(curve_end);
    });
    return 0;
}

// -------------------------------------------------------------- dixmier cmd

int cmd_dixmier(const CommonOpts& o, int R, std::size_t M) {
    const SymbolInput in = resolve_symbol(o.symbol);
    const auto p_grid = resolve_p_grid(o);
    const auto t_grid = resolve_t_grid(o);

    EquivalenceReport rep;
    if (std::holds_alternative<LacunarySpec>(in)) {
        LacunarySpec spec = std::get<LacunarySpec>(in);
        if (o.deg > 0) spec = lacunary_truncate(spec, o.deg);
        rep = equivalence_scan(spec, p_grid, t_grid);
    } else {
        const DiscGrid grid(R, M);
        rep = equivalence_scan(std::get<SymbolSeries>(in), p_grid, t_grid, grid);
    }

    if (o.format == "csv") {
        std::string csv = "quantity,x,y\n";
        const auto dump = [&](const char* name, const std::optional<LimitCurve>& c) {
            if (!c) return;
            for (std::size_t i = 0; i < c->x.size(); ++i)
                csv += std::string(name) + "," + format_g17(c->x[i]) + "," +
                       format_g17(c->y[i]) + "\n";
        };
        dump("scaled_area", rep.scaled_area);
        dump("log_area", rep.log_area);
        dump("scaled_dyadic", rep.scaled_dyadic);
        dump("log_dyadic", rep.log_dyadic);
        write_output(o.out, csv);
        return 0;
    }

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("command").value("dixmier");
    const auto emit_opt = [&](const char* name, const std::optional<LimitCurve>& c) {
        if (c)
            emit_curve(w, name, *c);
        else
            w.key(name).value("absent");
    };
    emit_opt("scaled_area", rep.scaled_area);
    emit_opt("log_area", rep.log_area);
    emit_opt("scaled_dyadic", rep.scaled_dyadic);
    emit_opt("log_dyadic", rep.log_dyadic);
    const auto est = rep.estimates();
    w.key("estimates").value(est);
    w.key("pairwise_ratios").begin_array();
    for (double a : est) {
        w.begin_array();
        for (double b : est) w.value(b != 0.0 ? a / b : std::numeric_limits<double>::quiet_NaN());
        w.end_array();
    }
    w.end_array();
    w.end_object();
    write_output(o.out, w.str() + "\n");
    return 0;
}

int cmd_demo(const CommonOpts& o, double delta, double A, int k_cap) {
    const DemoReport rep = nonmeasurability_demo(delta, A, k_cap);
    if (o.format == "csv") {
        std::string csv = "k,mean_b1,mean_b2,ratio\n";
        for (std::size_t k = 0; k < rep.curve1.size(); ++k)
            csv += std::to_string(k + 1) + "," + format_g17(rep.curve1[k]) + "," +
                   format_g17(rep.curve2[k]) + "," +
                   format_g17(rep.curve1[k] / rep.curve2[k]) + "\n";
        write_output(o.out, csv);
        return 0;
    }
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("command").value("demo-nonmeasurable");
    w.key("delta").value(rep.delta);
    w.key("A").value(rep.A);
    w.key("B").value(rep.B);
    w.key("a").value(rep.a);
    w.key("q").value(rep.q);
    w.key("k_max").value(rep.k_max);
    w.key("L1").value(rep.L1);
    w.key("L2").value(rep.L2);
    w.key("ratio").value(rep.ratio);
    w.key("expected").value(rep.expected);
    w.key("rel_err").value(rep.rel_err);
    w.key("pass").value(rep.pass);
    w.key("curve_b1").value(rep.curve1);
    w.key("curve_b2").value(rep.curve2);
    w.end_object();
    write_output(o.out, w.str() + "\n");
    return 0;
}

int cmd_example(const CommonOpts& o, const std::string& family, int k_max, double A, double B,
                double a, int j_max) {
    std::string text;
    if (family == "gap")
        text = symbol_to_json(gap_example(k_max));
    else if (family == "sigma")
        text = symbol_to_json(sigma_example(A, B, a, j_max));
    else
        throw std::invalid_argument("example: family must be gap or sigma");
    write_output(o.out, text + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for Hankel-operator spectral asymptotics on the disc"};
    app.require_subcommand(1);

    CommonOpts o;
    int order = 2, N = 256, R = 256, k_max = 12, j_max = 60, k_cap = 0;
    std::size_t M = 1024;
    double alpha = 0.0, delta = 0.25, A = 2.0, B = 1.0, a = std::exp(1.0);
    double p = 2.0, s = 0.5, q = 2.0;
    std::string family = "gap";

    CLI::App* besov = app.add_subcommand(
        "besov", "integral and dyadic Besov norms across a p-grid");
    add_common(besov, o);
    besov->add_option("--order", order, "derivative order k (default 2)");
    besov->add_option("--R", R, "radial quadrature order");
    besov->add_option("--M", M, "angular grid size (power of two)");
    besov->add_option("--p-grid", o.p_grid_spec, "geometric:start:stop:count or explicit:[...]");

    CLI::App* dyadic = app.add_subcommand("dyadic", "per-block norms of the dyadic decomposition");
    add_common(dyadic, o);
    dyadic->add_option("--p", p, "L^p exponent");
    dyadic->add_option("--s", s, "smoothness weight 2^{ns}");
    dyadic->add_option("--q", q, "l^q exponent (inf as a large number is not needed: use --q-inf)");
    dyadic->add_flag_callback("--q-inf", [&q]() { q = std::numeric_limits<double>::infinity(); },
                              "use the sup over blocks");

    CLI::App* hankel = app.add_subcommand("hankel", "singular spectrum of the Hankel truncation");
    add_common(hankel, o);
    hankel->add_option("--N", N, "truncation size");

    CLI::App* bergman =
        app.add_subcommand("bergman", "weighted Bergman-space Hankel spectrum and trace target");
    add_common(bergman, o);
    bergman->add_option("--alpha", alpha, "weight exponent, > -1");
    bergman->add_option("--N", N, "truncation size");

    CLI::App* dixmier = app.add_subcommand(
        "dixmier", "the four equivalent Dixmier-criterion estimator curves");
    add_common(dixmier, o);
    dixmier->add_option("--p-grid", o.p_grid_spec, "grid for the scaled scans");
    dixmier->add_option("--t-grid", o.t_grid_spec, "grid for the log averages");
    dixmier->add_option("--R", R, "radial quadrature order");
    dixmier->add_option("--M", M, "angular grid size (power of two)");

    CLI::App* demo = app.add_subcommand(
        "demo-nonmeasurable", "two Hardy-mean subsequence limits with ratio 1/delta");
    add_common(demo, o, false);
    demo->add_option("--delta", delta, "ratio parameter in (0,1)");
    demo->add_option("--A", A, "profile amplitude");
    demo->add_option("--k-max", k_cap, "cap on the subsequence index");

    CLI::App* example = app.add_subcommand("example", "emit a generated symbol file");
    add_common(example, o, false);
    example->add_option("--family", family, "gap or sigma");
    example->add_option("--k-max", k_max, "gap: number of blocks");
    example->add_option("--A", A, "sigma: A");
    example->add_option("--B", B, "sigma: B");
    example->add_option("--a", a, "sigma: a");
    example->add_option("--j-max", j_max, "sigma: largest index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (besov->parsed()) return cmd_besov(o, order, R, M);
        if (dyadic->parsed()) return cmd_dyadic(o, p, s, q);
        if (hankel->parsed()) return cmd_hankel(o, N);
        if (bergman->parsed()) return cmd_bergman(o, alpha, N);
        if (dixmier->parsed()) return cmd_dixmier(o, R, M);
        if (demo->parsed()) return cmd_demo(o, delta, A, k_cap);
        if (example->parsed()) return cmd_example(o, family, k_max, A, B, a, j_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
