// Command-line surface for the sequence-operator laboratory: kernel tables,
// fractional differences, weighted norms, semigroup/averaging operators,
// identity verification suites, and spectral boundary curves as CSV/JSON/SVG.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cesarolab/cesaro.hpp"
#include "cesarolab/csvio.hpp"
#include "cesarolab/gamma.hpp"
#include "cesarolab/identities.hpp"
#include "cesarolab/semigroups.hpp"
#include "cesarolab/spaces.hpp"
#include "cesarolab/spectra.hpp"
#include "cesarolab/svg.hpp"
#include "cesarolab/weyl.hpp"

using namespace cesarolab;
using json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

cx parse_complex(const std::string& s) {
    double re = 0, im = 0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) >= 1) return {re, im};
    throw CLI::ValidationError("expected a complex number as re[,im]: " + s);
}

double parse_p(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return kInf;
    try {
        return std::stod(s);
    } catch (...) {
        throw CLI::ValidationError("expected a number or 'inf' for p: " + s);
    }
}

std::string beta_slug(cx beta) {
    char buf[64];
    if (beta.imag() == 0)
        std::snprintf(buf, sizeof buf, "%g", beta.real());
    else
        std::snprintf(buf, sizeof buf, "%g%+gi", beta.real(), beta.imag());
    return buf;
}

json report_to_json(const VerificationReport& r) {
    json params = json::object();
    for (const auto& [name, value] : r.params) {
        if (value.imag() == 0)
            params[name] = value.real();
        else
            params[name] = {value.real(), value.imag()};
    }
    return json{{"identity", r.identity},
                {"params", params},
                {"lhs", {r.lhs.real(), r.lhs.imag()}},
                {"rhs", {r.rhs.real(), r.rhs.imag()}},
                {"rel_err", r.rel_err},
                {"tail_bound", r.tail_bound},
                {"terms_used", r.terms_used}};
}

void emit_lines(const std::vector<VerificationReport>& reports, const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        os = &file;
    }
    for (const VerificationReport& r : reports) *os << report_to_json(r).dump() << '\n';
}

std::vector<VerificationReport> run_suite(const std::string& suite) {
    const std::vector<double> alphas{0.3, 0.7, 1.5, 2.6};
    const std::vector<double> uvr{0.5, 1.0, 2.5};
    const std::vector<std::size_t> ms{0, 1, 5, 25, 60};
    std::vector<VerificationReport> out;

    const bool all = suite == "gamma-identities" || suite == "all";
    if (all || suite == "fits") {
        for (double a : alphas)
            for (double u : uvr)
                for (double v : uvr) out.push_back(verify_fits(a, u, v, 1e-10, 200000));
    }
    if (all || suite == "key") {
        for (double a : alphas)
            for (double v : uvr)
                for (double r : uvr)
                    for (std::size_t m : ms) out.push_back(verify_key(a, v, r, m));
    }
    if (all || suite == "funda") {
        for (double a : alphas)
            for (double v : uvr)
                for (double r : uvr)
                    for (std::size_t m : ms) out.push_back(verify_funda(a, v, r, m));
    }
    if (all || suite == "special") {
        for (double a : alphas)
            for (double v : uvr)
                for (std::size_t m : ms) {
                    auto [first, second] = verify_special_cases(a, v, m);
                    out.push_back(first);
                    out.push_back(second);
                }
    }
    if (all || suite == "llave") {
        const std::vector<cx> ts{cx(0.1, 0.0), cx(1.0, 0.0), cx(3.0, 0.0), cx(0.2, 0.1)};
        const std::vector<std::pair<std::size_t, std::size_t>> nu{{0, 0}, {3, 5}, {6, 2}, {5, 5}};
        for (double a : alphas)
            for (const cx& t : ts)
                for (auto [n, u] : nu) out.push_back(verify_llave(a, t, n, u, 1e-10));
    }
    if (out.empty()) throw CLI::ValidationError("unknown suite: " + suite);
    return out;
}

PlotSeries curve_to_series(const SpectralCurve& c, const std::string& label) {
    PlotSeries s;
    s.label = label;
    s.points.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        s.points.push_back({c.w[i].real(), c.w[i].imag()});
    return s;
}

struct FigureSpec {
    std::string name;
    double p;
    std::vector<cx> betas;
    bool unit_circle;
};

void run_figures(const std::string& outdir) {
    namespace fs = std::filesystem;
    fs::create_directories(outdir);
    const std::vector<FigureSpec> figures{
        {"figure1", 2.0, {cx(0.5, 0), cx(1, 0), cx(2, 0), cx(3, 0), cx(5, 0)}, true},
        {"figure2", 1.5, {cx(100, 0), cx(200, 0)}, false},
        {"figure3", kInf, {cx(1, 0), cx(10, 0), cx(100, 0), cx(1000, 0), cx(10000, 0)}, true},
        {"figure4", 2.0, {cx(1, -1), cx(1, 1)}, false},
        {"figure5", 1.5, {cx(100, 1), cx(100, 20), cx(100, 100)}, false},
        {"figure6", 2.0, {cx(1, 15), cx(1, 50)}, false},
        {"figure7", kInf, {cx(1000, 1000), cx(2000, 2000), cx(1000, 2000)}, false},
    };
    for (const FigureSpec& fig : figures) {
        std::vector<PlotSeries> series;
        for (const cx& beta : fig.betas) {
            const SpectralCurve c = trace_border(beta, fig.p, Side::primal);
            const std::string slug = fig.name + "_beta_" + beta_slug(beta);
            write_curve_csv_file((fs::path(outdir) / (slug + ".csv")).string(), c);
            series.push_back(curve_to_series(c, "beta=" + beta_slug(beta)));
        }
        SvgOptions opts;
        opts.unit_circle = fig.unit_circle;
        write_svg_file((fs::path(outdir) / (fig.name + ".svg")).string(), series, opts);
        std::cout << fig.name << ": " << fig.betas.size() << " curve(s) written\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"numerical laboratory for generalized Cesaro operators on weighted sequence spaces"};
    app.require_subcommand(1);

    // kernel
    auto* kernel_cmd = app.add_subcommand("kernel", "tabulate Cesaro numbers k^alpha(0..N) as CSV");
    std::string kernel_alpha = "1";
    std::size_t kernel_n = 16;
    std::string kernel_out;
    kernel_cmd->add_option("--alpha", kernel_alpha, "order, re[,im]");
    kernel_cmd->add_option("--n", kernel_n, "last index");
    kernel_cmd->add_option("--out", kernel_out, "output CSV (default stdout)");

    // weyl
    auto* weyl_cmd = app.add_subcommand("weyl", "apply W^order to a CSV sequence");
    double weyl_order = 1.0;
    std::string weyl_in, weyl_out;
    weyl_cmd->add_option("--order", weyl_order, "positive: difference, negative: sum");
    weyl_cmd->add_option("--in", weyl_in, "input CSV")->required();
    weyl_cmd->add_option("--out", weyl_out, "output CSV (default stdout)");

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "weighted sequence-space norm of a CSV sequence");
    double norm_alpha = 0.0;
    std::string norm_p = "2", norm_in;
    norm_cmd->add_option("--alpha", norm_alpha, "order alpha >= 0");
    norm_cmd->add_option("--p", norm_p, "exponent in [1,inf], 'inf' allowed");
    norm_cmd->add_option("--in", norm_in, "input CSV")->required();

    // apply
    auto* apply_cmd = app.add_subcommand("apply", "apply a semigroup or averaging operator");
    std::string apply_op = "T", apply_p = "inf", apply_beta = "1", apply_via = "direct";
    double apply_t = 1.0, apply_tol = 1e-10;
    std::size_t apply_nout = 64;
    std::string apply_in, apply_out;
    bool apply_report = false;
    apply_cmd->add_option("--op", apply_op, "T|S|Tp|Sp|cesaro|cesaro-dual");
    apply_cmd->add_option("--t", apply_t, "time parameter (semigroups)");
    apply_cmd->add_option("--p", apply_p, "weight exponent");
    apply_cmd->add_option("--beta", apply_beta, "averaging order, re[,im]");
    apply_cmd->add_option("--via", apply_via, "direct|subordination (cesaro only)");
    apply_cmd->add_option("--n-out", apply_nout, "output truncation");
    apply_cmd->add_option("--tol", apply_tol, "quadrature tolerance (subordination)");
    apply_cmd->add_option("--in", apply_in, "input CSV")->required();
    apply_cmd->add_option("--out", apply_out, "output CSV (default stdout)");
    apply_cmd->add_flag("--report", apply_report, "print a JSON decay/tail report to stderr");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run identity suites, emit JSON lines");
    std::string verify_suite = "gamma-identities", verify_out;
    verify_cmd->add_option("--suite", verify_suite, "gamma-identities|fits|key|funda|special|llave");
    verify_cmd->add_option("--out", verify_out, "output file (default stdout)");

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "trace a spectral border curve");
    std::string spec_beta = "1", spec_p = "2", spec_side = "dual", spec_out, spec_svg;
    double spec_angle = 0.02, spec_cutoff = 1e-4, spec_tmax = 0;
    bool spec_circle = false;
    spec_cmd->add_option("--beta", spec_beta, "order, re[,im], Re > 0");
    spec_cmd->add_option("--p", spec_p, "exponent");
    spec_cmd->add_option("--side", spec_side, "primal|dual");
    spec_cmd->add_option("--angle-tol", spec_angle, "chord turn-angle refinement threshold");
    spec_cmd->add_option("--cutoff", spec_cutoff, "tail cutoff on |w|");
    spec_cmd->add_option("--t-max", spec_tmax, "fixed parameter reach (0 = auto)");
    spec_cmd->add_option("--out", spec_out, "CSV path (default stdout)");
    spec_cmd->add_option("--svg", spec_svg, "also write an SVG plot");
    spec_cmd->add_flag("--unit-circle", spec_circle, "overlay the unit circle in the SVG");

    // crossings
    auto* cross_cmd = app.add_subcommand("crossings", "axis crossings of a border curve (JSON)");
    std::string cross_beta = "1", cross_p = "2", cross_side = "dual", cross_out;
    double cross_angle = 0.02;
    cross_cmd->add_option("--beta", cross_beta, "order, re[,im]");
    cross_cmd->add_option("--p", cross_p, "exponent");
    cross_cmd->add_option("--side", cross_side, "primal|dual");
    cross_cmd->add_option("--angle-tol", cross_angle, "refinement threshold");
    cross_cmd->add_option("--out", cross_out, "output file (default stdout)");

    // envelope
    auto* env_cmd = app.add_subcommand("envelope", "peak |w| per curve at p = inf (CSV table)");
    std::string env_betas = "1,10,100", env_out;
    env_cmd->add_option("--betas", env_betas, "comma-separated positive orders");
    env_cmd->add_option("--out", env_out, "output CSV (default stdout)");

    // figures
    auto* fig_cmd = app.add_subcommand("figures", "write the full set of border-curve datasets");
    std::string fig_outdir = "figures";
    fig_cmd->add_option("--outdir", fig_outdir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*kernel_cmd) {
            const KernelTable table = cesaro_kernel(parse_complex(kernel_alpha), kernel_n);
            std::vector<cx> vals(kernel_n + 1);
            for (std::size_t n = 0; n <= kernel_n; ++n) vals[n] = table.value(n);
            if (table.scale() == KernelScale::log_scaled)
                std::cerr << "note: magnitudes left double range; CSV holds inf/0 beyond it\n";
            const FiniteSequence seq{std::move(vals)};
            if (kernel_out.empty())
                write_sequence_csv(std::cout, seq);
            else
                write_sequence_csv_file(kernel_out, seq);
        } else if (*weyl_cmd) {
            const FiniteSequence f = read_sequence_csv_file(weyl_in);
            const FiniteSequence g = weyl_apply(f, weyl_order);
            if (weyl_out.empty())
                write_sequence_csv(std::cout, g);
            else
                write_sequence_csv_file(weyl_out, g);
        } else if (*norm_cmd) {
            const FiniteSequence f = read_sequence_csv_file(norm_in);
            const NormResult r = norm(f, {norm_alpha, parse_p(norm_p)});
            std::cout << json{{"value", r.value},
                              {"tail_bound", r.tail_bound},
                              {"truncation", r.exact ? json("exact") : json(r.truncation)}}
                             .dump()
                      << '\n';
        } else if (*apply_cmd) {
            const FiniteSequence f = read_sequence_csv_file(apply_in);
            const double p = parse_p(apply_p);
            FiniteSequence result;
            json report;
            if (apply_op == "T" || apply_op == "Tp") {
                const TruncatedSequence t = apply_op == "T"
                                                ? apply_T(f, apply_t, apply_nout)
                                                : apply_T_weighted(f, apply_t, p, apply_nout);
                result = FiniteSequence{std::vector<cx>(t.values)};
                report = {{"decay", "geometric"}, {"ratio", t.ratio}, {"tail_bound", t.tail_bound}};
            } else if (apply_op == "S" || apply_op == "Sp") {
                result = apply_op == "S" ? apply_S(f, apply_t) : apply_S_weighted(f, apply_t, p);
                report = {{"decay", "finite"}, {"tail_bound", 0.0}};
            } else if (apply_op == "cesaro" || apply_op == "cesaro-dual") {
                const cx beta = parse_complex(apply_beta);
                const bool dual = apply_op == "cesaro-dual";
                if (apply_via == "subordination") {
                    const double pv = std::isinf(p) && dual ? 2.0 : p;
                    std::vector<cx> vals(apply_nout + 1);
                    for (std::size_t n = 0; n <= apply_nout; ++n)
                        vals[n] = cesaro_via_subordination(f, beta, pv, n, apply_tol, dual);
                    result = FiniteSequence{std::move(vals)};
                    report = {{"via", "subordination"}, {"tol", apply_tol}};
                } else if (dual) {
                    result = cesaro_dual_direct(f, beta);
                    report = {{"decay", "finite"}, {"tail_bound", 0.0}};
                } else {
                    const TruncatedSequence t = cesaro_direct(f, beta, apply_nout);
                    result = FiniteSequence{std::vector<cx>(t.values)};
                    report = {{"decay", "polynomial"},
                              {"exponent", t.exponent},
                              {"tail_bound", t.tail_bound}};
                }
            } else {
                throw CLI::ValidationError("unknown --op: " + apply_op);
            }
            if (apply_report) std::cerr << report.dump() << '\n';
            if (apply_out.empty())
                write_sequence_csv(std::cout, result);
            else
                write_sequence_csv_file(apply_out, result);
        } else if (*verify_cmd) {
            emit_lines(run_suite(verify_suite), verify_out);
        } else if (*spec_cmd || *cross_cmd) {
            const bool crossings_mode = static_cast<bool>(*cross_cmd);
            const std::string side_str = crossings_mode ? cross_side : spec_side;
            if (side_str != "primal" && side_str != "dual")
                throw CLI::ValidationError("--side must be primal or dual");
            const Side side = side_str == "primal" ? Side::primal : Side::dual;
            TraceOptions opts;
            opts.angle_tol = crossings_mode ? cross_angle : spec_angle;
            if (!crossings_mode) {
                opts.cutoff = spec_cutoff;
                opts.t_max = spec_tmax;
            }
            const cx beta = parse_complex(crossings_mode ? cross_beta : spec_beta);
            const double p = parse_p(crossings_mode ? cross_p : spec_p);
            const SpectralCurve curve = trace_border(beta, p, side, opts);
            if (crossings_mode) {
                const CrossingReport rep = find_axis_crossings(curve);
                auto to_json = [](const std::vector<Crossing>& cs) {
                    json arr = json::array();
                    for (const Crossing& c : cs)
                        arr.push_back({{"t", c.t}, {"re", c.w.real()}, {"im", c.w.imag()}});
                    return arr;
                };
                const json out{{"beta", {beta.real(), beta.imag()}},
                               {"p", std::isinf(p) ? json("inf") : json(p)},
                               {"side", side_str},
                               {"real_axis", to_json(rep.real_axis)},
                               {"imag_axis", to_json(rep.imag_axis)}};
                if (cross_out.empty()) {
                    std::cout << out.dump(2) << '\n';
                } else {
                    std::ofstream file(cross_out);
                    if (!file) throw std::runtime_error("cannot open " + cross_out);
                    file << out.dump(2) << '\n';
                }
            } else {
                if (spec_out.empty())
                    write_curve_csv(std::cout, curve);
                else
                    write_curve_csv_file(spec_out, curve);
                if (!spec_svg.empty()) {
                    SvgOptions svg_opts;
                    svg_opts.unit_circle = spec_circle;
                    write_svg_file(spec_svg, {curve_to_series(curve, "beta=" + beta_slug(beta))},
                                   svg_opts);
                }
            }
        } else if (*env_cmd) {
            std::vector<double> betas;
            std::size_t pos = 0;
            while (pos < env_betas.size()) {
                std::size_t next = env_betas.find(',', pos);
                if (next == std::string::npos) next = env_betas.size();
                betas.push_back(std::stod(env_betas.substr(pos, next - pos)));
                pos = next + 1;
            }
            const std::vector<EnvelopeRow> rows = envelope_scan(betas);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!env_out.empty()) {
                file.open(env_out);
                if (!file) throw std::runtime_error("cannot open " + env_out);
                os = &file;
            }
            *os << "beta,max_abs_w,argmax_t\n";
            for (const EnvelopeRow& r : rows)
                *os << format_double(r.beta) << ',' << format_double(r.max_abs_w) << ','
                    << format_double(r.argmax_t) << '\n';
        } else if (*fig_cmd) {
            run_figures(fig_outdir);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
