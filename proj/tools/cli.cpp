#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "form_spec.hpp"
#include "hkt/report.hpp"
#include "suites.hpp"

namespace hkt::cli {

namespace {

std::string defect_text(const Defect& d) {
    if (d.is_exact_zero()) return "exact-zero";
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << d.value;
    return os.str();
}

void print_summary(const VerificationReport& rep, std::ostream& out) {
    for (const auto& c : rep.checks.checks) {
        out << (c.status == Status::pass ? "[pass] " : c.status == Status::fail ? "[FAIL] " : "[skip] ") << c.name
            << "  (" << defect_text(c.defect) << ")";
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
    }
    for (const auto& f : rep.checks.flags) out << "flag: " << f << "\n";
    out << "status: " << (rep.passed() ? "pass" : "fail") << " (" << rep.checks.checks.size() << " checks, seed "
        << rep.seed << ")\n";
}

/// --out wins; otherwise the directory named by HKT_REPORT_DIR, if set.
std::optional<std::filesystem::path> report_path(const std::string& out_flag, const std::string& subject,
                                                 ReportFormat format) {
    if (!out_flag.empty()) return std::filesystem::path(out_flag);
    const char* dir = std::getenv(kReportDirEnv);
    if (!dir || !*dir) return std::nullopt;
    std::filesystem::create_directories(dir);
    return std::filesystem::path(dir) / (subject + (format == ReportFormat::json ? ".json" : ".md"));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification tool for HKT geometry, torsion identities and instanton moduli models", "hkt"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);

    std::uint64_t seed = 20240917;
    std::string out_flag;
    std::string format_name = "json";
    app.add_option("--seed", seed, "Seed for randomized property checks")->capture_default_str();
    app.add_option("--out", out_flag, "Write the report to this path (default: $HKT_REPORT_DIR/<command>.json)");
    app.add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    app.set_config("--config", "", "key=value file mirroring the flags; command-line flags win");

    std::string q_text;
    auto* hopf = app.add_subcommand("verify-hopf", "Exact checks on the quaternionic Hopf surface");
    hopf->add_option("--q", q_text, "Rational multiplier q > 1")->required();

    auto* flat = app.add_subcommand("verify-flat", "Flat hyperkahler controls");

    ModuliOptions mopts;
    double flow_eps = 0.0;
    auto* moduli = app.add_subcommand("moduli", "Horizontal slice and induced structures on the flat 4-torus");
    moduli->add_option("--grid", mopts.N, "Grid points per axis (N >= 3)")->capture_default_str();
    moduli->add_option("--rank", mopts.n, "Bundle rank (n >= 2)")->capture_default_str();
    moduli->add_option("--tol", mopts.tol, "Tolerance for kernel and identity checks")->capture_default_str();
    auto* flow_opt = moduli->add_option("--flow", flow_eps, "Also run the ASD flow from a flat connection plus eps noise");
    moduli->add_option("--pairs", mopts.form_pairs, "Random slice pairs for the Hermitian-form check")
        ->capture_default_str();
    moduli->add_option("--snapshot", mopts.snapshot, "Save the flowed connection as a field snapshot");

    std::string f_text, omega_text;
    int rank = 1;
    std::vector<std::string> sub_slopes;
    auto* deg = app.add_subcommand("degree", "Degree, slope and stability verdict of a line-bundle curvature");
    deg->add_option("--f", f_text, "Curvature divided by 2 pi, e.g. \"-i*dx0^dx1\"")->required();
    deg->add_option("--omega", omega_text, "Gauduchon form, e.g. \"dx0^dx1 + dx2^dx3\"")->required();
    deg->add_option("--rank", rank, "Rank used for the slope")->capture_default_str();
    deg->add_option("--sub-slopes", sub_slopes, "Slopes of subobjects, comma separated")->delimiter(',');

    auto* report = app.add_subcommand("report", "Run every check and print the report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    const ReportFormat format = parse_report_format(format_name);
    VerificationReport rep;
    rep.seed = seed;
    try {
        if (hopf->parsed()) {
            const Rational q = parse_rational(q_text);
            if (q <= 1) throw std::invalid_argument("--q must be a rational number > 1, got " + q_text);
            rep.subject = "verify-hopf";
            rep.parameters["q"] = q.get_str();
            run_timed(rep, [&] { return hopf_checks(q); });
        } else if (flat->parsed()) {
            rep.subject = "verify-flat";
            run_timed(rep, [] { return flat_checks(); });
        } else if (moduli->parsed()) {
            if (mopts.N < 3) throw std::invalid_argument("--grid must be >= 3");
            if (mopts.n < 2) throw std::invalid_argument("--rank must be >= 2");
            if (!(mopts.tol > 0)) throw std::invalid_argument("--tol must be positive");
            if (flow_opt->count() > 0) {
                if (!(flow_eps > 0)) throw std::invalid_argument("--flow must be positive");
                mopts.flow_eps = flow_eps;
            }
            mopts.seed = seed;
            rep.subject = "moduli";
            rep.parameters = {{"grid", std::to_string(mopts.N)},
                              {"rank", std::to_string(mopts.n)},
                              {"tol", CLI::detail::to_string(mopts.tol)}};
            if (mopts.flow_eps) rep.parameters["flow"] = CLI::detail::to_string(*mopts.flow_eps);
            run_timed(rep, [&] { return moduli_checks(mopts); });
        } else if (deg->parsed()) {
            const RationalForm F = parse_form_spec(f_text, 2);
            const RationalForm omega = parse_form_spec(omega_text, 2);
            std::vector<Rational> subs;
            for (const auto& s : sub_slopes) subs.push_back(parse_rational(s));
            rep.subject = "degree";
            rep.parameters = {{"f", f_text}, {"omega", omega_text}, {"rank", std::to_string(rank)}};
            DegreeResult r;
            run_timed(rep, [&] {
                r = degree_checks(F, omega, rank, subs);
                return r.checks;
            });
            out << "degree: " << r.degree.get_str() << "\nslope: " << r.slope.get_str() << "\nverdict: " << r.verdict
                << "\n";
        } else if (report->parsed()) {
            rep = full_report(seed);
            out << emit_report(rep, format);
            if (!out_flag.empty()) write_report(rep, format, out_flag);
            return rep.passed() ? kExitPass : kExitCheckFailed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "check aborted: " << e.what() << "\n";
        return kExitCheckFailed;
    }

    print_summary(rep, out);
    try {
        if (auto path = report_path(out_flag, rep.subject, format)) {
            write_report(rep, format, *path);
            out << "report: " << path->string() << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rep.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace hkt::cli
