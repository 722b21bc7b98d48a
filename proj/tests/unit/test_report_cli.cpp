#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "form_spec.hpp"
#include "hkt/report.hpp"

using namespace hkt;
using nlohmann::json;

namespace {

VerificationReport sample_report(bool with_failure) {
    VerificationReport rep;
    rep.subject = "sample";
    rep.seed = 42;
    rep.parameters["q"] = "2";
    rep.checks.add("first", true, Defect::exact_zero(), "identity one");
    rep.checks.add("second", !with_failure, Defect::numeric(3e-4), "identity two");
    rep.checks.add("third", true, Defect::numeric(1e-13), "");
    return rep;
}

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("hkt_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("JSON report layout") {
    const json pass = json::parse(emit_report(sample_report(false), ReportFormat::json));
    CHECK(pass["schema"] == "report-v1");
    CHECK(pass["status"] == "pass");
    CHECK(pass["seed"] == 42);
    CHECK(pass["parameters"]["q"] == "2");
    CHECK(pass["checks"][0]["defect_norm"] == "exact-zero");
    CHECK(pass["checks"][1]["defect_norm"].is_number());
    CHECK(pass["checks"][2]["ref"] == "plumbing");
    CHECK(pass["convention_ledger_hash"].get<std::string>().size() == 16);

    const json fail = json::parse(emit_report(sample_report(true), ReportFormat::json));
    CHECK(fail["status"] == "fail");
    CHECK(fail["checks"][0]["name"] == "second");
    CHECK(fail["checks"][0]["status"] == "fail");
    CHECK(fail["checks"][1]["name"] == "first");
}

TEST_CASE("Markdown report and determinism") {
    const std::string md = emit_report(sample_report(true), ReportFormat::markdown);
    CHECK(md.find("| Check | Status | Reference | Defect |") != std::string::npos);
    CHECK(md.find("exact-zero") != std::string::npos);
    CHECK(md.find("second") < md.find("first"));

    VerificationReport a = sample_report(false), b = sample_report(false);
    run_timed(a, [] {
        CheckList c;
        c.add("timed", true, Defect::exact_zero(), "plumbing");
        return c;
    });
    run_timed(b, [] {
        CheckList c;
        c.add("timed", true, Defect::exact_zero(), "plumbing");
        return c;
    });
    CHECK(emit_report(a, ReportFormat::json, false) == emit_report(b, ReportFormat::json, false));
    CHECK(parse_report_format("md") == ReportFormat::markdown);
    CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
    CHECK_THROWS_AS(write_report(a, ReportFormat::json, "/nonexistent/dir/r.json"), std::runtime_error);
}

TEST_CASE("form specifications") {
    using cli::parse_form_spec;
    const RationalForm omega = RationalForm::basis({0, 1}) + RationalForm::basis({2, 3});
    CHECK(parse_form_spec("dx0^dx1 + dx2^dx3") == omega);
    CHECK(parse_form_spec("dx01+dx23", 2) == omega);
    CHECK(parse_form_spec("-i*dx0^dx1") == ScalarField(GaussianRational(0, -1)) * RationalForm::basis({0, 1}));
    CHECK(parse_form_spec("dx10") == -RationalForm::basis({0, 1}));
    CHECK(parse_form_spec("(1/2 - 3i)*dx03 + 2*dx12") ==
          ScalarField(GaussianRational(Rational(1, 2), -3)) * RationalForm::basis({0, 3}) +
              ScalarField(2) * RationalForm::basis({1, 2}));
    CHECK(parse_form_spec("0", 2).is_zero());
    CHECK_THROWS_AS(parse_form_spec("dx00"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_spec("dx01 + dx0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_spec("dx012", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_spec("banana"), std::invalid_argument);
}

TEST_CASE("exit codes") {
    CHECK(run({"verify-hopf", "--q", "1"}).code == cli::kExitUsage);
    CHECK(run({"verify-hopf", "--q", "x"}).code == cli::kExitUsage);
    CHECK(run({"verify-hopf"}).code == cli::kExitUsage);
    CHECK(run({"verify-flat", "--bogus"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"moduli", "--grid", "2"}).code == cli::kExitUsage);
    CHECK(run({"degree", "--f", "dx0", "--omega", "dx01"}).code == cli::kExitUsage);

    const Run flat = run({"verify-flat"});
    CHECK(flat.code == cli::kExitPass);
    CHECK(flat.out.find("status: pass") != std::string::npos);

    const Run hopf = run({"verify-hopf", "--q", "3/2"});
    CHECK(hopf.code == cli::kExitPass);
    CHECK(hopf.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("degree subcommand") {
    const Run r = run({"degree", "--f", "-i*dx0^dx1", "--omega", "dx01+dx23", "--rank", "2", "--sub-slopes", "-1,1/2"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.find("degree: 1\n") != std::string::npos);
    CHECK(r.out.find("slope: 1/2\n") != std::string::npos);
    CHECK(r.out.find("verdict: semistable") != std::string::npos);
    // a non-Gauduchon omega is not possible with constant coefficients; a non-real degree is a usage error
    CHECK(run({"degree", "--f", "dx01", "--omega", "dx01+dx23"}).code == cli::kExitUsage);
}

TEST_CASE("report destinations") {
    const auto dir = scratch("env");
    ::setenv(cli::kReportDirEnv, dir.c_str(), 1);
    CHECK(run({"verify-flat"}).code == cli::kExitPass);
    ::unsetenv(cli::kReportDirEnv);
    std::ifstream in(dir / "verify-flat.json");
    REQUIRE(in.good());
    const json j = json::parse(in);
    CHECK(j["schema"] == "report-v1");
    CHECK(j["subject"] == "verify-flat");

    const auto md = dir / "hopf.md";
    CHECK(run({"verify-hopf", "--q", "2", "--format", "markdown", "--out", md.string()}).code == cli::kExitPass);
    std::ifstream min(md);
    std::stringstream ss;
    ss << min.rdbuf();
    CHECK(ss.str().find("| Check |") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("config file mirrors flags and flags win") {
    const auto dir = scratch("config");
    const auto cfg = dir / "hkt.ini";
    {
        std::ofstream o(cfg);
        o << "seed=7\n\n[verify-hopf]\nq=1\n";
    }
    CHECK(run({"--config", cfg.string(), "verify-hopf"}).code == cli::kExitUsage);
    const auto out = dir / "r.json";
    CHECK(run({"--config", cfg.string(), "--out", out.string(), "verify-hopf", "--q", "2"}).code == cli::kExitPass);
    std::ifstream in(out);
    const json j = json::parse(in);
    CHECK(j["seed"] == 7);
    CHECK(j["parameters"]["q"] == "2");
    CHECK(run({"--config", cfg.string(), "--seed", "9", "--out", out.string(), "verify-hopf", "--q", "2"}).code ==
          cli::kExitPass);
    std::ifstream in2(out);
    CHECK(json::parse(in2)["seed"] == 9);
    std::filesystem::remove_all(dir);
}
