#include "hkt/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef HKT_VERSION
#define HKT_VERSION "0.0.0"
#endif

namespace hkt {

namespace {

constexpr std::string_view kConventions = R"(hkt conventions v1
coordinates: H = R^4 with x = x0 + x1 i + x2 j + x3 k, phi = |x|^2
structures act on covectors by the transpose: (L a)_j = sum_i L_ij a_i; left I sends dx0 to -dx1
right frame: (R_i, R_j, -R_k) so that IJ = K holds for both frames
twisted differential: d^c_L = -(-1)^m L d L on m-forms, so dd^c_L phi = 4 omega_L (positive)
Hermitian form: omega_L(X, Y) = g(L X, Y); metric recovered as g(X, Y) = omega_L(X, L Y)
Hopf forms: omega_L = dd^c_L phi / phi; torsion H = d^c_L omega_L, Bismut T = L d omega_L = -H
(p,q) types: (1,0) is the +i eigenspace of L on 1-forms
Lambda: a ^ omega = (Lambda a) omega^2 / 2, so Lambda omega = 2
orientation: omega_I ^ omega_I > 0; Hodge star uses it, so omega_I, omega_J, omega_K are self-dual
torus: unit periods, spectral grid N^4, band |k_mu| < N/2, su(n) values with <X, Y> = -tr(XY)
induced structure: L~ a = i(a^{0,1} - a^{1,0}) = -L a; omega~(a, b) = -g_L2(I~ a, b)
degree: deg = (i / 2 pi) integral F ^ omega; gamma = mean of tr(i Lambda F) / n
)";

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::vector<const Check*> ordered(const CheckList& list) {
    std::vector<const Check*> out;
    for (const auto& c : list.checks) out.push_back(&c);
    std::stable_partition(out.begin(), out.end(), [](const Check* c) { return c->status == Status::fail; });
    return out;
}

std::string defect_text(const Defect& d) {
    if (d.is_exact_zero()) return "exact-zero";
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << d.value;
    return os.str();
}

std::string emit_json(const VerificationReport& rep, bool timing) {
    nlohmann::ordered_json j;
    j["schema"] = "report-v1";
    j["status"] = rep.passed() ? "pass" : "fail";
    j["subject"] = rep.subject;
    j["tool_version"] = rep.tool_version;
    j["convention_ledger_hash"] = rep.convention_ledger_hash;
    j["seed"] = rep.seed;
    j["parameters"] = rep.parameters;
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& c : rep.checks.checks)
        (c.status == Status::pass ? passed : c.status == Status::fail ? failed : skipped)++;
    j["summary"] = {{"total", rep.checks.checks.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    j["flags"] = rep.checks.flags;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Check* c : ordered(rep.checks)) {
        nlohmann::ordered_json e;
        e["name"] = c->name;
        e["status"] = to_string(c->status);
        if (c->defect.is_exact_zero())
            e["defect_norm"] = "exact-zero";
        else
            e["defect_norm"] = c->defect.value;
        e["defect_kind"] = c->defect.exact ? "exact" : "numeric";
        e["ref"] = c->ref.empty() ? "plumbing" : c->ref;
        if (!c->detail.empty()) e["detail"] = c->detail;
        if (timing) e["millis"] = c->millis;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string escape_md(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += "\\|";
        else out += ch;
    }
    return out;
}

std::string emit_markdown(const VerificationReport& rep, bool timing) {
    std::ostringstream os;
    os << "# Verification report: " << rep.subject << "\n\n";
    os << "- status: **" << (rep.passed() ? "pass" : "fail") << "**\n";
    os << "- tool version: " << rep.tool_version << "\n";
    os << "- convention ledger hash: `" << rep.convention_ledger_hash << "`\n";
    os << "- seed: " << rep.seed << "\n";
    for (const auto& [k, v] : rep.parameters) os << "- " << k << ": " << v << "\n";
    for (const auto& f : rep.checks.flags) os << "- flag: " << f << "\n";
    os << "\n| Check | Status | Reference | Defect |" << (timing ? " ms |" : "") << "\n";
    os << "|---|---|---|---|" << (timing ? "---|" : "") << "\n";
    for (const Check* c : ordered(rep.checks)) {
        os << "| " << escape_md(c->name) << " | " << to_string(c->status) << " | "
           << escape_md(c->ref.empty() ? "plumbing" : c->ref) << " | " << defect_text(c->defect) << " |";
        if (timing) {
            std::ostringstream ms;
            ms.precision(2);
            ms << std::fixed << c->millis;
            os << " " << ms.str() << " |";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string_view tool_version() { return HKT_VERSION; }

std::string_view conventions_text() { return kConventions; }

std::string convention_ledger_hash() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : kConventions) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return hex64(h);
}

void run_timed(VerificationReport& rep, const std::function<CheckList()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckList list = fn();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& c : list.checks) c.millis = ms;
    rep.checks.append(list);
}

std::string emit_report(const VerificationReport& rep, ReportFormat format, bool include_timing) {
    return format == ReportFormat::json ? emit_json(rep, include_timing) : emit_markdown(rep, include_timing);
}

void write_report(const VerificationReport& rep, ReportFormat format, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report to " + path.string());
    out << emit_report(rep, format);
    if (!out) throw std::runtime_error("cannot write report to " + path.string());
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::json;
    if (name == "markdown" || name == "md") return ReportFormat::markdown;
    throw std::invalid_argument("unknown report format: " + std::string(name));
}

}  // namespace hkt
