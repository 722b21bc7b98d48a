#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "hkt/check.hpp"

namespace hkt {

std::string_view tool_version();

/// Text of the sign and normalization conventions the checks are stated in.
std::string_view conventions_text();
/// FNV-1a 64-bit hash of conventions_text(), as 16 hex digits.
std::string convention_ledger_hash();

struct VerificationReport {
    std::string tool_version{hkt::tool_version()};
    std::string convention_ledger_hash{hkt::convention_ledger_hash()};
    std::string subject;
    std::uint64_t seed = 0;
    /// Echo of the inputs that determine the report.
    std::map<std::string, std::string> parameters;
    CheckList checks;

    bool passed() const { return checks.passed(); }
};

enum class ReportFormat { json, markdown };

/// Runs fn, stores its wall time in every check it produced and appends them to rep.
void run_timed(VerificationReport& rep, const std::function<CheckList()>& fn);

/// JSON (schema "report-v1") or a Markdown table. Failing checks come first; otherwise the
/// order of execution is kept. With include_timing = false the output depends only on the
/// inputs and the seed.
std::string emit_report(const VerificationReport& rep, ReportFormat format, bool include_timing = true);

/// Writes emit_report output; throws std::runtime_error if the file cannot be written.
void write_report(const VerificationReport& rep, ReportFormat format, const std::filesystem::path& path);

/// "json" or "markdown"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view name);

}  // namespace hkt
