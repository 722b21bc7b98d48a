#pragma once

#include <string>
#include <vector>

namespace hkt {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// Size of the residual of a check. Exact checks report "exact-zero" when the residual is the
/// zero form; numeric checks report a floating norm.
struct Defect {
    bool exact = true;
    double value = 0.0;

    static Defect exact_zero() { return {true, 0.0}; }
    static Defect exact_nonzero(double size) { return {true, size}; }
    static Defect numeric(double v) { return {false, v}; }
    bool is_exact_zero() const { return exact && value == 0.0; }
};

struct Check {
    std::string name;
    Status status = Status::pass;
    Defect defect;
    /// Mathematical statement being certified, or "plumbing".
    std::string ref;
    std::string detail;
    double millis = 0.0;
};

/// Ordered list of checks plus free-form flags such as "hyperkahler-degenerate".
struct CheckList {
    std::vector<Check> checks;
    std::vector<std::string> flags;

    bool passed() const;
    const Check* find(const std::string& name) const;
    Check& add(std::string name, bool ok, Defect defect, std::string ref, std::string detail = {});
    void append(const CheckList& other);
};

}  // namespace hkt
