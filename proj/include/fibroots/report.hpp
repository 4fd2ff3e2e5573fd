#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fibroots {

/// Outcome of one identity or property check.
struct CheckReport {
    CheckReport() = default;
    explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    bool passed = true;
    std::string detail;
    /// First failing index or term, when the check failed.
    std::optional<std::string> counterexample;
    /// Findings worth surfacing even on success.
    std::vector<std::string> notes;

    /// Records a failure unless one is already recorded.
    void fail(std::string where) {
        if (passed) counterexample = std::move(where);
        passed = false;
    }
};

}  // namespace fibroots
