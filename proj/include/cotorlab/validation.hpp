#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotorlab {

/// One violated structural constraint, with the basis indices involved.
struct Violation {
    std::string constraint;  // e.g. "associativity", "unit", "grading"
    std::vector<std::size_t> indices;
    std::string detail;
};

/// Violations are data: an empty report means the object is valid.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool names(const std::string& constraint, const std::vector<std::size_t>& idx) const {
        for (const auto& v : violations)
            if (v.constraint == constraint && v.indices == idx) return true;
        return false;
    }
    void add(std::string constraint, std::vector<std::size_t> idx, std::string detail = {}) {
        violations.push_back({std::move(constraint), std::move(idx), std::move(detail)});
    }
    void merge(const ValidationReport& other, const std::string& prefix = {}) {
        for (auto v : other.violations) {
            if (!prefix.empty()) v.constraint = prefix + v.constraint;
            violations.push_back(std::move(v));
        }
    }
    std::string summary() const;
};

/// Thrown when an operation requires a valid object and gets an invalid one.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(const std::string& what, ValidationReport report)
        : std::runtime_error(what + ": " + report.summary()), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

  private:
    ValidationReport report_;
};

}  // namespace cotorlab
