#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed tables: wrong shapes, missing identities, duplicate labels.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Well-formed input whose arguments do not fit together (types, bases, domains).
class DomainError : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t estimate, std::size_t cap)
        : Error(what + ": estimated " + std::to_string(estimate) + " exceeds cap " +
                std::to_string(cap)),
          estimate_(estimate), cap_(cap) {}
    std::size_t estimate() const noexcept { return estimate_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t estimate_;
    std::size_t cap_;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    std::string summary() const {
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty()) out += "; ";
            out += v;
        }
        return out;
    }
};

// Thrown by the make_* constructors when validation fails.
class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report)
        : Error(report.summary()), report_(std::move(report)) {}
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

// Saturating product used by cap estimates.
inline std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > static_cast<std::size_t>(-1) / b) return static_cast<std::size_t>(-1);
    return a * b;
}

inline std::size_t saturating_add(std::size_t a, std::size_t b) {
    std::size_t s = a + b;
    return s < a ? static_cast<std::size_t>(-1) : s;
}

}  // namespace qk
