#pragma once

#include <stdexcept>
#include <string>

namespace picard {

// Violation of a domain rule by otherwise well-formed input.
// Everything derived from this maps to CLI exit code 1.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public domain_error {
public:
    division_by_zero() : domain_error("division by zero") {}
    explicit division_by_zero(const std::string& what) : domain_error(what) {}
};

// Boundary condition, parity constraint, or operation precondition failed.
class invariant_violation : public domain_error {
public:
    using domain_error::domain_error;
};

// A 3x3 matrix that is not a group element.
class membership_error : public domain_error {
public:
    enum class reason { form_violation, determinant_violation };

    explicit membership_error(reason r) : domain_error(describe(r)), reason_(r) {}

    reason why() const noexcept { return reason_; }

    static const char* describe(reason r) noexcept {
        switch (r) {
            case reason::form_violation: return "form-violation";
            case reason::determinant_violation: return "determinant-violation";
        }
        return "membership-violation";
    }

private:
    reason reason_;
};

// Unparseable word text (unknown token, malformed exponent).
class word_parse_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Malformed matrix JSON. Maps to CLI exit code 2, not 1.
class json_parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace picard
