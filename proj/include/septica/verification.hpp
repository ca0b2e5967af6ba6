#pragma once

// Result record shared by every named check in the library.

#include <chrono>
#include <string>

#include "septica/real.hpp"

namespace septica {

struct VerificationResult {
    std::string check_id;
    std::string lhs;  // decimal string at the requested digits
    std::string rhs;
    long digits_agreed = 0;
    long required_digits = 0;
    bool pass = false;
    std::chrono::microseconds elapsed{0};
};

/// Build a result from two values; pass iff they agree to required_digits.
inline VerificationResult make_result(std::string check_id, const Real& lhs, const Real& rhs,
                                      long required_digits, int render_digits) {
    long agreed = agree_digits(lhs, rhs);
    VerificationResult r;
    r.check_id = std::move(check_id);
    r.lhs = to_decimal(lhs, render_digits);
    r.rhs = to_decimal(rhs, render_digits);
    r.digits_agreed = agreed;
    r.required_digits = required_digits;
    r.pass = agreed >= required_digits;
    return r;
}

} // namespace septica
