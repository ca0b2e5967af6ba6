#pragma once

// Arbitrary-precision reals on top of MPFR, with an explicit precision
// context. Every operation computes at digits + guard_digits decimal digits
// internally and is reported (rendered, compared) at the requested digits.

#include <cstdint>
#define MPFR_USE_INTMAX_T 1
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "septica/errors.hpp"

namespace septica {

/// Exact integer ratio. Used wherever an argument must reach MPFR without
/// an intermediate rounding step (gamma arguments, class-invariant indices).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool positive() const { return num > 0; }
    bool is_integer() const { return den == 1; }
    Rational reciprocal() const { return Rational(den, num); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        // both normalized with positive denominators
        return a.num * b.den < b.num * a.den;
    }
};

/// RAII value type over mpfr_t. The working precision in bits is fixed at
/// construction; binary operations produce results at the wider precision
/// of their operands, so context precision propagates from the leaves.
class Real {
public:
    Real() {
        mpfr_init2(v_, 64);
        mpfr_set_nan(v_);
    }
    explicit Real(mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_nan(v_);
    }
    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    Real& operator=(const Real& other) {
        if (this != &other) {
            if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_))
                mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool finite() const { return mpfr_number_p(v_) != 0; }
    bool zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(const Real& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

private:
    mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t join_prec(const Real& a, const Real& b) {
    return std::max(a.bits(), b.bits());
}
} // namespace detail

inline Real operator+(const Real& a, const Real& b) {
    Real r{detail::join_prec(a, b)};
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a, const Real& b) {
    Real r{detail::join_prec(a, b)};
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator*(const Real& a, const Real& b) {
    Real r{detail::join_prec(a, b)};
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator/(const Real& a, const Real& b) {
    Real r{detail::join_prec(a, b)};
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a) {
    Real r{a.bits()};
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline Real operator+(const Real& a, long b) {
    Real r{a.bits()};
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator-(const Real& a, long b) {
    Real r{a.bits()};
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline Real operator-(long a, const Real& b) {
    Real r{b.bits()};
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator*(const Real& a, long b) {
    Real r{a.bits()};
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator/(const Real& a, long b) {
    Real r{a.bits()};
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline Real operator/(long a, const Real& b) {
    Real r{b.bits()};
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

inline int cmp(const Real& a, const Real& b) {
    if (!a.finite() || !b.finite()) throw error("comparison on a non-finite value");
    return mpfr_cmp(a.raw(), b.raw());
}
inline int cmp(const Real& a, long b) {
    if (!a.finite()) throw error("comparison on a non-finite value");
    return mpfr_cmp_si(a.raw(), b);
}
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return cmp(a, b) != 0; }
inline bool operator<(const Real& a, long b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, long b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, long b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, long b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, long b) { return cmp(a, b) == 0; }

#define SEPTICA_UNARY(name, mpfr_fn)                 \
    inline Real name(const Real& a) {                \
        Real r{a.bits()};                            \
        mpfr_fn(r.raw(), a.raw(), MPFR_RNDN);        \
        return r;                                    \
    }
SEPTICA_UNARY(abs, mpfr_abs)
SEPTICA_UNARY(exp, mpfr_exp)
SEPTICA_UNARY(log, mpfr_log)
SEPTICA_UNARY(log10, mpfr_log10)
SEPTICA_UNARY(cos, mpfr_cos)
SEPTICA_UNARY(sin, mpfr_sin)
SEPTICA_UNARY(acos, mpfr_acos)
SEPTICA_UNARY(asin, mpfr_asin)
#undef SEPTICA_UNARY

/// Every radicand in this library is real and non-negative; a negative one
/// means a transcription defect, so it is rejected rather than returning NaN.
inline Real sqrt(const Real& a) {
    if (a.sign() < 0) throw construction_error("square root of a negative radicand");
    Real r{a.bits()};
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline Real pow_int(const Real& a, long n) {
    Real r{a.bits()};
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}

/// x^{num/den} on the real branch. Even roots of negative values are a
/// construction defect in this library (all tabulated radicands are real);
/// odd roots of negative values take the real negative branch.
inline Real rational_pow(const Real& x, long num, unsigned long den) {
    if (den == 0) throw domain_error("rational_pow: zero root index");
    if (x.sign() < 0 && den % 2 == 0)
        throw construction_error("even root of a negative radicand");
    if (x.zero()) {
        if (num <= 0) throw domain_error("rational_pow: zero base with non-positive exponent");
        Real r{x.bits()};
        mpfr_set_si(r.raw(), 0, MPFR_RNDN);
        return r;
    }
    Real root{x.bits()};
    mpfr_rootn_ui(root.raw(), x.raw(), den, MPFR_RNDN);
    if (num == 1) return root;
    return pow_int(root, num);
}

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

/// Decimal digits the binary precision of (a, b) can actually carry.
/// Also the sentinel returned by agree_digits on exact equality.
inline long decimal_capacity(const Real& a, const Real& b) {
    return static_cast<long>(std::floor(
        static_cast<double>(std::max(a.bits(), b.bits())) * 0.30102999566398119));
}

/// Leading decimal digits on which a and b agree:
/// floor(-log10(|a - b| / max(|a|, 1))), clamped to [0, capacity].
/// The relative-error floor of 1 keeps values near zero well behaved; the
/// tiny fuzz before flooring stabilizes exact-decimal boundaries such as
/// |a - b| = 10^-3 landing a rounding ulp on the wrong side.
inline long agree_digits(const Real& a, const Real& b) {
    if (!a.finite() || !b.finite()) throw error("agree_digits on a non-finite value");
    Real diff = abs(a - b);
    long cap = decimal_capacity(a, b);
    if (diff.zero()) return cap;
    Real denom = abs(a);
    if (denom < 1) {
        Real one{denom.bits()};
        mpfr_set_si(one.raw(), 1, MPFR_RNDN);
        denom = one;
    }
    double t = -log10(diff / denom).to_double() + 1e-9;
    if (t < 0) return 0;
    return std::min(static_cast<long>(std::floor(t)), cap);
}

/// Render x with `digits` significant decimal digits, truncated (never
/// rounded) at the last kept digit. The conversion itself rounds a few
/// digits further out, so values that are exact short decimals (e.g. 41)
/// render identically at every working precision.
inline std::string to_decimal(const Real& x, int digits) {
    if (!x.finite()) throw error("to_decimal on a non-finite value");
    if (x.zero()) return "0";
    if (digits < 1) throw error("to_decimal: digits must be positive");

    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits) + 5, x.raw(), MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    m.resize(static_cast<size_t>(digits), '0'); // truncate the rounding slack

    // value = 0.m * 10^e
    std::string out;
    if (e > 0 && e <= digits) {
        out = m.substr(0, static_cast<size_t>(e));
        if (e < digits) out += "." + m.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -5) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
    } else {
        out = m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(static_cast<long>(e) - 1);
    }
    return neg ? "-" + out : out;
}

/// Decimal working precision: requested digits plus guard digits, with the
/// series/product truncation policy every infinite sum in the library obeys.
class PrecisionContext {
public:
    static constexpr int kMinDigits = 10;
    static constexpr int kMinGuard = 5;
    static constexpr int kDefaultGuard = 10;
    static constexpr long kDefaultMaxTerms = 100000;

    explicit PrecisionContext(int digits, int guard_digits = kDefaultGuard,
                              long max_terms = kDefaultMaxTerms)
        : digits_(digits), guard_(guard_digits), max_terms_(max_terms) {
        if (digits_ < kMinDigits)
            throw invalid_precision("precision context requires at least 10 digits");
        if (guard_ < kMinGuard)
            throw invalid_precision("precision context requires at least 5 guard digits");
        if (max_terms_ < 1) throw invalid_precision("max_terms must be positive");
        bits_ = static_cast<mpfr_prec_t>(
                    std::ceil((digits_ + guard_) * 3.3219280948873623)) + 8;
    }

    int digits() const { return digits_; }
    int guard_digits() const { return guard_; }
    long max_terms() const { return max_terms_; }
    mpfr_prec_t bits() const { return bits_; }

    Real real(long value) const {
        Real r{bits_};
        mpfr_set_si(r.raw(), value, MPFR_RNDN);
        return r;
    }
    Real rational(long long num, long long den) const {
        if (den == 0) throw domain_error("rational with zero denominator");
        Real r{bits_};
        mpfr_set_sj(r.raw(), num, MPFR_RNDN); // exact for any 64-bit integer
        Real d{bits_};
        mpfr_set_sj(d.raw(), den, MPFR_RNDN);
        mpfr_div(r.raw(), r.raw(), d.raw(), MPFR_RNDN);
        return r;
    }
    Real rational(const Rational& q) const { return rational(q.num, q.den); }
    Real from_string(const std::string& decimal) const {
        Real r{bits_};
        if (mpfr_set_str(r.raw(), decimal.c_str(), 10, MPFR_RNDN) != 0)
            throw parse_error("unparseable decimal literal: " + decimal);
        return r;
    }
    /// 10^e at working precision.
    Real pow10(long e) const { return pow_int(real(10), e); }
    /// Widen x to at least this context's precision. The binary value is
    /// exact input; downstream arithmetic then runs at the working
    /// precision even when x was produced under a narrower context.
    Real promote(const Real& x) const {
        Real r{std::max(bits_, x.bits())};
        mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
        return r;
    }
    /// Series/product truncation threshold, 10^{-(digits + guard)}.
    Real truncation_threshold() const { return pow10(-(digits_ + guard_)); }
    /// Same policy at doubled requested digits; used to retry decisions that
    /// were ambiguous at the current precision.
    PrecisionContext escalated() const {
        return PrecisionContext(digits_ * 2, guard_, max_terms_);
    }

private:
    int digits_;
    int guard_;
    long max_terms_;
    mpfr_prec_t bits_;
};

inline PrecisionContext make_context(int digits) { return PrecisionContext(digits); }

} // namespace septica
