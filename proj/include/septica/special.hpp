#pragma once

// Fundamental constants and special functions at rational arguments.

#include "septica/real.hpp"

namespace septica {

inline Real const_pi(const PrecisionContext& ctx) {
    Real r{ctx.bits()};
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

/// cos(k pi / m).
inline Real cos_rational_pi(long k, long m, const PrecisionContext& ctx) {
    if (m < 1) throw domain_error("cos_rational_pi requires m >= 1");
    return cos(const_pi(ctx) * k / m);
}

/// Gamma(num/den) for a positive rational argument.
inline Real gamma_rational(long long num, long long den, const PrecisionContext& ctx) {
    if (den < 1) throw domain_error("gamma_rational requires a positive denominator");
    if (num < 1) throw domain_error("gamma_rational requires a positive argument");
    Real x = ctx.rational(num, den);
    Real r{ctx.bits()};
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    if (!r.finite()) throw domain_error("gamma overflowed at the working precision");
    return r;
}
inline Real gamma_rational(const Rational& q, const PrecisionContext& ctx) {
    return gamma_rational(q.num, q.den, ctx);
}

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y) for positive rational x, y.
inline Real beta_rational(const Rational& x, const Rational& y, const PrecisionContext& ctx) {
    if (!x.positive() || !y.positive())
        throw domain_error("beta_rational requires positive arguments");
    return gamma_rational(x, ctx) * gamma_rational(y, ctx) / gamma_rational(x + y, ctx);
}

} // namespace septica
