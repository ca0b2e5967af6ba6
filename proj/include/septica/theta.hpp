#pragma once

// Direct numerical evaluation of Ramanujan's theta functions. These series
// and products are the independent oracle everything else is checked
// against, so they are written as plain truncated sums with the context's
// termination rule: stop once the term magnitude stays below
// 10^{-(digits+guard)} for two consecutive terms.

#include "septica/real.hpp"

namespace septica {

/// Series variable q with |q| < 1 enforced at construction.
class Nome {
public:
    explicit Nome(Real q) : q_(std::move(q)) {
        if (!q_.finite()) throw domain_error("nome must be finite");
        if (!(abs(q_) < 1)) throw domain_error("nome requires |q| < 1");
    }
    const Real& value() const { return q_; }
    bool positive() const { return q_ > 0; }
    void require_positive() const {
        if (!positive()) throw domain_error("operation requires 0 < q < 1");
    }

private:
    Real q_;
};

/// (a; q)_inf = prod_{k>=0} (1 - a q^k).
inline Real qpochhammer(const Real& a, const Nome& q, const PrecisionContext& ctx) {
    Real qv = ctx.promote(q.value());
    Real eps = ctx.truncation_threshold();
    Real product = ctx.real(1);
    Real aq = ctx.promote(a); // a q^k
    int settled = 0;
    for (long k = 0; k <= ctx.max_terms(); ++k) {
        product *= ctx.real(1) - aq;
        if (abs(aq) < eps) {
            if (++settled >= 2) return product;
        } else {
            settled = 0;
        }
        aq *= qv;
    }
    throw non_convergence("qpochhammer: term cap exceeded before settling");
}

/// f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}, |ab| < 1.
/// Two-sided sum folded symmetrically: the n = +m and n = -m terms are
/// accumulated together, with running powers a^{T(m)}, b^{T(m)} for the
/// triangular exponents T(m) = m(m+1)/2.
inline Real f_series(const Real& a_in, const Real& b_in, const PrecisionContext& ctx) {
    if (!(abs(a_in * b_in) < 1)) throw domain_error("f(a,b) requires |ab| < 1");
    Real a = ctx.promote(a_in);
    Real b = ctx.promote(b_in);
    Real eps = ctx.truncation_threshold();
    Real sum = ctx.real(1); // n = 0
    Real pa_prev = ctx.real(1), pb_prev = ctx.real(1); // a^{T(m-1)}, b^{T(m-1)}
    Real am = ctx.real(1), bm = ctx.real(1);           // a^m, b^m
    int settled = 0;
    for (long m = 1; m <= ctx.max_terms(); ++m) {
        am *= a;
        bm *= b;
        Real pa = pa_prev * am; // a^{T(m)}
        Real pb = pb_prev * bm;
        Real plus = pa * pb_prev;  // n = +m
        Real minus = pa_prev * pb; // n = -m
        sum += plus;
        sum += minus;
        if (abs(plus) + abs(minus) < eps) {
            if (++settled >= 2) return sum;
        } else {
            settled = 0;
        }
        pa_prev = pa;
        pb_prev = pb;
    }
    throw non_convergence("f_series: term cap exceeded before settling");
}

/// f(a, b) via the triple product (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.
inline Real f_product(const Real& a_in, const Real& b_in, const PrecisionContext& ctx) {
    Real a = ctx.promote(a_in);
    Real b = ctx.promote(b_in);
    Real ab = a * b;
    if (!(abs(ab) < 1)) throw domain_error("f(a,b) requires |ab| < 1");
    Nome base{ab};
    return qpochhammer(-a, base, ctx) * qpochhammer(-b, base, ctx) *
           qpochhammer(ab, base, ctx);
}

/// phi(q) = sum_{n in Z} q^{n^2} = 1 + 2 sum_{n>=1} q^{n^2}.
inline Real phi(const Nome& q, const PrecisionContext& ctx) {
    Real qv = ctx.promote(q.value());
    if (qv.zero()) return ctx.real(1);
    Real eps = ctx.truncation_threshold();
    Real sum = ctx.real(1);
    Real qsq = qv * qv;
    Real qodd = qv;           // q^{2n-1}
    Real qn2 = ctx.real(1);   // q^{n^2}
    int settled = 0;
    for (long n = 1; n <= ctx.max_terms(); ++n) {
        qn2 *= qodd; // q^{n^2} = q^{(n-1)^2} q^{2n-1}
        sum += qn2 * 2;
        if (abs(qn2) < eps) {
            if (++settled >= 2) return sum;
        } else {
            settled = 0;
        }
        qodd *= qsq;
    }
    throw non_convergence("phi: term cap exceeded before settling");
}

/// chi(q) = (-q; q^2)_inf.
inline Real chi(const Nome& q, const PrecisionContext& ctx) {
    Real qv = ctx.promote(q.value());
    return qpochhammer(-qv, Nome{qv * qv}, ctx);
}

/// u_k = q^{k^2/n} f(q^{n-2k}, q^{n+2k}) for odd n >= 3, 0 <= k <= n-1,
/// 0 < q < 1. Fractional powers of q use exp((k^2/n) ln q) on the positive
/// real branch; u_0 reduces to phi(q^n).
inline Real u_component(const Nome& q, long n, long k, const PrecisionContext& ctx) {
    if (n < 3 || n % 2 == 0) throw domain_error("u_component requires odd n >= 3");
    if (k < 0 || k >= n) throw domain_error("u_component requires 0 <= k <= n-1");
    q.require_positive();
    Real qv = ctx.promote(q.value());
    Real body = f_series(pow_int(qv, n - 2 * k), pow_int(qv, n + 2 * k), ctx);
    if (k == 0) return body;
    return exp(ctx.rational(k * k, n) * log(qv)) * body;
}

struct UVW {
    Real u, v, w;
};

/// (u, v, w) = (2u_1/u_0, 2u_2/u_0, 2u_3/u_0) at n = 7; the three septic
/// component ratios, in this fixed assignment.
inline UVW uvw_series(const Nome& q, const PrecisionContext& ctx) {
    q.require_positive();
    Real u0 = u_component(q, 7, 0, ctx);
    return {2 * u_component(q, 7, 1, ctx) / u0,
            2 * u_component(q, 7, 2, ctx) / u0,
            2 * u_component(q, 7, 3, ctx) / u0};
}

/// phi(q) / phi(q^d). Callers square for the degree-d multiplier.
inline Real phi_ratio(const Nome& q, long d, const PrecisionContext& ctx) {
    if (d < 1) throw domain_error("phi_ratio requires d >= 1");
    q.require_positive();
    Real qv = ctx.promote(q.value());
    return phi(Nome{qv}, ctx) / phi(Nome{pow_int(qv, d)}, ctx);
}

} // namespace septica
