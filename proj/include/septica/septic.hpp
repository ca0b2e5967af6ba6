#pragma once

// The degree-7 pipeline: from a nome q in (0, 1), produce the product
// invariant p, the quartic ratio M = phi^4(q)/phi^4(q^7), the ordered roots
// of the associated cubic, the component ratios (u, v, w), and the ratio
// phi(q^{1/7})/phi(q^7) = 1 + u + v + w.

#include <array>
#include <optional>

#include "septica/cubic.hpp"
#include "septica/theta.hpp"
#include "septica/verification.hpp"

namespace septica {

struct OrderedRoots {
    Real alpha, beta, gamma;
};

struct SepticSolution {
    Real q;
    Real p;           // u v w, from the eta-quotient product
    Real M;           // phi^4(q)/phi^4(q^7)
    Real alpha, beta, gamma;
    Real u, v, w;
    Real delta_minus; // discriminant of the cubic actually solved
    Real ratio;       // 1 + u + v + w
};

/// p = 8 q^2 chi(q) / chi^7(q^7), equal to the u v w product.
inline Real p_product(const Nome& q, const PrecisionContext& ctx) {
    q.require_positive();
    Real qv = ctx.promote(q.value());
    return 8 * qv * qv * chi(Nome{qv}, ctx) / pow_int(chi(Nome{pow_int(qv, 7)}, ctx), 7);
}

/// The correct root of M^2 - (2+5p)M + (1-p)^3 = 0 for 0 < q < 1:
/// M = 1 + 5p/2 + (1/2) sqrt((2+5p)^2 - 4(1-p)^3), which satisfies the
/// lower bound M >= 1 + 3p.
inline Real phi4_ratio_from_p(const Real& p_in, const PrecisionContext& ctx) {
    if (!(p_in > 0 && p_in < 8)) throw domain_error("phi4_ratio_from_p requires 0 < p < 8");
    Real p = ctx.promote(p_in);
    Real t = 2 + 5 * p;
    Real c = 1 - p;
    Real M = 1 + 5 * p / 2 + sqrt(t * t - 4 * c * c * c) / 2;
    if (!(M >= 1 + 3 * p)) throw error("quartic ratio fell below its 1 + 3p bound");
    return M;
}

/// sqrt of the correct quartic-ratio root; the degree-7 multiplier as a
/// function of p.
inline Real m_of_p(const Real& p, const PrecisionContext& ctx) {
    return sqrt(phi4_ratio_from_p(p, ctx));
}

/// r(xi) = xi^3 + 2 xi^2 (1 + 3p - M) + xi p^2 (p + 4) - p^4.
inline CubicPoly build_r(const Real& p, const Real& M) {
    return CubicPoly{2 * (1 + 3 * p - M), p * p * (p + 4), -pow_int(p, 4)};
}

/// The two possible discriminants of r, depending on which quartic-ratio
/// root was taken:
/// Delta_pm = p^5 (p^3 + 104 p^2 + 608 p + 512
///                 +- (8 p^{3/2} + 160 sqrt p) sqrt(4 p^2 + 13 p + 32)).
/// For 0 < p < 8 the pipeline cubic has discriminant Delta_minus > 0, and
/// Delta_plus Delta_minus = p^10 (p - 8)^6.
inline std::pair<Real, Real> discriminants(const Real& p, const PrecisionContext& ctx) {
    if (!(p > 0)) throw domain_error("discriminants require p > 0");
    (void)ctx;
    Real p5 = pow_int(p, 5);
    Real base = ((p + 104) * p + 608) * p + 512;
    Real odd = (8 * p + 160) * sqrt(p); // 8 p^{3/2} + 160 sqrt p
    Real root = sqrt((4 * p + 13) * p + 32);
    return {p5 * (base + odd * root), p5 * (base - odd * root)};
}

/// Target for the ordering decision: the closed form of u^7 + v^7 + w^7,
/// M^2 - 7(p-2)M + 7p^2 - 49p - 15.
inline Real seventh_power_sum_target(const Real& p, const Real& M) {
    return M * M - 7 * (p - 2) * M + 7 * p * p - 49 * p - 15;
}

/// Choose the orientation (alpha, beta, gamma) of three distinct positive
/// roots such that p(alpha^2/beta + beta^2/gamma + gamma^2/alpha) matches
/// the seventh-power target, then rotate so that
/// alpha^2/beta > beta^2/gamma > gamma^2/alpha.
///
/// The match is numeric: the winning orientation class must agree with the
/// target to at least digits/2 while the other misses by 10 digits more.
/// Anything tighter throws ambiguous_orientation, which callers resolve by
/// retrying at doubled precision.
inline OrderedRoots order_roots(const std::array<Real, 3>& roots, const Real& p,
                                const Real& M, const PrecisionContext& ctx) {
    const Real &r1 = roots[0], &r2 = roots[1], &r3 = roots[2];
    if (!(r1 > 0 && r1 < r2 && r2 < r3))
        throw domain_error("order_roots expects three distinct positive roots, ascending");

    Real target = seventh_power_sum_target(p, M);
    auto class_sum = [&](const Real& a, const Real& b, const Real& c) {
        return p * (a * a / b + b * b / c + c * c / a);
    };
    long forward = agree_digits(class_sum(r1, r2, r3), target);  // cyclic class of (r1,r2,r3)
    long reversed = agree_digits(class_sum(r3, r2, r1), target); // class of the reversal
    bool pick_forward = forward >= reversed;
    long matched = pick_forward ? forward : reversed;
    long other = pick_forward ? reversed : forward;
    if (matched < ctx.digits() / 2 || matched - other < 10)
        throw ambiguous_orientation(
            "orientation decision below separation margin; retry at higher precision");

    const std::array<std::array<const Real*, 3>, 3> rotations =
        pick_forward
            ? std::array<std::array<const Real*, 3>, 3>{{{&r1, &r2, &r3}, {&r2, &r3, &r1}, {&r3, &r1, &r2}}}
            : std::array<std::array<const Real*, 3>, 3>{{{&r3, &r2, &r1}, {&r2, &r1, &r3}, {&r1, &r3, &r2}}};
    for (const auto& cand : rotations) {
        const Real &a = *cand[0], &b = *cand[1], &c = *cand[2];
        Real q1 = a * a / b, q2 = b * b / c, q3 = c * c / a;
        if (q1 > q2 && q2 > q3) return {a, b, c};
    }
    throw ambiguous_orientation("no rotation satisfies the descending-quotient condition");
}

/// (u, v, w) = ((alpha^2 p / beta)^{1/7}, (beta^2 p / gamma)^{1/7},
/// (gamma^2 p / alpha)^{1/7}), real positive branch throughout.
inline UVW uvw_from_roots(const OrderedRoots& o, const Real& p, const PrecisionContext& ctx) {
    (void)ctx;
    auto seventh = [](const Real& x) {
        if (!(x > 0)) throw domain_error("seventh-root radicand must be positive");
        return rational_pow(x, 1, 7);
    };
    return {seventh(o.alpha * o.alpha * p / o.beta), seventh(o.beta * o.beta * p / o.gamma),
            seventh(o.gamma * o.gamma * p / o.alpha)};
}

namespace detail {

inline SepticSolution run_pipeline_once(const Nome& q, const PrecisionContext& ctx,
                                        const std::optional<Real>& p_override) {
    Real p = p_override ? ctx.promote(*p_override) : p_product(q, ctx);
    if (!(p > 0 && p < 8)) throw domain_error("pipeline invariant 0 < p < 8 violated");
    Real M = phi4_ratio_from_p(p, ctx);
    auto [delta_plus, delta_minus] = discriminants(p, ctx);
    (void)delta_plus;
    if (!(delta_minus > 0))
        throw unexpected_discriminant("Delta_minus must be positive for 0 < p < 8");

    CubicPoly r = build_r(p, M);
    auto roots = solve_cubic_real(r, ctx);
    OrderedRoots ordered = order_roots(roots, p, M, ctx);
    UVW t = uvw_from_roots(ordered, p, ctx);

    if (!(t.u < 2 && t.u > t.v && t.v > t.w && t.w > 0))
        throw error("pipeline invariant 2 > u > v > w > 0 violated");
    if (agree_digits(t.u * t.v * t.w, p) < ctx.digits() - 3)
        throw error("pipeline product u v w drifted from p");
    Real residual = M * M - (2 + 5 * p) * M + (1 - p) * (1 - p) * (1 - p);
    if (!(abs(residual) < ctx.pow10(-(ctx.digits() - 5)) * max(ctx.real(1), M * M)))
        throw error("quartic-ratio residual above tolerance");

    return SepticSolution{q.value(), p,          M,   ordered.alpha,
                          ordered.beta, ordered.gamma, t.u, t.v,
                          t.w,          delta_minus,  1 + t.u + t.v + t.w};
}

} // namespace detail

/// Full pipeline run. If the ordering decision is ambiguous at this
/// precision, the run is retried at doubled digits (up to twice); the
/// returned values then simply carry the higher precision.
inline SepticSolution run_pipeline(const Nome& q, const PrecisionContext& ctx,
                                   const std::optional<Real>& p_override = std::nullopt) {
    q.require_positive();
    PrecisionContext effective = ctx;
    for (int attempt = 0;; ++attempt) {
        try {
            return detail::run_pipeline_once(q, effective, p_override);
        } catch (const ambiguous_orientation&) {
            if (attempt >= 2) throw;
            effective = effective.escalated();
        }
    }
}

/// Fixed consistency check relating the p = 1, M = 7 cubic to U_6:
/// -(2 xi)^6 r(1/(2 xi)^2) = U_6(xi) on sample points, and r(0) = U_6(0).
inline VerificationResult r_u6_transform_check(const PrecisionContext& ctx) {
    CubicPoly r = build_r(ctx.real(1), ctx.real(7));
    const std::pair<long, long> samples[] = {{1, 10}, {-1, 10}, {2, 5}, {-2, 5},
                                             {9, 10}, {-9, 10}, {1, 4}};
    Real worst = abs(r.eval(ctx.real(0)) - chebyshev_u(6, ctx.real(0), ctx));
    for (auto [num, den] : samples) {
        Real xi = ctx.rational(num, den);
        Real two_xi = 2 * xi;
        Real lhs = -pow_int(two_xi, 6) * r.eval(1 / (two_xi * two_xi));
        worst = max(worst, abs(lhs - chebyshev_u(6, xi, ctx)));
    }
    return make_result("r-u6-transform", worst, ctx.real(0), ctx.digits() - 3, ctx.digits());
}

} // namespace septica
