#pragma once

// Registry of the named closed-form constants: theta values at special
// nomes, class invariants, the degree-7 ratio formulas, and the identities
// used along the way. Every entry is an evaluation recipe over radicals,
// cos(k pi / m), and Gamma at rationals; nothing here touches a series, so
// the theta oracle stays independent.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "septica/invariants.hpp"
#include "septica/septic.hpp"

namespace septica {

struct ClosedFormEntry {
    std::string id;
    std::string description;
    std::string recipe; // canonical formula text; its checksum keys the cache
    std::function<Real(const PrecisionContext&)> evaluate;
};

// --- individual constants -------------------------------------------------

/// phi(e^{-pi}) = pi^{1/4} / Gamma(3/4).
inline Real phi_e_pi(const PrecisionContext& ctx) {
    return rational_pow(const_pi(ctx), 1, 4) / gamma_rational(3, 4, ctx);
}

/// phi(e^{-pi sqrt 3}) = 3^{1/8} Gamma^{3/2}(1/3) / (2^{2/3} pi).
inline Real phi_e_pi_sqrt3(const PrecisionContext& ctx) {
    return rational_pow(ctx.real(3), 1, 8) * rational_pow(gamma_rational(1, 3, ctx), 3, 2) /
           (rational_pow(ctx.real(2), 2, 3) * const_pi(ctx));
}

/// phi(e^{-pi sqrt 7}) = sqrt(Gamma(1/7) Gamma(2/7) Gamma(4/7)) / (sqrt2 7^{1/8} pi).
inline Real phi_e_pi_sqrt7_gamma(const PrecisionContext& ctx) {
    return sqrt(gamma_rational(1, 7, ctx) * gamma_rational(2, 7, ctx) * gamma_rational(4, 7, ctx)) /
           (sqrt(ctx.real(2)) * rational_pow(ctx.real(7), 1, 8) * const_pi(ctx));
}

/// The same value through the beta function:
/// sqrt2 {(cos(pi/7) - cos(3pi/7)) B(1/7, 2/7)}^{1/2} / (7^{3/8} sqrt pi).
inline Real phi_e_pi_sqrt7_beta(const PrecisionContext& ctx) {
    Real inner = (cos_rational_pi(1, 7, ctx) - cos_rational_pi(3, 7, ctx)) *
                 beta_rational(Rational(1, 7), Rational(2, 7), ctx);
    return sqrt(ctx.real(2)) * sqrt(inner) /
           (rational_pow(ctx.real(7), 3, 8) * sqrt(const_pi(ctx)));
}

/// phi(e^{-7 pi sqrt 7}) = sqrt(Gamma(1/7) Gamma(2/7) Gamma(4/7)) /
/// (sqrt2 7^{7/8} pi) times the septic cosine bracket.
inline Real phi_e_7pi_sqrt7(const PrecisionContext& ctx) {
    return sqrt(gamma_rational(1, 7, ctx) * gamma_rational(2, 7, ctx) * gamma_rational(4, 7, ctx)) /
           (sqrt(ctx.real(2)) * rational_pow(ctx.real(7), 7, 8) * const_pi(ctx)) *
           septic_cosine_bracket(ctx);
}

/// phi^2(e^{-7pi}) / phi^2(e^{-pi}) = (sqrt(13+sqrt7) + sqrt(7+3 sqrt7)) / 14 * 28^{1/8}.
inline Real theorem_e7(const PrecisionContext& ctx) {
    Real sqrt7 = sqrt(ctx.real(7));
    return (sqrt(13 + sqrt7) + sqrt(7 + 3 * sqrt7)) / 14 * rational_pow(ctx.real(28), 1, 8);
}

/// phi^2(e^{-7 pi sqrt 3}) / phi^2(e^{-pi sqrt 3}).
inline Real theorem_e7pisqrt3(const PrecisionContext& ctx) {
    Real sqrt3 = sqrt(ctx.real(3));
    Real sqrt21 = sqrt(ctx.real(21));
    return ((sqrt21 + 3) * rational_pow(ctx.real(28), 1, 3) +
            8 * sqrt3 * rational_pow(ctx.real(28), 1, 6) + 4 * sqrt21 + 6) /
           (42 * sqrt3);
}

/// phi(e^{-7 pi sqrt 3}) itself, in terms of Gamma(1/3).
inline Real phi_e_7pi_sqrt3(const PrecisionContext& ctx) {
    Real sqrt3 = sqrt(ctx.real(3));
    Real sqrt21 = sqrt(ctx.real(21));
    Real inner = (sqrt21 + 3) * rational_pow(ctx.real(28), 1, 3) +
                 8 * sqrt3 * rational_pow(ctx.real(28), 1, 6) + 4 * sqrt21 + 6;
    return rational_pow(gamma_rational(1, 3, ctx), 3, 2) /
           (rational_pow(ctx.real(2), 7, 6) * rational_pow(ctx.real(3), 5, 8) *
            sqrt(ctx.real(7)) * const_pi(ctx)) *
           sqrt(inner);
}

/// phi(e^{-3pi}) / phi(e^{-pi}) = (6 sqrt3 - 9)^{-1/4}.
inline Real e3_constant(const PrecisionContext& ctx) {
    return rational_pow(6 * sqrt(ctx.real(3)) - 9, -1, 4);
}

/// phi(e^{-5pi}) / phi(e^{-pi}) = (5 sqrt5 - 10)^{-1/2}.
inline Real e5_constant(const PrecisionContext& ctx) {
    return rational_pow(5 * sqrt(ctx.real(5)) - 10, -1, 2);
}

/// The degree-7 product invariant at q = e^{-pi/21}:
/// p = sqrt2 (2-sqrt3) sqrt(sqrt3+sqrt7) sqrt(2+sqrt7+sqrt(7+4 sqrt7))
///     sqrt((sqrt(3+sqrt7) + (6 sqrt7)^{1/4}) / (sqrt(3+sqrt7) - (6 sqrt7)^{1/4})).
inline Real e21_p(const PrecisionContext& ctx) {
    Real sqrt3 = sqrt(ctx.real(3));
    Real sqrt7 = sqrt(ctx.real(7));
    Real quart = rational_pow(6 * sqrt7, 1, 4);
    return sqrt(ctx.real(2)) * (2 - sqrt3) * sqrt(sqrt3 + sqrt7) *
           sqrt(2 + sqrt7 + sqrt(7 + 4 * sqrt7)) *
           sqrt((sqrt(3 + sqrt7) + quart) / (sqrt(3 + sqrt7) - quart));
}

/// phi(e^{-21pi}) / phi(e^{-pi}) = (m(p) / (7 (6 sqrt3 - 9)^{1/2}))^{1/2}.
inline Real theorem_e21(const PrecisionContext& ctx) {
    return sqrt(m_of_p(e21_p(ctx), ctx) / (7 * sqrt(6 * sqrt(ctx.real(3)) - 9)));
}

/// Alternative radical form of phi(e^{-21pi}) / phi(e^{-pi}).
inline Real alt_e21(const PrecisionContext& ctx) {
    Real sqrt2 = sqrt(ctx.real(2));
    Real sqrt3 = sqrt(ctx.real(3));
    Real sqrt7 = sqrt(ctx.real(7));
    Real quart = rational_pow(6 * sqrt7, 1, 4);
    Real big = (sqrt3 + sqrt7) * (2 + sqrt7 + sqrt(7 + 4 * sqrt7)) *
               (22 + 8 * sqrt7 - (19 + 7 * sqrt7) * sqrt(2 * sqrt7) / 2) *
               ((sqrt(3 + sqrt7) + quart) / (sqrt(3 + sqrt7) - quart));
    Real brace = 1 + sqrt2 * sqrt(2 + sqrt3) * rational_pow(big, 3, 2) / 4;
    return sqrt((sqrt(13 + sqrt7) + sqrt(7 + 3 * sqrt7)) / 42) *
           rational_pow(ctx.real(28), 1, 16) * rational_pow(brace, 1, 4);
}

/// The degree-7 product invariant at q = e^{-pi/35}.
inline Real e35_p(const PrecisionContext& ctx) {
    Real sqrt5 = sqrt(ctx.real(5));
    Real sqrt7 = sqrt(ctx.real(7));
    Real inner = (8 + 3 * sqrt7) * sqrt(10 * sqrt7);
    return (9 - 4 * sqrt5) / 4 * sqrt(sqrt(ctx.real(14)) + sqrt(ctx.real(10))) *
           rational_pow(rational_pow(ctx.real(7), 1, 4) + sqrt(4 + sqrt7), 3, 2) *
           (sqrt(43 + 15 * sqrt7 + inner) + sqrt(35 + 15 * sqrt7 + inner));
}

/// phi(e^{-35pi}) / phi(e^{-pi}) = (m(p) / (35 (sqrt5 - 2)))^{1/2}.
inline Real theorem_e35(const PrecisionContext& ctx) {
    return sqrt(m_of_p(e35_p(ctx), ctx) / (35 * (sqrt(ctx.real(5)) - 2)));
}

/// Alternative radical form of phi(e^{-35pi}) / phi(e^{-pi}).
inline Real alt_e35(const PrecisionContext& ctx) {
    Real sqrt5 = sqrt(ctx.real(5));
    Real sqrt7 = sqrt(ctx.real(7));
    Real inner = (8 + 3 * sqrt7) * sqrt(10 * sqrt7);
    Real quartic = rational_pow(
        16466 + 6223 * sqrt7 - (2045 + 773 * sqrt7) * sqrt(2 * sqrt7) * 7 / 2, 1, 4);
    Real brace = 1 + (1 + sqrt5) * sqrt(sqrt7 + sqrt5) * quartic *
                         (sqrt(43 + 15 * sqrt7 + inner) + sqrt(35 + 15 * sqrt7 + inner)) / 4;
    return sqrt((sqrt(13 + sqrt7) + sqrt(7 + 3 * sqrt7)) / 70) *
           rational_pow(ctx.real(28), 1, 16) * sqrt(brace);
}

/// p = sqrt7 + sqrt2 7^{1/4} + 1, the product invariant at q = e^{-pi/7}.
inline Real e49_p(const PrecisionContext& ctx) {
    return sqrt(ctx.real(7)) + sqrt(ctx.real(2)) * rational_pow(ctx.real(7), 1, 4) + 1;
}

/// Ordered roots of the q = e^{-pi/7} cubic, in closed form over
/// cos(pi/7) and cos(2pi/7).
inline Real e49_alpha(const PrecisionContext& ctx) {
    Real sqrt7 = sqrt(ctx.real(7));
    Real b = sqrt(ctx.real(2)) * rational_pow(ctx.real(7), 1, 4); // sqrt2 7^{1/4}
    Real c1 = cos_rational_pi(1, 7, ctx);
    Real c2 = cos_rational_pi(2, 7, ctx);
    return ((sqrt7 + 2) * (5 + 3 * b - sqrt7) * 2 / 3 +
            2 * (sqrt7 - 1) * (1 - b + sqrt7) * c1 +
            (sqrt7 - 1) * (3 * b - sqrt7 - 1) * c2 * 2 / 3) /
           sqrt7;
}
inline Real e49_beta(const PrecisionContext& ctx) {
    Real sqrt7 = sqrt(ctx.real(7));
    Real b = sqrt(ctx.real(2)) * rational_pow(ctx.real(7), 1, 4);
    Real c1 = cos_rational_pi(1, 7, ctx);
    Real c2 = cos_rational_pi(2, 7, ctx);
    return ((sqrt7 + 5) * (13 + 9 * b + sqrt7) / 9 - 8 * c1 +
            2 * (sqrt7 - 1) * (1 - b + sqrt7) * c2) /
           sqrt7;
}
inline Real e49_gamma(const PrecisionContext& ctx) {
    Real sqrt7 = sqrt(ctx.real(7));
    Real b = sqrt(ctx.real(2)) * rational_pow(ctx.real(7), 1, 4);
    Real c1 = cos_rational_pi(1, 7, ctx);
    Real c2 = cos_rational_pi(2, 7, ctx);
    return ((sqrt7 + 5) * (1 + 3 * b + sqrt7) / 3 +
            (sqrt7 - 1) * (3 * b - sqrt7 - 1) * c1 * 2 / 3 - 8 * c2) /
           sqrt7;
}

/// phi(e^{-49pi}) / phi(e^{-pi}) = (1 + u + v + w) / 7 built from the
/// closed-form roots above.
inline Real theorem_e49(const PrecisionContext& ctx) {
    Real p = e49_p(ctx);
    UVW t = uvw_from_roots({e49_alpha(ctx), e49_beta(ctx), e49_gamma(ctx)}, p, ctx);
    return (1 + t.u + t.v + t.w) / 7;
}

/// (cos(pi/7)/(2cos^2(2pi/7)))^2 + (cos(2pi/7)/(2cos^2(3pi/7)))^2
/// + (cos(3pi/7)/(2cos^2(pi/7)))^2, identically 41.
inline Real trig_41_sum(const PrecisionContext& ctx) {
    Real c1 = cos_rational_pi(1, 7, ctx);
    Real c2 = cos_rational_pi(2, 7, ctx);
    Real c3 = cos_rational_pi(3, 7, ctx);
    Real t1 = c1 / (2 * c2 * c2);
    Real t2 = c2 / (2 * c3 * c3);
    Real t3 = c3 / (2 * c1 * c1);
    return t1 * t1 + t2 * t2 + t3 * t3;
}

/// Watson's explicit nested-radical construction of G_343:
/// G_343 = 2^{1/4} 7 {b1 + b2 + b3 + c1 + c2 + c3}^{-1} with
/// sigma_r = 1/2 + 3 cos(2^r pi / 7), tau_r the cyclic differences, and
/// b'_r = -(3 sigma_r + 5 tau_r)/3, c'_r = -(7 + 4 sigma_r + 2 tau_r)/3.
/// Seventh roots are taken on the real branch.
inline Real watson_g343_explicit(const PrecisionContext& ctx) {
    Real sigma[3], tau[3], bp[3], cp[3];
    for (int r = 0; r < 3; ++r)
        sigma[r] = ctx.rational(1, 2) + 3 * cos_rational_pi(1L << (r + 1), 7, ctx);
    tau[0] = sigma[2] - sigma[1];
    tau[1] = sigma[0] - sigma[2];
    tau[2] = sigma[1] - sigma[0];
    for (int r = 0; r < 3; ++r) {
        bp[r] = -(3 * sigma[r] + 5 * tau[r]) / 3;
        cp[r] = -(7 + 4 * sigma[r] + 2 * tau[r]) / 3;
    }
    auto mixed_seventh = [&](const Real* base, int i) {
        // (base_i^4 base_{i+1}^2 base_{i+2})^{1/7}, indices cyclic
        Real radicand = pow_int(base[i], 4) * pow_int(base[(i + 1) % 3], 2) * base[(i + 2) % 3];
        return rational_pow(radicand, 1, 7);
    };
    Real sum = ctx.real(0);
    for (int i = 0; i < 3; ++i) sum += mixed_seventh(bp, i);
    for (int i = 0; i < 3; ++i) sum += mixed_seventh(cp, i);
    if (!(sum > 0)) throw construction_error("Watson radical sum must be positive");
    return rational_pow(ctx.real(2), 1, 4) * 7 / sum;
}

// --- parameterized families -----------------------------------------------

struct SepticFamily {
    Real p;
    Real m; // m^2 is the quartic ratio
    CubicPoly r;
};

/// p_a = ((a+1)^2 + 1)/2, m_a = ((a^3 + 4a^2 + 10a + 14)/2)^{1/2}, and the
/// associated cubic. a = 0 reproduces the q = e^{-pi/sqrt7} instance,
/// a = 28^{1/4} the q = e^{-pi/7} one.
inline SepticFamily family_pa_ma_ra(const Real& a, const PrecisionContext& ctx) {
    (void)ctx;
    Real p = ((a + 1) * (a + 1) + 1) / 2;
    Real m2 = (((a + 4) * a + 10) * a + 14) / 2;
    return {p, sqrt(m2), build_r(p, m2)};
}

/// Degree-7 ratio formulas in terms of class invariants, for positive
/// rational n (closed-form table first, chi-numeric fallback).
inline Real ratio_3pi_sqrt_n(const Rational& n, const PrecisionContext& ctx) {
    Real gn = class_invariant(n, ctx);
    Real g9n = class_invariant(n * Rational(9), ctx);
    return rational_pow(1 + 2 * sqrt(ctx.real(2)) * pow_int(g9n, 3) / pow_int(gn, 9), 1, 4) /
           sqrt(ctx.real(3));
}
inline Real ratio_5pi_sqrt_n(const Rational& n, const PrecisionContext& ctx) {
    Real gn = class_invariant(n, ctx);
    Real g25n = class_invariant(n * Rational(25), ctx);
    return sqrt(1 + 2 * g25n / pow_int(gn, 5)) / sqrt(ctx.real(5));
}
inline Real ratio_9pi_sqrt_n(const Rational& n, const PrecisionContext& ctx) {
    Real gn = class_invariant(n, ctx);
    Real g9n = class_invariant(n * Rational(9), ctx);
    return (1 + sqrt(ctx.real(2)) * g9n / pow_int(gn, 3)) / 3;
}
inline Real ratio_7pi_sqrt_n(const Rational& n, const PrecisionContext& ctx) {
    Real gn = class_invariant(n, ctx);
    Real g49n = class_invariant(n * Rational(49), ctx);
    Real p = 2 * sqrt(ctx.real(2)) * g49n / pow_int(gn, 7);
    return sqrt(m_of_p(p, ctx)) / sqrt(ctx.real(7));
}

// --- proof-step identity checks --------------------------------------------

/// (2 + 5 p_a)^2 - 4(1 - p_a)^3 versus
/// (2a^3 + 3a^2 + 10a + 14)^2 / 4 - (a^2/2)(a^4 - 28), p_a = ((a+1)^2+1)/2.
/// The second term vanishes at a = 28^{1/4}; its sign follows from
/// expanding both sides in a.
inline std::pair<Real, Real> e7_part_i_sides(const Real& a, const PrecisionContext& ctx) {
    (void)ctx;
    Real pa = ((a + 1) * (a + 1) + 1) / 2;
    Real lhs = (2 + 5 * pa) * (2 + 5 * pa) - 4 * (1 - pa) * (1 - pa) * (1 - pa);
    Real poly = ((2 * a + 3) * a * a + 10 * a + 14); // 2a^3 + 3a^2 + 10a + 14
    Real rhs = poly * poly / 4 - a * a / 2 * (pow_int(a, 4) - 28);
    return {lhs, rhs};
}

/// (sqrt(13 + a^2/2) + sqrt(7 + 3a^2/2))^2 versus
/// 2a^2 + sqrt((8a + 28/a)^2 + (3a^2 + 28)(a^4 - 28)/a^2) + 20, a != 0.
inline std::pair<Real, Real> e7_part_ii_sides(const Real& a, const PrecisionContext& ctx) {
    (void)ctx;
    if (a.zero()) throw domain_error("identity requires a != 0");
    Real a2 = a * a;
    Real s = sqrt(13 + a2 / 2) + sqrt(7 + 3 * a2 / 2);
    Real lhs = s * s;
    Real t = 8 * a + 28 / a;
    Real rhs = 2 * a2 + sqrt(t * t + (3 * a2 + 28) * (pow_int(a, 4) - 28) / a2) + 20;
    return {lhs, rhs};
}

/// The quartic-family identity with the degree-14 polynomial P:
/// (2 + 5 p_a)^2 - 4(1 - p_a)^3 versus
/// 4 (m_a^2 - 1 - 5 p_a / 2)^2 - (a^6 - 756) P(a) / 306110016.
inline std::pair<Real, Real> e7pisqrt3_identity_sides(const Real& a, const PrecisionContext& ctx) {
    Real pa = ((((a + 3) * a + 12) * a + 18) * a + 90) / 54; // (a^4+3a^3+12a^2+18a+90)/54
    Real a2 = a * a;
    Real ma = (a * (a2 + 6) * (a2 + 6) / 18 + a * (a + 6) + 6) / (6 * sqrt(ctx.real(3)));
    Real lhs = (2 + 5 * pa) * (2 + 5 * pa) - 4 * (1 - pa) * (1 - pa) * (1 - pa);
    static const long pcoef[] = {1,      0,       48,       72,       1440,
                                 3024,   27108,   68040,    375840,   843696,
                                 3005424, 5762016, 13576896, 15536448, 5878656};
    Real P = ctx.real(0);
    for (long c : pcoef) P = P * a + c;
    Real diff = ma * ma - 1 - 5 * pa / 2;
    Real rhs = 4 * diff * diff - (pow_int(a, 6) - 756) * P / 306110016;
    return {lhs, rhs};
}

/// Worst-agreeing (lhs, rhs) pair of a proof-step identity over the sampled
/// a grid {1/2, 1, 28^{1/4}, 756^{1/6}}.
inline std::pair<Real, Real> proof_identity_worst_pair(const std::string& id,
                                                       const PrecisionContext& ctx) {
    std::vector<Real> samples = {ctx.rational(1, 2), ctx.real(1),
                                 rational_pow(ctx.real(28), 1, 4),
                                 rational_pow(ctx.real(756), 1, 6)};
    std::pair<Real, Real> worst{ctx.real(0), ctx.real(0)};
    long worst_agree = -1;
    for (const Real& a : samples) {
        std::pair<Real, Real> sides{ctx.real(0), ctx.real(0)};
        if (id == "proof-id-e7-i")
            sides = e7_part_i_sides(a, ctx);
        else if (id == "proof-id-e7-ii")
            sides = e7_part_ii_sides(a, ctx);
        else if (id == "proof-id-e7sqrt3")
            sides = e7pisqrt3_identity_sides(a, ctx);
        else
            throw registry_error("unknown proof identity: " + id);
        long agreed = agree_digits(sides.first, sides.second);
        if (worst_agree < 0 || agreed < worst_agree) {
            worst_agree = agreed;
            worst = sides;
        }
    }
    return worst;
}

/// Evaluate one of the proof-step identities and report the worst pair.
inline VerificationResult proof_identity_check(const std::string& id,
                                               const PrecisionContext& ctx) {
    auto [lhs, rhs] = proof_identity_worst_pair(id, ctx);
    return make_result(id, lhs, rhs, ctx.digits() - 5, ctx.digits());
}

// --- registry ---------------------------------------------------------------

namespace detail {

inline std::map<std::string, ClosedFormEntry> build_closed_form_registry() {
    std::vector<ClosedFormEntry> entries;
    auto add = [&entries](std::string id, std::string description, std::string recipe,
                          std::function<Real(const PrecisionContext&)> fn) {
        entries.push_back({std::move(id), std::move(description), std::move(recipe), std::move(fn)});
    };

    add("phi-e-pi", "phi(e^-pi)", "pi^(1/4)/Gamma(3/4)", phi_e_pi);
    add("phi-e-pi-sqrt3", "phi(e^-pi sqrt3)", "3^(1/8) Gamma(1/3)^(3/2) / (2^(2/3) pi)",
        phi_e_pi_sqrt3);
    add("phi-e-pi-sqrt7-gamma", "phi(e^-pi sqrt7), Gamma form",
        "sqrt(Gamma(1/7) Gamma(2/7) Gamma(4/7)) / (sqrt2 7^(1/8) pi)", phi_e_pi_sqrt7_gamma);
    add("phi-e-pi-sqrt7-beta", "phi(e^-pi sqrt7), beta form",
        "sqrt2 sqrt((cos(pi/7) - cos(3pi/7)) B(1/7,2/7)) / (7^(3/8) sqrt(pi))",
        phi_e_pi_sqrt7_beta);
    add("thm1-bracket", "septic cosine bracket",
        "1 + (cos(pi/7)/(2cos^2(2pi/7)))^(2/7) + (cos(2pi/7)/(2cos^2(3pi/7)))^(2/7)"
        " + (cos(3pi/7)/(2cos^2(pi/7)))^(2/7)",
        septic_cosine_bracket);
    add("thm1-phi-7pi-sqrt7", "phi(e^-7pi sqrt7)",
        "sqrt(Gamma(1/7) Gamma(2/7) Gamma(4/7)) / (sqrt2 7^(7/8) pi) * bracket",
        phi_e_7pi_sqrt7);
    add("g343-thm2", "G_343 via the degree-7 multiplier",
        "2^(1/4) p^(-1/7), p the real root of p^3 - 3p^2 + (3+5m^2)p - (m^2-1)^2",
        g343_from_multiplier);
    add("g343-watson", "G_343, Watson's nested radicals",
        "2^(1/4) 7 / (b1+b2+b3+c1+c2+c3), sigma_r = 1/2 + 3cos(2^r pi/7)",
        watson_g343_explicit);
    add("thm-e7", "phi^2(e^-7pi)/phi^2(e^-pi)",
        "(sqrt(13+sqrt7) + sqrt(7+3sqrt7))/14 * 28^(1/8)", theorem_e7);
    add("thm-e7pisqrt3", "phi^2(e^-7pi sqrt3)/phi^2(e^-pi sqrt3)",
        "((sqrt21+3) 28^(1/3) + 8 sqrt3 28^(1/6) + 4 sqrt21 + 6) / (42 sqrt3)",
        theorem_e7pisqrt3);
    add("thm-e7pisqrt3-phi", "phi(e^-7pi sqrt3)",
        "Gamma(1/3)^(3/2) / (2^(7/6) 3^(5/8) sqrt7 pi) * sqrt(inner)", phi_e_7pi_sqrt3);
    add("e21-p", "product invariant p at q = e^-pi/21",
        "sqrt2 (2-sqrt3) sqrt(sqrt3+sqrt7) sqrt(2+sqrt7+sqrt(7+4sqrt7)) sqrt(ratio)",
        e21_p);
    add("thm-e21", "phi(e^-21pi)/phi(e^-pi)",
        "sqrt(m(p) / (7 sqrt(6 sqrt3 - 9)))", theorem_e21);
    add("alt-e21", "phi(e^-21pi)/phi(e^-pi), alternative radicals",
        "sqrt((sqrt(13+sqrt7)+sqrt(7+3sqrt7))/42) 28^(1/16) {1 + ...}^(1/4)", alt_e21);
    add("e35-p", "product invariant p at q = e^-pi/35",
        "(9-4sqrt5)/4 sqrt(sqrt14+sqrt10) (7^(1/4)+sqrt(4+sqrt7))^(3/2) (...)", e35_p);
    add("thm-e35", "phi(e^-35pi)/phi(e^-pi)",
        "sqrt(m(p) / (35 (sqrt5 - 2)))", theorem_e35);
    add("alt-e35", "phi(e^-35pi)/phi(e^-pi), alternative radicals",
        "sqrt((sqrt(13+sqrt7)+sqrt(7+3sqrt7))/70) 28^(1/16) {1 + ...}^(1/2)", alt_e35);
    add("e3-const", "phi(e^-3pi)/phi(e^-pi)", "(6 sqrt3 - 9)^(-1/4)", e3_constant);
    add("e5-const", "phi(e^-5pi)/phi(e^-pi)", "(5 sqrt5 - 10)^(-1/2)", e5_constant);
    add("thm-e49-p", "product invariant p at q = e^-pi/7",
        "sqrt7 + sqrt2 7^(1/4) + 1", e49_p);
    add("thm-e49-alpha", "largest ordered root at q = e^-pi/7",
        "(1/sqrt7){(2/3)(sqrt7+2)(5+3 sqrt2 7^(1/4)-sqrt7) + ... cos(pi/7), cos(2pi/7)}",
        e49_alpha);
    add("thm-e49-beta", "middle ordered root at q = e^-pi/7",
        "(1/sqrt7){(1/9)(sqrt7+5)(13+9 sqrt2 7^(1/4)+sqrt7) - 8cos(pi/7) + ...}", e49_beta);
    add("thm-e49-gamma", "smallest ordered root at q = e^-pi/7",
        "(1/sqrt7){(1/3)(sqrt7+5)(1+3 sqrt2 7^(1/4)+sqrt7) + ... - 8cos(2pi/7)}", e49_gamma);
    add("thm-e49", "phi(e^-49pi)/phi(e^-pi)", "(1 + u + v + w)/7 from the closed-form roots",
        theorem_e49);
    add("trig-41", "sum of the three squared cosine quotients",
        "(cos(pi/7)/(2cos^2(2pi/7)))^2 + (cos(2pi/7)/(2cos^2(3pi/7)))^2"
        " + (cos(3pi/7)/(2cos^2(pi/7)))^2",
        trig_41_sum);

    // class-invariant table
    auto add_g = [&](long long n, std::string recipe) {
        add("g" + std::to_string(n), "class invariant G_" + std::to_string(n),
            std::move(recipe), [n](const PrecisionContext& ctx) {
                return class_invariant_closed(Rational(n), ctx);
            });
    };
    add_g(1, "1");
    add_g(3, "2^(1/12)");
    add_g(7, "2^(1/4)");
    add_g(9, "((1+sqrt3)/sqrt2)^(1/3)");
    add_g(25, "(1+sqrt5)/2");
    add_g(49, "(7^(1/4) + sqrt(4+sqrt7))/2");
    add_g(147, "2^(1/12) (1/2 + (sqrt(7/4) - 28^(1/6))/sqrt3)^(-1)");
    add_g(441, "sqrt((sqrt3+sqrt7)/2) (2+sqrt3)^(1/6) sqrt((2+sqrt7+sqrt(7+4sqrt7))/2) sqrt(ratio)");
    add_g(1225, "(1+sqrt5)/2 (6+sqrt35)^(1/4) ((7^(1/4)+sqrt(4+sqrt7))/2)^(3/2) (...)");

    // fixed instances of the degree-k ratio formulas
    add("ratio-3pisqrtn-n1", "phi(e^-3pi)/phi(e^-pi) via G_9, G_1",
        "(1/sqrt3)(1 + 2 sqrt2 G_9^3 / G_1^9)^(1/4)",
        [](const PrecisionContext& ctx) { return ratio_3pi_sqrt_n(Rational(1), ctx); });
    add("ratio-5pisqrtn-n1", "phi(e^-5pi)/phi(e^-pi) via G_25, G_1",
        "(1/sqrt5)(1 + 2 G_25 / G_1^5)^(1/2)",
        [](const PrecisionContext& ctx) { return ratio_5pi_sqrt_n(Rational(1), ctx); });
    add("ratio-9pisqrtn-n1", "phi(e^-9pi)/phi(e^-pi) via G_9, G_1",
        "(1/3)(1 + sqrt2 G_9 / G_1^3)",
        [](const PrecisionContext& ctx) { return ratio_9pi_sqrt_n(Rational(1), ctx); });
    add("ratio-7pisqrtn-n1", "phi(e^-7pi)/phi(e^-pi) via G_49, G_1",
        "m(p)^(1/2)/sqrt7, p = 2 sqrt2 G_49 / G_1^7",
        [](const PrecisionContext& ctx) { return ratio_7pi_sqrt_n(Rational(1), ctx); });
    add("ratio-7pisqrtn-n3", "phi(e^-7pi sqrt3)/phi(e^-pi sqrt3) via G_147, G_3",
        "m(p)^(1/2)/sqrt7, p = 2 sqrt2 G_147 / G_3^7",
        [](const PrecisionContext& ctx) { return ratio_7pi_sqrt_n(Rational(3), ctx); });

    std::map<std::string, ClosedFormEntry> reg;
    for (auto& e : entries) {
        auto [it, inserted] = reg.emplace(e.id, std::move(e));
        (void)it;
        if (!inserted) throw registry_error("duplicate closed-form id");
    }
    return reg;
}

} // namespace detail

inline const std::map<std::string, ClosedFormEntry>& closed_form_registry() {
    static const std::map<std::string, ClosedFormEntry> reg = detail::build_closed_form_registry();
    return reg;
}

inline const ClosedFormEntry& closed_form_entry(const std::string& id) {
    const auto& reg = closed_form_registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw registry_error("unknown closed-form id: " + id);
    return it->second;
}

inline Real evaluate_closed_form(const std::string& id, const PrecisionContext& ctx) {
    Real v = closed_form_entry(id).evaluate(ctx);
    if (!v.finite()) throw error("closed form evaluated to a non-finite value: " + id);
    return v;
}

inline std::vector<std::string> closed_form_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, entry] : closed_form_registry()) ids.push_back(id);
    return ids;
}

} // namespace septica
