#pragma once

// Class invariants G_n: numeric from the chi product at q = e^{-pi sqrt n},
// and closed-form from the tabulated radical values. The reciprocal rule
// G_n = G_{1/n} folds every rational index onto the table.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "septica/special.hpp"
#include "septica/theta.hpp"

namespace septica {

enum class InvariantSource { numeric, closed_form };

struct ClassInvariantRecord {
    Rational n;
    Real value;
    InvariantSource source;
    std::optional<std::string> closed_form_id;
};

/// e^{-pi sqrt(n)} for rational n > 0.
inline Real nome_for_index(const Rational& n, const PrecisionContext& ctx) {
    if (!n.positive()) throw domain_error("index must be positive");
    return exp(-(const_pi(ctx) * sqrt(ctx.rational(n))));
}

/// G_n = 2^{-1/4} q^{-1/24} chi(q) at q = e^{-pi sqrt n}. The q^{-1/24}
/// factor is written as e^{pi sqrt(n)/24} to avoid an avoidable rounding.
inline Real class_invariant_numeric(const Rational& n, const PrecisionContext& ctx) {
    if (!n.positive()) throw domain_error("class invariant requires n > 0");
    Real pisqrtn = const_pi(ctx) * sqrt(ctx.rational(n));
    Real q = exp(-pisqrtn);
    return rational_pow(ctx.real(2), -1, 4) * exp(pisqrtn / 24) * chi(Nome{q}, ctx);
}

/// 1 + sum of the three (cos / 2cos^2)^{2/7} septic bracket terms that
/// complete the degree-7 identity at q = e^{-pi/sqrt 7}.
inline Real septic_cosine_bracket(const PrecisionContext& ctx) {
    Real c1 = cos_rational_pi(1, 7, ctx);
    Real c2 = cos_rational_pi(2, 7, ctx);
    Real c3 = cos_rational_pi(3, 7, ctx);
    return ctx.real(1) + rational_pow(c1 / (2 * c2 * c2), 2, 7) +
           rational_pow(c2 / (2 * c3 * c3), 2, 7) +
           rational_pow(c3 / (2 * c1 * c1), 2, 7);
}

/// G_343 from the degree-7 multiplier route: m = 7^{3/2} / bracket^2, the
/// only real root p of p^3 - 3p^2 + (3 + 5m^2)p - (m^2 - 1)^2 = 0 in
/// explicit radical form, and G_343 = 2^{1/4} p^{-1/7}. The p expression
/// cancels to ~5e-7 from O(1) terms; the guard digits absorb that.
inline Real g343_from_multiplier(const PrecisionContext& ctx) {
    Real bracket = septic_cosine_bracket(ctx);
    Real m = rational_pow(ctx.real(7), 3, 2) / (bracket * bracket);
    Real m2 = m * m;
    Real s = 12 * m2 *
             (9 * (7 - m2) + sqrt(ctx.real(3)) * sqrt(27 * (m2 * m2 + 49) + 122 * m2));
    Real s3 = rational_pow(s, 1, 3);
    Real p = 1 + 10 * m2 / s3 - s3 / 6;
    return rational_pow(ctx.real(2), 1, 4) * rational_pow(p, -1, 7);
}

/// Closed form for tabulated n (or its reciprocal); nullopt when absent.
inline std::optional<Real> class_invariant_closed_opt(const Rational& n_in,
                                                      const PrecisionContext& ctx) {
    if (!n_in.positive()) throw domain_error("class invariant requires n > 0");
    Rational n = n_in;
    if (n.num < n.den) n = n.reciprocal(); // G_n = G_{1/n}
    if (!n.is_integer()) return std::nullopt;

    Real sqrt2 = sqrt(ctx.real(2));
    Real sqrt3 = sqrt(ctx.real(3));
    Real sqrt5 = sqrt(ctx.real(5));
    Real sqrt7 = sqrt(ctx.real(7));

    switch (n.num) {
        case 1:
            return ctx.real(1);
        case 3:
            return rational_pow(ctx.real(2), 1, 12);
        case 7:
            return rational_pow(ctx.real(2), 1, 4);
        case 9:
            return rational_pow((1 + sqrt3) / sqrt2, 1, 3);
        case 25:
            return (1 + sqrt5) / 2;
        case 49:
            return (rational_pow(ctx.real(7), 1, 4) + sqrt(4 + sqrt7)) / 2;
        case 147:
            return rational_pow(ctx.real(2), 1, 12) /
                   (ctx.rational(1, 2) +
                    (sqrt(ctx.rational(7, 4)) - rational_pow(ctx.real(28), 1, 6)) / sqrt3);
        case 343:
            return g343_from_multiplier(ctx);
        case 441:
            return sqrt((sqrt3 + sqrt7) / 2) * rational_pow(2 + sqrt3, 1, 6) *
                   sqrt((2 + sqrt7 + sqrt(7 + 4 * sqrt7)) / 2) *
                   sqrt((sqrt(3 + sqrt7) + rational_pow(6 * sqrt7, 1, 4)) /
                        (sqrt(3 + sqrt7) - rational_pow(6 * sqrt7, 1, 4)));
        case 1225: {
            Real inner = (8 + 3 * sqrt7) * sqrt(10 * sqrt7);
            return (1 + sqrt5) / 2 * rational_pow(6 + sqrt(ctx.real(35)), 1, 4) *
                   rational_pow((rational_pow(ctx.real(7), 1, 4) + sqrt(4 + sqrt7)) / 2, 3, 2) *
                   (sqrt((43 + 15 * sqrt7 + inner) / 8) + sqrt((35 + 15 * sqrt7 + inner) / 8));
        }
        default:
            return std::nullopt;
    }
}

inline Real class_invariant_closed(const Rational& n, const PrecisionContext& ctx) {
    if (auto v = class_invariant_closed_opt(n, ctx)) return *v;
    throw unknown_invariant("no tabulated closed form for this index");
}

/// Tabulated closed form when available, numeric fallback otherwise.
inline Real class_invariant(const Rational& n, const PrecisionContext& ctx,
                            bool allow_numeric = true) {
    if (auto v = class_invariant_closed_opt(n, ctx)) return *v;
    if (!allow_numeric) throw unknown_invariant("no tabulated closed form for this index");
    return class_invariant_numeric(n, ctx);
}

/// p = 2 sqrt(2) G_n / G_{49n}^7, the septic product invariant for
/// q = e^{-pi sqrt n}.
inline Real p_from_invariants(const Rational& n, const PrecisionContext& ctx,
                              bool allow_numeric = true) {
    Real gn = class_invariant(n, ctx, allow_numeric);
    Real g49n = class_invariant(n * Rational(49), ctx, allow_numeric);
    return 2 * sqrt(ctx.real(2)) * gn / pow_int(g49n, 7);
}

/// Degree-d multiplier phi^2(e^{-pi sqrt n}) / phi^2(e^{-d pi sqrt n}).
inline Real multiplier_numeric(const Rational& n, long d, const PrecisionContext& ctx) {
    if (d < 1) throw domain_error("multiplier requires d >= 1");
    Real q = nome_for_index(n, ctx);
    Real r = phi(Nome{q}, ctx) / phi(Nome{pow_int(q, d)}, ctx);
    return r * r;
}

/// Indices with tabulated closed forms, ascending.
inline const std::vector<long>& tabulated_invariant_indices() {
    static const std::vector<long> indices = {1, 3, 7, 9, 25, 49, 147, 343, 441, 1225};
    return indices;
}

/// One record per tabulated index, closed-form values with registry ids.
inline std::vector<ClassInvariantRecord> invariant_table(const PrecisionContext& ctx) {
    std::vector<ClassInvariantRecord> rows;
    for (long n : tabulated_invariant_indices()) {
        Rational index(n);
        std::string id = n == 343 ? "g343-thm2" : "g" + std::to_string(n);
        rows.push_back({index, class_invariant_closed(index, ctx),
                        InvariantSource::closed_form, std::move(id)});
    }
    return rows;
}

} // namespace septica
