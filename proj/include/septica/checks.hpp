#pragma once

// Named verification checks. Each check recomputes a quantity along two
// independent routes (or evaluates a residual that must vanish) and reports
// the digit agreement. Required digits scale with the requested precision:
// required = digits - margin, with per-check margins sized to the known
// cancellation in each computation.

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "septica/cache.hpp"
#include "septica/closed_forms.hpp"
#include "septica/report.hpp"

namespace septica {

struct CheckOutcome {
    Real lhs, rhs;
    std::optional<bool> ok; // set for strict-inequality checks
};

struct CheckDefinition {
    std::string id;
    int margin = 10;
    std::function<CheckOutcome(const PrecisionContext&)> run;
};

namespace detail {

struct GridPoint {
    std::string tag;
    std::function<Real(const PrecisionContext&)> q;
};

/// The nome grid every pipeline-level property is verified on.
inline const std::vector<GridPoint>& pipeline_grid() {
    static const std::vector<GridPoint> grid = {
        {"q0.05", [](const PrecisionContext& c) { return c.rational(1, 20); }},
        {"q0.2", [](const PrecisionContext& c) { return c.rational(1, 5); }},
        {"q0.4", [](const PrecisionContext& c) { return c.rational(2, 5); }},
        {"q0.6", [](const PrecisionContext& c) { return c.rational(3, 5); }},
        {"qe-pi", [](const PrecisionContext& c) { return exp(-const_pi(c)); }},
        {"qe-pi-sqrt7",
         [](const PrecisionContext& c) { return exp(-const_pi(c) / sqrt(c.real(7))); }},
        {"qe-pi-7", [](const PrecisionContext& c) { return exp(-const_pi(c) / 7); }},
    };
    return grid;
}

/// Worst-agreeing pair among candidate (lhs, rhs) comparisons.
class WorstPair {
public:
    void consider(const Real& lhs, const Real& rhs) {
        long agreed = agree_digits(lhs, rhs);
        if (!best_.has_value() || agreed < *best_) {
            best_ = agreed;
            lhs_ = lhs;
            rhs_ = rhs;
        }
    }
    CheckOutcome outcome() const { return {lhs_, rhs_, std::nullopt}; }

private:
    std::optional<long> best_;
    Real lhs_, rhs_;
};

inline Real series_phi_ratio_pow4(const Nome& q, const PrecisionContext& ctx) {
    return pow_int(phi_ratio(q, 7, ctx), 4);
}

inline std::vector<CheckDefinition> build_checks() {
    std::vector<CheckDefinition> checks;
    auto add = [&checks](std::string id, int margin,
                         std::function<CheckOutcome(const PrecisionContext&)> fn) {
        checks.push_back({std::move(id), margin, std::move(fn)});
    };

    // ---- precision core ----
    add("pi-acos-cross", 0, [](const PrecisionContext& ctx) {
        return CheckOutcome{const_pi(ctx), 2 * acos(ctx.real(0)), std::nullopt};
    });
    for (auto [num, den] : {std::pair<long, long>{1, 7}, {2, 7}, {1, 4}, {1, 3}}) {
        add("gamma-recurrence-" + std::to_string(num) + "-" + std::to_string(den), 2,
            [num, den](const PrecisionContext& ctx) {
                Real lhs = gamma_rational(num + den, den, ctx); // Gamma(x + 1)
                Real rhs = ctx.rational(num, den) * gamma_rational(num, den, ctx);
                return CheckOutcome{lhs, rhs, std::nullopt};
            });
    }
    add("gamma-reflection-1-4", 2, [](const PrecisionContext& ctx) {
        return CheckOutcome{gamma_rational(1, 4, ctx) * gamma_rational(3, 4, ctx),
                            const_pi(ctx) * sqrt(ctx.real(2)), std::nullopt};
    });
    for (long m : {3L, 5L, 7L}) {
        add("cos-chebyshev-m" + std::to_string(m), 2, [m](const PrecisionContext& ctx) {
            Real worst = ctx.real(0);
            for (long k = 1; k < m; ++k)
                worst = max(worst, abs(chebyshev_u(m - 1, cos_rational_pi(k, m, ctx), ctx)));
            return CheckOutcome{worst, ctx.real(0), std::nullopt};
        });
    }

    // ---- theta series ----
    {
        const std::pair<std::pair<long, long>, std::pair<long, long>> pairs[] = {
            {{1, 5}, {3, 10}},  {{-1, 2}, {7, 10}},  {{9, 10}, {17, 20}},
            {{1, 2}, {-99, 100}}, {{-4, 5}, {-9, 10}}, {{1, 20}, {1, 50}},
        };
        int index = 0;
        for (const auto& [ap, bp] : pairs) {
            ++index;
            add("jacobi-grid-" + std::to_string(index), 2,
                [ap, bp](const PrecisionContext& ctx) {
                    Real a = ctx.rational(ap.first, ap.second);
                    Real b = ctx.rational(bp.first, bp.second);
                    return CheckOutcome{f_series(a, b, ctx), f_product(a, b, ctx), std::nullopt};
                });
        }
    }
    for (auto [num, den, tag] : {std::tuple<long, long, const char*>{1, 20, "q0.05"},
                                 {1, 5, "q0.2"},
                                 {1, 2, "q0.5"},
                                 {4, 5, "q0.8"}}) {
        add(std::string("phi-product-") + tag, 2, [num, den](const PrecisionContext& ctx) {
            Real q = ctx.rational(num, den);
            Nome nome{q};
            Real prod = chi(nome, ctx); // (-q; q^2)_inf
            Real rhs = prod * prod * qpochhammer(q * q, Nome{q * q}, ctx);
            return CheckOutcome{phi(nome, ctx), rhs, std::nullopt};
        });
    }
    for (long n : {2L, 3L, 7L, 49L}) {
        add("transform-n" + std::to_string(n), 2, [n](const PrecisionContext& ctx) {
            Real pi = const_pi(ctx);
            Real sn = sqrt(ctx.real(n));
            Real lhs = phi(Nome{exp(-pi / sn)}, ctx);
            Real rhs = rational_pow(ctx.real(n), 1, 4) * phi(Nome{exp(-pi * sn)}, ctx);
            return CheckOutcome{lhs, rhs, std::nullopt};
        });
    }
    for (long n : {5L, 7L, 9L, 11L}) {
        for (auto [qn, qd, tag] : {std::tuple<long, long, const char*>{1, 10, "q0.1"},
                                   {1, 2, "q0.5"},
                                   {9, 10, "q0.9"}}) {
            add("u-ordering-n" + std::to_string(n) + "-" + tag, 0,
                [n, qn, qd](const PrecisionContext& ctx) {
                    Nome q{ctx.rational(qn, qd)};
                    bool ok = true;
                    Real prev = u_component(q, n, 0, ctx);
                    for (long k = 1; k <= (n - 1) / 2; ++k) {
                        Real cur = u_component(q, n, k, ctx);
                        if (!(cur > 0 && cur < prev)) ok = false;
                        prev = cur;
                    }
                    return CheckOutcome{ctx.real(ok ? 1 : 0), ctx.real(1), ok};
                });
        }
    }
    {
        const std::pair<std::pair<long, long>, std::pair<long, long>> shifts[] = {
            {{3, 10}, {1, 2}}, {{-2, 5}, {3, 5}}, {{6, 5}, {2, 5}}};
        int index = 0;
        for (const auto& [ap, bp] : shifts) {
            ++index;
            add("f-shift-" + std::to_string(index), 2, [ap, bp](const PrecisionContext& ctx) {
                Real a = ctx.rational(ap.first, ap.second);
                Real b = ctx.rational(bp.first, bp.second);
                Real lhs = f_series(a, b, ctx);
                Real rhs = a * f_series(1 / a, a * a * b, ctx);
                return CheckOutcome{lhs, rhs, std::nullopt};
            });
        }
    }
    for (auto [qn, qd, tag] : {std::tuple<long, long, const char*>{1, 10, "q0.1"},
                               {3, 10, "q0.3"},
                               {3, 5, "q0.6"}}) {
        add(std::string("son-i-") + tag, 3, [qn, qd](const PrecisionContext& ctx) {
            Nome q{ctx.rational(qn, qd)};
            UVW t = uvw_series(q, ctx);
            Real M = series_phi_ratio_pow4(q, ctx);
            Real p = t.u * t.v * t.w;
            Real lhs = pow_int(t.u, 3) * t.v + pow_int(t.v, 3) * t.w + pow_int(t.w, 3) * t.u;
            return CheckOutcome{lhs, 2 * (M - 3 * p - 1), std::nullopt};
        });
        add(std::string("son-ii-") + tag, 3, [qn, qd](const PrecisionContext& ctx) {
            Nome q{ctx.rational(qn, qd)};
            UVW t = uvw_series(q, ctx);
            Real M = series_phi_ratio_pow4(q, ctx);
            Real p = t.u * t.v * t.w;
            Real lhs = pow_int(t.u, 7) + pow_int(t.v, 7) + pow_int(t.w, 7);
            return CheckOutcome{lhs, seventh_power_sum_target(p, M), std::nullopt};
        });
    }

    // ---- class invariants ----
    for (long n : {1L, 3L, 7L, 9L, 25L, 49L, 147L, 343L, 441L, 1225L}) {
        add("g-table-n" + std::to_string(n), 5, [n](const PrecisionContext& ctx) {
            return CheckOutcome{class_invariant_closed(Rational(n), ctx),
                                class_invariant_numeric(Rational(n), ctx), std::nullopt};
        });
    }
    for (long n : {3L, 7L, 49L}) {
        add("g-reciprocity-n" + std::to_string(n), 2, [n](const PrecisionContext& ctx) {
            return CheckOutcome{class_invariant_numeric(Rational(n), ctx),
                                class_invariant_numeric(Rational(1, n), ctx), std::nullopt};
        });
    }
    add("watson-quartic-identity", 2, [](const PrecisionContext& ctx) {
        Real lhs = rational_pow(6 + sqrt(ctx.real(35)), 1, 4);
        Real rhs = sqrt((sqrt(ctx.real(14)) + sqrt(ctx.real(10))) / 2);
        return CheckOutcome{lhs, rhs, std::nullopt};
    });
    add("g343-septic-residual", 8, [](const PrecisionContext& ctx) {
        Real x = g343_from_multiplier(ctx) / rational_pow(ctx.real(2), 1, 4);
        Real residual = pow_int(x, 7) - 7 * pow_int(x, 6) - 7 * pow_int(x, 5) - 7 * pow_int(x, 4) - 1;
        return CheckOutcome{residual / pow_int(x, 7), ctx.real(0), std::nullopt};
    });
    add("multiplier-n7-d7", 5, [](const PrecisionContext& ctx) {
        Real bracket = septic_cosine_bracket(ctx);
        return CheckOutcome{multiplier_numeric(Rational(7), 7, ctx),
                            rational_pow(ctx.real(7), 3, 2) / (bracket * bracket), std::nullopt};
    });
    add("multiplier-n1-49-d7", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{multiplier_numeric(Rational(1, 49), 7, ctx),
                            m_of_p(e49_p(ctx), ctx), std::nullopt};
    });
    add("p-invariants-n1-7", 3, [](const PrecisionContext& ctx) {
        return CheckOutcome{p_from_invariants(Rational(1, 7), ctx), ctx.real(1), std::nullopt};
    });
    add("p-invariants-n1-49", 3, [](const PrecisionContext& ctx) {
        return CheckOutcome{p_from_invariants(Rational(1, 49), ctx), e49_p(ctx), std::nullopt};
    });
    add("p-invariants-vs-series-n1", 3, [](const PrecisionContext& ctx) {
        Real q = exp(-const_pi(ctx));
        return CheckOutcome{p_from_invariants(Rational(1), ctx), p_product(Nome{q}, ctx),
                            std::nullopt};
    });
    add("g343-cubic-residual", 5, [](const PrecisionContext& ctx) {
        Real bracket = septic_cosine_bracket(ctx);
        Real m2 = ctx.real(343) / pow_int(bracket, 4); // m^2 = 7^3 / bracket^4
        Real g = g343_from_multiplier(ctx);
        Real p = pow_int(rational_pow(ctx.real(2), 1, 4) / g, 7);
        Real residual = pow_int(p, 3) - 3 * p * p + (3 + 5 * m2) * p - (m2 - 1) * (m2 - 1);
        return CheckOutcome{residual, ctx.real(0), std::nullopt};
    });

    // ---- septic pipeline on the grid ----
    for (const auto& point : pipeline_grid()) {
        const auto qfn = point.q;
        add("pipeline-uvw-" + point.tag, 5, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            SepticSolution sol = run_pipeline(q, ctx);
            UVW series = uvw_series(q, ctx);
            WorstPair worst;
            worst.consider(sol.u, series.u);
            worst.consider(sol.v, series.v);
            worst.consider(sol.w, series.w);
            return worst.outcome();
        });
        add("pipeline-ratio-" + point.tag, 5, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            SepticSolution sol = run_pipeline(q, ctx);
            Real direct = phi(Nome{rational_pow(q.value(), 1, 7)}, ctx) /
                          phi(Nome{pow_int(q.value(), 7)}, ctx);
            return CheckOutcome{sol.ratio, direct, std::nullopt};
        });
        add("pipeline-p-" + point.tag, 3, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            UVW t = uvw_series(q, ctx);
            return CheckOutcome{t.u * t.v * t.w, p_product(q, ctx), std::nullopt};
        });
        add("entry1-iii-residual-" + point.tag, 5, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            Real M = series_phi_ratio_pow4(q, ctx);
            Real p = p_product(q, ctx);
            Real residual = M * M - (2 + 5 * p) * M + (1 - p) * (1 - p) * (1 - p);
            return CheckOutcome{residual / max(ctx.real(1), M * M), ctx.real(0), std::nullopt};
        });
        add("orientation-margin-" + point.tag, 0, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            SepticSolution sol = run_pipeline(q, ctx);
            Real target = seventh_power_sum_target(sol.p, sol.M);
            // the rejected orientation reverses the cyclic order
            Real rejected = sol.p * (sol.gamma * sol.gamma / sol.beta +
                                     sol.beta * sol.beta / sol.alpha +
                                     sol.alpha * sol.alpha / sol.gamma);
            Real rel = abs(rejected - target) / max(ctx.real(1), abs(target));
            bool ok = rel > ctx.pow10(-(ctx.digits() / 2 - 10));
            return CheckOutcome{ctx.real(ok ? 1 : 0), ctx.real(1), ok};
        });
        add("root-residual-" + point.tag, 5, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            SepticSolution sol = run_pipeline(q, ctx);
            CubicPoly r = build_r(sol.p, sol.M);
            Real scale = max(ctx.real(1), abs(r.c0));
            Real worst = max(abs(r.eval(sol.alpha)),
                             max(abs(r.eval(sol.beta)), abs(r.eval(sol.gamma))));
            return CheckOutcome{worst / scale, ctx.real(0), std::nullopt};
        });
        add("vieta-sum-" + point.tag, 3, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            SepticSolution sol = run_pipeline(q, ctx);
            CubicPoly r = build_r(sol.p, sol.M);
            return CheckOutcome{sol.alpha + sol.beta + sol.gamma, -r.c2, std::nullopt};
        });
        add("vieta-product-" + point.tag, 3, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            SepticSolution sol = run_pipeline(q, ctx);
            return CheckOutcome{sol.alpha * sol.beta * sol.gamma, pow_int(sol.p, 4), std::nullopt};
        });
        add("lemma9-delta-positive-" + point.tag, 0, [qfn](const PrecisionContext& ctx) {
            Nome q{qfn(ctx)};
            SepticSolution sol = run_pipeline(q, ctx);
            bool ok = sol.delta_minus > 0;
            return CheckOutcome{ctx.real(ok ? 1 : 0), ctx.real(1), ok};
        });
    }
    for (auto [num, den, tag] : {std::tuple<long, long, const char*>{1, 2, "p0.5"},
                                 {1, 1, "p1"},
                                 {2, 1, "p2"},
                                 {5, 1, "p5"},
                                 {79, 10, "p7.9"}}) {
        add(std::string("lemma9-product-") + tag, 3, [num, den](const PrecisionContext& ctx) {
            Real p = ctx.rational(num, den);
            auto [dplus, dminus] = discriminants(p, ctx);
            return CheckOutcome{dplus * dminus, pow_int(p, 10) * pow_int(p - 8, 6), std::nullopt};
        });
    }
    add("r-u6-transform", 3, [](const PrecisionContext& ctx) {
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
        return CheckOutcome{worst, ctx.real(0), std::nullopt};
    });
    add("trig-41", 2, [](const PrecisionContext& ctx) {
        return CheckOutcome{trig_41_sum(ctx), ctx.real(41), std::nullopt};
    });
    add("trig-41-support-bca", 2, [](const PrecisionContext& ctx) {
        Real lhs = cos_rational_pi(2, 7, ctx) - cos_rational_pi(3, 7, ctx) -
                   cos_rational_pi(1, 7, ctx);
        return CheckOutcome{lhs, ctx.rational(-1, 2), std::nullopt};
    });
    add("trig-41-support-abc", 2, [](const PrecisionContext& ctx) {
        Real lhs = cos_rational_pi(1, 7, ctx) * cos_rational_pi(2, 7, ctx) *
                   cos_rational_pi(3, 7, ctx);
        return CheckOutcome{lhs, ctx.rational(1, 8), std::nullopt};
    });

    // ---- closed forms against the series oracle ----
    auto series_phi_at = [](const PrecisionContext& ctx, long n_scale,
                            long inner_sqrt) { // phi(e^{-n_scale pi sqrt(inner_sqrt)})
        Real q = exp(-(const_pi(ctx) * n_scale * sqrt(ctx.real(inner_sqrt))));
        return phi(Nome{q}, ctx);
    };
    add("thm1", 5, [series_phi_at](const PrecisionContext& ctx) {
        Real lhs = rational_pow(ctx.real(7), -3, 4) * series_phi_at(ctx, 1, 7) *
                   septic_cosine_bracket(ctx);
        return CheckOutcome{lhs, series_phi_at(ctx, 7, 7), std::nullopt};
    });
    add("thm1-phi-7pi-sqrt7", 5, [series_phi_at](const PrecisionContext& ctx) {
        return CheckOutcome{phi_e_7pi_sqrt7(ctx), series_phi_at(ctx, 7, 7), std::nullopt};
    });
    add("phi-e-pi", 2, [series_phi_at](const PrecisionContext& ctx) {
        return CheckOutcome{phi_e_pi(ctx), series_phi_at(ctx, 1, 1), std::nullopt};
    });
    add("phi-e-pi-sqrt3", 2, [series_phi_at](const PrecisionContext& ctx) {
        return CheckOutcome{phi_e_pi_sqrt3(ctx), series_phi_at(ctx, 1, 3), std::nullopt};
    });
    add("phi-e-pi-sqrt7-gamma", 2, [series_phi_at](const PrecisionContext& ctx) {
        return CheckOutcome{phi_e_pi_sqrt7_gamma(ctx), series_phi_at(ctx, 1, 7), std::nullopt};
    });
    add("phi-e-pi-sqrt7-forms", 2, [](const PrecisionContext& ctx) {
        return CheckOutcome{phi_e_pi_sqrt7_gamma(ctx), phi_e_pi_sqrt7_beta(ctx), std::nullopt};
    });
    auto series_ratio_to_e_pi = [](const PrecisionContext& ctx, long n) {
        // phi(e^{-n pi}) / phi(e^{-pi}) by direct series
        Real pi = const_pi(ctx);
        return phi(Nome{exp(-(pi * n))}, ctx) / phi(Nome{exp(-pi)}, ctx);
    };
    add("thm-e7", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        Real r = series_ratio_to_e_pi(ctx, 7);
        return CheckOutcome{theorem_e7(ctx), r * r, std::nullopt};
    });
    add("thm-e7pisqrt3", 5, [](const PrecisionContext& ctx) {
        Real pi = const_pi(ctx);
        Real sqrt3 = sqrt(ctx.real(3));
        Real r = phi(Nome{exp(-(pi * 7 * sqrt3))}, ctx) / phi(Nome{exp(-(pi * sqrt3))}, ctx);
        return CheckOutcome{theorem_e7pisqrt3(ctx), r * r, std::nullopt};
    });
    add("thm-e7pisqrt3-phi", 5, [series_phi_at](const PrecisionContext& ctx) {
        return CheckOutcome{phi_e_7pi_sqrt3(ctx), series_phi_at(ctx, 7, 3), std::nullopt};
    });
    add("thm-e21", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        return CheckOutcome{theorem_e21(ctx), series_ratio_to_e_pi(ctx, 21), std::nullopt};
    });
    add("alt-e21", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        return CheckOutcome{alt_e21(ctx), series_ratio_to_e_pi(ctx, 21), std::nullopt};
    });
    add("alt-e21-consistency", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{alt_e21(ctx), theorem_e21(ctx), std::nullopt};
    });
    add("thm-e35", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        return CheckOutcome{theorem_e35(ctx), series_ratio_to_e_pi(ctx, 35), std::nullopt};
    });
    add("alt-e35", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        return CheckOutcome{alt_e35(ctx), series_ratio_to_e_pi(ctx, 35), std::nullopt};
    });
    add("alt-e35-consistency", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{alt_e35(ctx), theorem_e35(ctx), std::nullopt};
    });
    add("thm-e49", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        return CheckOutcome{theorem_e49(ctx), series_ratio_to_e_pi(ctx, 49), std::nullopt};
    });
    add("e3-const", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        return CheckOutcome{e3_constant(ctx), series_ratio_to_e_pi(ctx, 3), std::nullopt};
    });
    add("e5-const", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        return CheckOutcome{e5_constant(ctx), series_ratio_to_e_pi(ctx, 5), std::nullopt};
    });
    add("ratio-3pisqrtn-n1", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{ratio_3pi_sqrt_n(Rational(1), ctx), e3_constant(ctx), std::nullopt};
    });
    add("ratio-5pisqrtn-n1", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{ratio_5pi_sqrt_n(Rational(1), ctx), e5_constant(ctx), std::nullopt};
    });
    add("ratio-9pisqrtn-n1", 5, [series_ratio_to_e_pi](const PrecisionContext& ctx) {
        return CheckOutcome{ratio_9pi_sqrt_n(Rational(1), ctx), series_ratio_to_e_pi(ctx, 9),
                            std::nullopt};
    });
    add("ratio-7pisqrtn-n1", 5, [](const PrecisionContext& ctx) {
        Real r = ratio_7pi_sqrt_n(Rational(1), ctx);
        return CheckOutcome{r * r, theorem_e7(ctx), std::nullopt};
    });
    add("ratio-7pisqrtn-n3", 5, [](const PrecisionContext& ctx) {
        Real r = ratio_7pi_sqrt_n(Rational(3), ctx);
        return CheckOutcome{r * r, theorem_e7pisqrt3(ctx), std::nullopt};
    });
    add("g343-cross", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{g343_from_multiplier(ctx), watson_g343_explicit(ctx), std::nullopt};
    });
    add("g343-numeric", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{g343_from_multiplier(ctx),
                            class_invariant_numeric(Rational(343), ctx), std::nullopt};
    });
    add("g343-watson-numeric", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{watson_g343_explicit(ctx),
                            class_invariant_numeric(Rational(343), ctx), std::nullopt};
    });
    add("e21-p-cross", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{e21_p(ctx), p_from_invariants(Rational(1, 441), ctx), std::nullopt};
    });
    add("e35-p-cross", 5, [](const PrecisionContext& ctx) {
        return CheckOutcome{e35_p(ctx), p_from_invariants(Rational(1, 1225), ctx), std::nullopt};
    });
    add("e21-p-series", 5, [](const PrecisionContext& ctx) {
        Nome q{exp(-const_pi(ctx) / 21)};
        return CheckOutcome{e21_p(ctx), p_product(q, ctx), std::nullopt};
    });
    add("e35-p-series", 5, [](const PrecisionContext& ctx) {
        Nome q{exp(-const_pi(ctx) / 35)};
        return CheckOutcome{e35_p(ctx), p_product(q, ctx), std::nullopt};
    });
    for (const char* id : {"proof-id-e7-i", "proof-id-e7-ii", "proof-id-e7sqrt3"}) {
        add(id, 5, [id](const PrecisionContext& ctx) {
            auto [lhs, rhs] = proof_identity_worst_pair(id, ctx);
            return CheckOutcome{lhs, rhs, std::nullopt};
        });
    }
    add("family-a0", 3, [](const PrecisionContext& ctx) {
        SepticFamily fam = family_pa_ma_ra(ctx.real(0), ctx);
        WorstPair worst;
        worst.consider(fam.p, ctx.real(1));
        worst.consider(fam.m * fam.m, ctx.real(7));
        worst.consider(fam.r.c2, ctx.real(-6));
        worst.consider(fam.r.c1, ctx.real(5));
        worst.consider(fam.r.c0, ctx.real(-1));
        return worst.outcome();
    });
    add("family-a28-roots", 5, [](const PrecisionContext& ctx) {
        SepticFamily fam = family_pa_ma_ra(rational_pow(ctx.real(28), 1, 4), ctx);
        auto roots = solve_cubic_real(fam.r, ctx); // ascending
        WorstPair worst;
        worst.consider(roots[0], e49_gamma(ctx));
        worst.consider(roots[1], e49_beta(ctx));
        worst.consider(roots[2], e49_alpha(ctx));
        return worst.outcome();
    });
    add("thm-e49-p-family", 5, [](const PrecisionContext& ctx) {
        SepticFamily fam = family_pa_ma_ra(rational_pow(ctx.real(28), 1, 4), ctx);
        return CheckOutcome{fam.p, e49_p(ctx), std::nullopt};
    });
    add("precision-monotonicity", 0, [](const PrecisionContext& ctx) {
        PrecisionContext wider(ctx.digits() + 20, ctx.guard_digits(), ctx.max_terms());
        bool ok = true;
        for (const auto& [id, entry] : closed_form_registry()) {
            std::string lo = to_decimal(entry.evaluate(ctx), ctx.digits());
            std::string hi = to_decimal(entry.evaluate(wider), ctx.digits());
            if (lo != hi) ok = false;
        }
        return CheckOutcome{ctx.real(ok ? 1 : 0), ctx.real(1), ok};
    });

    std::sort(checks.begin(), checks.end(),
              [](const CheckDefinition& a, const CheckDefinition& b) { return a.id < b.id; });
    return checks;
}

} // namespace detail

inline const std::vector<CheckDefinition>& check_registry() {
    static const std::vector<CheckDefinition> checks = detail::build_checks();
    return checks;
}

inline std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : check_registry()) ids.push_back(c.id);
    return ids;
}

namespace detail {

inline VerificationResult run_definition(const CheckDefinition& def, int digits) {
    PrecisionContext ctx(digits);
    auto start = std::chrono::steady_clock::now();
    CheckOutcome out = def.run(ctx);
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    VerificationResult r;
    if (out.ok.has_value()) {
        r.check_id = def.id;
        r.lhs = *out.ok ? "1" : "0";
        r.rhs = "1";
        r.digits_agreed = *out.ok ? digits : 0;
        r.required_digits = 1;
        r.pass = *out.ok;
    } else {
        long required = std::max(1, digits - def.margin);
        r = make_result(def.id, out.lhs, out.rhs, required, digits);
    }
    r.elapsed = elapsed;
    return r;
}

inline const CheckDefinition& find_check(const std::string& id) {
    const auto& checks = check_registry();
    auto it = std::lower_bound(checks.begin(), checks.end(), id,
                               [](const CheckDefinition& c, const std::string& key) {
                                   return c.id < key;
                               });
    if (it == checks.end() || it->id != id) throw registry_error("unknown check id: " + id);
    return *it;
}

} // namespace detail

/// Run one named check at the requested digits. Unknown ids raise
/// registry_error; ambiguity and convergence failures propagate with their
/// retry hints intact.
inline VerificationResult run_check(const std::string& id, int digits) {
    return detail::run_definition(detail::find_check(id), digits);
}

/// Run every registered check. Results are ordered by check id and are
/// identical whether or not they were computed in parallel. Per-check
/// assertion failures are aggregated; ambiguity/convergence errors abort
/// the run since rerunning at higher digits is the only sane recovery.
inline std::vector<VerificationResult> run_all(int digits, bool parallel = false) {
    const auto& checks = check_registry();
    std::vector<VerificationResult> results(checks.size());
    auto run_one = [&checks, digits](std::size_t i) {
        try {
            return detail::run_definition(checks[i], digits);
        } catch (const ambiguous_orientation&) {
            throw;
        } catch (const non_convergence&) {
            throw;
        } catch (const error& e) {
            VerificationResult r;
            r.check_id = checks[i].id;
            r.lhs = "error";
            r.rhs = e.what();
            r.digits_agreed = 0;
            r.required_digits = std::max(1, digits - checks[i].margin);
            r.pass = false;
            return r;
        }
    };
    if (parallel) {
        std::vector<std::future<VerificationResult>> futures;
        futures.reserve(checks.size());
        for (std::size_t i = 0; i < checks.size(); ++i)
            futures.push_back(std::async(std::launch::async, run_one, i));
        for (std::size_t i = 0; i < checks.size(); ++i) results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < checks.size(); ++i) results[i] = run_one(i);
    }
    return results;
}

} // namespace septica
