// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Runs at 60 working digits; agreement thresholds are 50 digits unless a
// criterion states otherwise. Exit code 0 iff every criterion passes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "septica/septica.hpp"

using namespace septica;

namespace {

int failures = 0;

void criterion(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "<unreadable>";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Real> acceptance_grid(const PrecisionContext& ctx) {
    return {ctx.rational(1, 20),
            ctx.rational(1, 5),
            ctx.rational(2, 5),
            ctx.rational(3, 5),
            exp(-const_pi(ctx)),
            exp(-const_pi(ctx) / sqrt(ctx.real(7))),
            exp(-const_pi(ctx) / 7)};
}

} // namespace

int main() {
    PrecisionContext ctx(60);
    const long kAgree = 50;

    // 1. The completed degree-7 identity, closed bracket versus pure series.
    {
        Real pi = const_pi(ctx);
        Real sqrt7 = sqrt(ctx.real(7));
        Real lhs = rational_pow(ctx.real(7), -3, 4) * phi(Nome{exp(-(pi * sqrt7))}, ctx) *
                   septic_cosine_bracket(ctx);
        Real rhs = phi(Nome{exp(-(7 * pi * sqrt7))}, ctx);
        long agreed = agree_digits(lhs, rhs);
        criterion("1. completed identity at q = e^-pi sqrt7", agreed >= kAgree,
                  "agreed " + std::to_string(agreed));
    }

    // 2. Pipeline versus series on the grid.
    {
        bool ok = true;
        long worst = 1000;
        for (const Real& qv : acceptance_grid(ctx)) {
            Nome q{qv};
            SepticSolution sol = run_pipeline(q, ctx);
            UVW series = uvw_series(q, ctx);
            for (long a : {agree_digits(sol.u, series.u), agree_digits(sol.v, series.v),
                           agree_digits(sol.w, series.w),
                           agree_digits(series.u * series.v * series.w, p_product(q, ctx))}) {
                worst = std::min(worst, a);
                ok = ok && a >= kAgree;
            }
            Real M = pow_int(phi_ratio(q, 7, ctx), 4);
            Real p = p_product(q, ctx);
            Real residual = M * M - (2 + 5 * p) * M + (1 - p) * (1 - p) * (1 - p);
            ok = ok && abs(residual) < ctx.pow10(-50) * max(ctx.real(1), M * M);
        }
        criterion("2. pipeline/series component equality on the grid", ok,
                  "worst agreement " + std::to_string(worst));
    }

    // 3. Component power identities on the grid.
    {
        bool ok = true;
        long worst = 1000;
        for (const Real& qv : acceptance_grid(ctx)) {
            Nome q{qv};
            UVW t = uvw_series(q, ctx);
            Real M = pow_int(phi_ratio(q, 7, ctx), 4);
            Real p = t.u * t.v * t.w;
            long a1 = agree_digits(
                pow_int(t.u, 3) * t.v + pow_int(t.v, 3) * t.w + pow_int(t.w, 3) * t.u,
                2 * (M - 3 * p - 1));
            long a2 = agree_digits(pow_int(t.u, 7) + pow_int(t.v, 7) + pow_int(t.w, 7),
                                   seventh_power_sum_target(p, M));
            worst = std::min({worst, a1, a2});
            ok = ok && a1 >= kAgree && a2 >= kAgree;
        }
        criterion("3. cubic-mix and seventh-power identities on the grid", ok,
                  "worst agreement " + std::to_string(worst));
    }

    // 4. Discriminant positivity and the product identity.
    {
        bool ok = true;
        for (const Real& qv : acceptance_grid(ctx)) {
            SepticSolution sol = run_pipeline(Nome{qv}, ctx);
            ok = ok && sol.delta_minus > 0;
        }
        for (auto [num, den] : {std::pair<long, long>{1, 2}, {1, 1}, {2, 1}, {5, 1}, {79, 10}}) {
            Real p = ctx.rational(num, den);
            auto [dplus, dminus] = discriminants(p, ctx);
            Real target = pow_int(p, 10) * pow_int(p - 8, 6);
            ok = ok && abs(dplus * dminus - target) < ctx.pow10(-50) * abs(target);
        }
        criterion("4. discriminant sign and product identity", ok);
    }

    // 5. The trigonometric constant and its supporting facts, to 55 digits.
    {
        long a1 = agree_digits(trig_41_sum(ctx), ctx.real(41));
        Real ca = cos_rational_pi(1, 7, ctx);
        Real cb = cos_rational_pi(2, 7, ctx);
        Real cc = cos_rational_pi(3, 7, ctx);
        long a2 = agree_digits(cb - cc - ca, ctx.rational(-1, 2));
        long a3 = agree_digits(ca * cb * cc, ctx.rational(1, 8));
        criterion("5. cosine-quotient constant 41 with supports", a1 >= 55 && a2 >= 55 && a3 >= 55,
                  "agreed " + std::to_string(std::min({a1, a2, a3})));
    }

    // 6. G_343 triple agreement and the degree-7 polynomial residual.
    {
        Real thm = g343_from_multiplier(ctx);
        Real watson = watson_g343_explicit(ctx);
        Real numeric = class_invariant_numeric(Rational(343), ctx);
        long a1 = agree_digits(thm, watson);
        long a2 = agree_digits(thm, numeric);
        long a3 = agree_digits(watson, numeric);
        Real x = thm / rational_pow(ctx.real(2), 1, 4);
        Real residual =
            pow_int(x, 7) - 7 * pow_int(x, 6) - 7 * pow_int(x, 5) - 7 * pow_int(x, 4) - 1;
        bool ok = a1 >= kAgree && a2 >= kAgree && a3 >= kAgree &&
                  abs(residual) < ctx.pow10(-50) * pow_int(x, 7);
        criterion("6. G_343 triple agreement and septic residual", ok,
                  "agreed " + std::to_string(std::min({a1, a2, a3})));
    }

    // 7. Closed evaluations against series ratios, alternatives included.
    {
        auto series_ratio = [&ctx](long n) {
            Real pi = const_pi(ctx);
            return phi(Nome{exp(-(pi * n))}, ctx) / phi(Nome{exp(-pi)}, ctx);
        };
        Real r7 = series_ratio(7);
        Real pi = const_pi(ctx);
        Real sqrt3 = sqrt(ctx.real(3));
        Real r7s3 =
            phi(Nome{exp(-(7 * pi * sqrt3))}, ctx) / phi(Nome{exp(-(pi * sqrt3))}, ctx);
        std::vector<long> agreements = {
            agree_digits(theorem_e7(ctx), r7 * r7),
            agree_digits(theorem_e7pisqrt3(ctx), r7s3 * r7s3),
            agree_digits(theorem_e21(ctx), series_ratio(21)),
            agree_digits(alt_e21(ctx), series_ratio(21)),
            agree_digits(alt_e21(ctx), theorem_e21(ctx)),
            agree_digits(theorem_e35(ctx), series_ratio(35)),
            agree_digits(alt_e35(ctx), series_ratio(35)),
            agree_digits(alt_e35(ctx), theorem_e35(ctx)),
            agree_digits(theorem_e49(ctx), series_ratio(49)),
        };
        long worst = *std::min_element(agreements.begin(), agreements.end());
        criterion("7. degree-7 evaluations and alternative displays", worst >= kAgree,
                  "worst agreement " + std::to_string(worst));
    }

    // 8. Ratio formulas at n = 1.
    {
        Real pi = const_pi(ctx);
        Real series9 = phi(Nome{exp(-(pi * 9))}, ctx) / phi(Nome{exp(-pi)}, ctx);
        Real r7 = ratio_7pi_sqrt_n(Rational(1), ctx);
        std::vector<long> agreements = {
            agree_digits(ratio_3pi_sqrt_n(Rational(1), ctx), e3_constant(ctx)),
            agree_digits(ratio_5pi_sqrt_n(Rational(1), ctx), e5_constant(ctx)),
            agree_digits(r7 * r7, theorem_e7(ctx)),
            agree_digits(ratio_9pi_sqrt_n(Rational(1), ctx), series9),
        };
        long worst = *std::min_element(agreements.begin(), agreements.end());
        criterion("8. invariant-based ratio formulas at n = 1", worst >= kAgree,
                  "worst agreement " + std::to_string(worst));
    }

    // 9. The invariant table and reciprocity.
    {
        long worst = 1000;
        for (long n : {1L, 3L, 7L, 9L, 25L, 49L, 147L, 343L, 441L, 1225L}) {
            worst = std::min(worst, agree_digits(class_invariant_closed(Rational(n), ctx),
                                                 class_invariant_numeric(Rational(n), ctx)));
        }
        for (long n : {3L, 7L, 49L}) {
            worst = std::min(worst, agree_digits(class_invariant_numeric(Rational(n), ctx),
                                                 class_invariant_numeric(Rational(1, n), ctx)));
        }
        criterion("9. invariant table and reciprocity", worst >= kAgree,
                  "worst agreement " + std::to_string(worst));
    }

    // 10. Proof-step identities, including the vanishing factors.
    {
        long worst = 1000;
        for (const char* id : {"proof-id-e7-i", "proof-id-e7-ii", "proof-id-e7sqrt3"}) {
            auto [lhs, rhs] = proof_identity_worst_pair(id, ctx);
            worst = std::min(worst, agree_digits(lhs, rhs));
        }
        Real a = rational_pow(ctx.real(28), 1, 4);
        worst = std::min(worst, agree_digits(pow_int(a, 4), ctx.real(28)));
        auto [lhs_i, rhs_i] = e7_part_i_sides(a, ctx);
        Real poly = ((2 * a + 3) * a * a + 10 * a + 14);
        worst = std::min(worst, agree_digits(lhs_i, poly * poly / 4));
        (void)rhs_i;
        Real b = rational_pow(ctx.real(756), 1, 6);
        worst = std::min(worst, agree_digits(pow_int(b, 6), ctx.real(756)));
        criterion("10. proof-step identities with vanishing factors", worst >= kAgree,
                  "worst agreement " + std::to_string(worst));
    }

    // 11. Strict descent of the component sequence.
    {
        bool ok = true;
        for (long n : {5L, 7L, 9L, 11L}) {
            for (auto [num, den] : {std::pair<long, long>{1, 10}, {1, 2}, {9, 10}}) {
                Nome q{ctx.rational(num, den)};
                Real prev = u_component(q, n, 0, ctx);
                for (long k = 1; k <= (n - 1) / 2; ++k) {
                    Real cur = u_component(q, n, k, ctx);
                    ok = ok && cur > 0 && cur < prev;
                    prev = cur;
                }
            }
        }
        criterion("11. strict component descent", ok);
    }

    // 12. Precision monotonicity of every registry constant.
    {
        PrecisionContext lo(30);
        bool ok = true;
        std::string witness;
        for (const auto& [id, entry] : closed_form_registry()) {
            std::string at30 = to_decimal(entry.evaluate(lo), 30);
            std::string at60 = to_decimal(entry.evaluate(ctx), 60);
            if (at60.substr(0, at30.size()) != at30) {
                ok = false;
                witness = id;
            }
        }
        criterion("12. precision monotonicity of the registry", ok, witness);
    }

    // 13. Byte-identical reports across repeated CLI runs.
    {
        const char* out1 = "acceptance_report_1.json";
        const char* out2 = "acceptance_report_2.json";
        std::string base = std::string(SEPTICA_CLI_PATH) +
                           " verify --all --digits 60 --no-timing --json ";
        int s1 = std::system((base + out1 + " > /dev/null").c_str());
        int s2 = std::system((base + out2 + " > /dev/null").c_str());
        bool ran = s1 != -1 && s2 != -1 && WEXITSTATUS(s1) == 0 && WEXITSTATUS(s2) == 0;
        bool identical = ran && slurp(out1) == slurp(out2) && !slurp(out1).empty();
        criterion("13. deterministic verification reports", ran && identical,
                  ran ? "" : "cli exit nonzero");
        std::remove(out1);
        std::remove(out2);
    }

    if (failures == 0) {
        std::cout << "acceptance: all 13 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return 1;
}
