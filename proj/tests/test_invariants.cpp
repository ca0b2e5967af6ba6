#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "septica/closed_forms.hpp"
#include "septica/invariants.hpp"

using namespace septica;

TEST_CASE("numeric invariants at known indices") {
    PrecisionContext ctx(60);
    CHECK(agree_digits(class_invariant_numeric(Rational(1), ctx), ctx.real(1)) >=
          ctx.digits() - 2);
    CHECK(agree_digits(class_invariant_numeric(Rational(7), ctx),
                       rational_pow(ctx.real(2), 1, 4)) >= ctx.digits() - 2);
    CHECK(agree_digits(class_invariant_numeric(Rational(1, 7), ctx),
                       class_invariant_numeric(Rational(7), ctx)) >= ctx.digits() - 2);
    CHECK_THROWS_AS(class_invariant_numeric(Rational(-3), ctx), domain_error);
}

TEST_CASE("closed forms match the chi-based numerics") {
    PrecisionContext ctx(60);
    for (long n : {1L, 3L, 7L, 9L, 25L, 49L, 147L, 343L, 441L, 1225L}) {
        Real closed = class_invariant_closed(Rational(n), ctx);
        Real numeric = class_invariant_numeric(Rational(n), ctx);
        INFO("n = ", n);
        CHECK(agree_digits(closed, numeric) >= ctx.digits() - 5);
        if (n > 1) CHECK(closed > 1);
    }
}

TEST_CASE("closed-form lookup rules") {
    PrecisionContext ctx(60);
    CHECK(agree_digits(class_invariant_closed(Rational(1, 49), ctx),
                       class_invariant_closed(Rational(49), ctx)) >= 58);
    CHECK_THROWS_AS(class_invariant_closed(Rational(11), ctx), unknown_invariant);
    CHECK_THROWS_AS(class_invariant(Rational(11), ctx, /*allow_numeric=*/false),
                    unknown_invariant);
    // fallback path produces the numeric value
    CHECK(agree_digits(class_invariant(Rational(11), ctx),
                       class_invariant_numeric(Rational(11), ctx)) >= 58);
}

TEST_CASE("reciprocal symmetry of the numeric invariant") {
    PrecisionContext ctx(60);
    for (long n : {3L, 7L, 49L}) {
        CHECK(agree_digits(class_invariant_numeric(Rational(n), ctx),
                           class_invariant_numeric(Rational(1, n), ctx)) >= ctx.digits() - 2);
    }
}

TEST_CASE("product invariant from the G table") {
    PrecisionContext ctx(60);

    CHECK(agree_digits(p_from_invariants(Rational(1, 7), ctx), ctx.real(1)) >=
          ctx.digits() - 3);
    CHECK(agree_digits(p_from_invariants(Rational(1, 49), ctx), e49_p(ctx)) >=
          ctx.digits() - 3);

    // series route at n = 1
    Real q = exp(-const_pi(ctx));
    CHECK(agree_digits(p_from_invariants(Rational(1), ctx), p_product(Nome{q}, ctx)) >=
          ctx.digits() - 3);

    // n = 7 instance satisfies the multiplier cubic, m the degree-7 multiplier
    Real p = p_from_invariants(Rational(7), ctx);
    Real m = multiplier_numeric(Rational(7), 7, ctx);
    Real m2 = m * m;
    Real residual = pow_int(p, 3) - 3 * p * p + (3 + 5 * m2) * p - (m2 - 1) * (m2 - 1);
    CHECK(abs(residual) < ctx.pow10(-(ctx.digits() - 5)));
}

TEST_CASE("multipliers") {
    PrecisionContext ctx(60);
    CHECK(agree_digits(multiplier_numeric(Rational(5), 1, ctx), ctx.real(1)) >= 58);

    Real bracket = septic_cosine_bracket(ctx);
    CHECK(agree_digits(multiplier_numeric(Rational(7), 7, ctx),
                       rational_pow(ctx.real(7), 3, 2) / (bracket * bracket)) >=
          ctx.digits() - 5);

    CHECK(agree_digits(multiplier_numeric(Rational(1, 49), 7, ctx),
                       m_of_p(e49_p(ctx), ctx)) >= ctx.digits() - 5);

    CHECK_THROWS_AS(multiplier_numeric(Rational(7), 0, ctx), domain_error);
}

TEST_CASE("quartic-root identity used for G_1225") {
    PrecisionContext ctx(60);
    Real lhs = rational_pow(6 + sqrt(ctx.real(35)), 1, 4);
    Real rhs = sqrt((sqrt(ctx.real(14)) + sqrt(ctx.real(10))) / 2);
    CHECK(agree_digits(lhs, rhs) >= ctx.digits() - 2);
}

TEST_CASE("invariant table records") {
    PrecisionContext ctx(40);
    auto rows = invariant_table(ctx);
    REQUIRE(rows.size() == tabulated_invariant_indices().size());
    for (const auto& record : rows) {
        INFO("n = ", record.n.num);
        CHECK(record.source == InvariantSource::closed_form);
        REQUIRE(record.closed_form_id.has_value());
        CHECK(agree_digits(record.value, evaluate_closed_form(*record.closed_form_id, ctx)) >=
              ctx.digits() - 1);
        if (record.n.num > 1) CHECK(record.value > 1);
        CHECK(agree_digits(record.value, class_invariant_numeric(record.n, ctx)) >=
              ctx.digits() - 5);
    }
}

TEST_CASE("G_343 satisfies the degree-7 polynomial") {
    PrecisionContext ctx(60);
    Real x = class_invariant_closed(Rational(343), ctx) / rational_pow(ctx.real(2), 1, 4);
    Real residual =
        pow_int(x, 7) - 7 * pow_int(x, 6) - 7 * pow_int(x, 5) - 7 * pow_int(x, 4) - 1;
    CHECK(abs(residual) < ctx.pow10(-(ctx.digits() - 8)) * pow_int(x, 7));
}
