#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "septica/cubic.hpp"
#include "septica/special.hpp"

using namespace septica;

namespace {

// Oracle: pi = 2 arcsin(1), computed at a wider context than the value
// under test.
Real pi_oracle(const PrecisionContext& ctx) { return 2 * asin(ctx.real(1)); }

// Oracle: isolate the root of 8x^3 - 4x^2 - 4x + 1 in (0.9, 0.91) by plain
// bisection. Independent of any trigonometric code path.
Real cos_pi_7_oracle(const PrecisionContext& ctx) {
    auto poly = [](const Real& x) { return ((8 * x - 4) * x - 4) * x + 1; };
    Real lo = ctx.rational(9, 10), hi = ctx.rational(91, 100);
    REQUIRE(poly(lo) < 0);
    REQUIRE(poly(hi) > 0);
    long iterations = static_cast<long>((ctx.digits() + ctx.guard_digits()) * 3.33) + 8;
    for (long i = 0; i < iterations; ++i) {
        Real mid = (lo + hi) / 2;
        if (poly(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

// Oracle: Gamma(1/4) = sqrt((2 pi)^{3/2} / AGM(1, sqrt 2)), evaluated with a
// hand-rolled arithmetic-geometric mean.
Real gamma_quarter_oracle(const PrecisionContext& ctx) {
    Real a = ctx.real(1);
    Real b = sqrt(ctx.real(2));
    Real eps = ctx.truncation_threshold();
    for (int i = 0; i < 200 && abs(a - b) > eps; ++i) {
        Real am = (a + b) / 2;
        Real gm = sqrt(a * b);
        a = am;
        b = gm;
    }
    return sqrt(rational_pow(2 * pi_oracle(ctx), 3, 2) / a);
}

} // namespace

TEST_CASE("context construction and validation") {
    PrecisionContext ctx = make_context(60);
    CHECK(ctx.digits() == 60);
    CHECK(ctx.guard_digits() == 10);
    CHECK(ctx.max_terms() == 100000);

    PrecisionContext floor_ctx = make_context(10);
    CHECK(floor_ctx.digits() == 10);

    CHECK_THROWS_AS(make_context(5), invalid_precision);
    CHECK_THROWS_AS(PrecisionContext(60, 2), invalid_precision);
}

TEST_CASE("pi against the arcsine oracle") {
    PrecisionContext wide(80);
    Real oracle = pi_oracle(wide);

    PrecisionContext ctx20(20);
    CHECK(agree_digits(const_pi(ctx20), oracle) >= 20);
    CHECK(to_decimal(const_pi(ctx20), 20) == "3.1415926535897932384");

    PrecisionContext ctx10(10);
    CHECK(agree_digits(const_pi(ctx10), oracle) >= 10);

    // self-consistency across precisions
    PrecisionContext ctx60(60), ctx80(80);
    CHECK(to_decimal(const_pi(ctx60), 60) == to_decimal(const_pi(ctx80), 60));
}

TEST_CASE("cos at rational multiples of pi") {
    PrecisionContext ctx(60);
    CHECK(agree_digits(cos_rational_pi(1, 3, ctx), ctx.rational(1, 2)) >= 58);
    CHECK(abs(cos_rational_pi(1, 2, ctx)) < ctx.pow10(-60));

    PrecisionContext wide(80);
    Real oracle = cos_pi_7_oracle(wide);
    CHECK(agree_digits(cos_rational_pi(1, 7, ctx), oracle) >= 58);
    CHECK(agree_digits(cos_rational_pi(1, 7, ctx), wide.from_string("0.900968867902419126")) >= 18);

    CHECK_THROWS_AS(cos_rational_pi(1, 0, ctx), domain_error);
}

TEST_CASE("cos values are Chebyshev roots") {
    PrecisionContext ctx(60);
    for (long m : {3L, 4L, 5L, 7L}) {
        for (long k = 1; k < m; ++k) {
            Real u = chebyshev_u(m - 1, cos_rational_pi(k, m, ctx), ctx);
            CHECK(abs(u) < ctx.pow10(-(ctx.digits() - 2)));
        }
    }
}

TEST_CASE("gamma at rationals") {
    PrecisionContext ctx(60);

    CHECK(agree_digits(gamma_rational(1, 2, ctx), sqrt(const_pi(ctx))) >= 58);
    CHECK(agree_digits(gamma_rational(1, 4, ctx) * gamma_rational(3, 4, ctx),
                       const_pi(ctx) * sqrt(ctx.real(2))) >= 58);

    PrecisionContext wide(80);
    CHECK(agree_digits(gamma_rational(1, 4, ctx), gamma_quarter_oracle(wide)) >= 58);
    CHECK(agree_digits(gamma_rational(1, 4, ctx), ctx.from_string("3.6256099082")) >= 10);

    for (auto [num, den] : {std::pair<long long, long long>{1, 7}, {2, 7}, {1, 4}, {1, 3}}) {
        Real lhs = gamma_rational(num + den, den, ctx);
        Real rhs = ctx.rational(num, den) * gamma_rational(num, den, ctx);
        CHECK(agree_digits(lhs, rhs) >= ctx.digits() - 2);
    }

    CHECK_THROWS_AS(gamma_rational(-1, 4, ctx), domain_error);
    CHECK_THROWS_AS(gamma_rational(1, 0, ctx), domain_error);
}

TEST_CASE("beta at rationals") {
    PrecisionContext ctx(60);
    CHECK(agree_digits(beta_rational(Rational(1, 2), Rational(1, 2), ctx), const_pi(ctx)) >= 58);
    CHECK(agree_digits(beta_rational(Rational(1), Rational(1), ctx), ctx.real(1)) >= 58);

    Real composed = gamma_rational(1, 7, ctx) * gamma_rational(2, 7, ctx) / gamma_rational(3, 7, ctx);
    CHECK(agree_digits(beta_rational(Rational(1, 7), Rational(2, 7), ctx), composed) >= 58);
    CHECK(agree_digits(beta_rational(Rational(1, 7), Rational(2, 7), ctx),
                       beta_rational(Rational(2, 7), Rational(1, 7), ctx)) >= 58);

    CHECK_THROWS_AS(beta_rational(Rational(-1, 2), Rational(1, 2), ctx), domain_error);
}

TEST_CASE("agree_digits definition cases") {
    PrecisionContext ctx(60);
    CHECK(agree_digits(ctx.from_string("1.0000000"), ctx.from_string("1.0000001")) == 7);
    CHECK(agree_digits(ctx.real(41), ctx.real(41)) >= ctx.digits());
    CHECK(agree_digits(ctx.from_string("0.001"), ctx.from_string("0.002")) == 3);
    CHECK(agree_digits(ctx.real(1), ctx.real(100)) == 0);
}

TEST_CASE("decimal rendering") {
    PrecisionContext ctx(60);
    CHECK(to_decimal(ctx.real(0), 30) == "0");
    CHECK(to_decimal(ctx.real(41), 10) == "41.00000000");
    CHECK(to_decimal(ctx.rational(-1, 8), 6) == "-0.125000");
    CHECK(to_decimal(ctx.pow10(-12), 4) == "1.000e-12");
    // truncation, not rounding
    CHECK(to_decimal(ctx.from_string("0.199999"), 3) == "0.199");
}

TEST_CASE("rational power branches") {
    PrecisionContext ctx(60);
    CHECK(agree_digits(rational_pow(ctx.real(-8), 1, 3), ctx.real(-2)) >= 58);
    CHECK_THROWS_AS(rational_pow(ctx.real(-2), 1, 2), construction_error);
    CHECK_THROWS_AS(rational_pow(ctx.real(0), -1, 2), domain_error);
}

TEST_CASE("non-finite values are rejected") {
    PrecisionContext ctx(60);
    Real nan; // default-constructed carrier
    CHECK(!nan.finite());
    CHECK_THROWS_AS((void)agree_digits(nan, ctx.real(1)), error);
    CHECK_THROWS_AS((void)(nan < ctx.real(1)), error);
}
