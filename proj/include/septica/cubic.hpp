#pragma once

// Monic cubic polynomials and the three-distinct-real-root solver used by
// the septic pipeline: trigonometric closed form on the depressed cubic,
// then two Newton steps to recover full working precision.

#include <array>

#include "septica/special.hpp"

namespace septica {

/// xi^3 + c2 xi^2 + c1 xi + c0.
struct CubicPoly {
    Real c2, c1, c0;

    Real eval(const Real& xi) const { return ((xi + c2) * xi + c1) * xi + c0; }
    Real deriv(const Real& xi) const { return (3 * xi + 2 * c2) * xi + c1; }

    /// 18 c2 c1 c0 - 4 c2^3 c0 + c2^2 c1^2 - 4 c1^3 - 27 c0^2;
    /// positive iff three distinct real roots.
    Real discriminant() const {
        return 18 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
               4 * c1 * c1 * c1 - 27 * c0 * c0;
    }
};

/// Roots of a cubic with three distinct real roots, ascending. Residuals are
/// verified against 10^{-(digits-5)} max(1, |c0|) after polishing.
inline std::array<Real, 3> solve_cubic_real(const CubicPoly& r_in, const PrecisionContext& ctx) {
    if (!(r_in.discriminant() > 0))
        throw unexpected_discriminant("cubic does not have three distinct real roots");
    CubicPoly r{ctx.promote(r_in.c2), ctx.promote(r_in.c1), ctx.promote(r_in.c0)};

    // depressed form t^3 + P t + Q, xi = t - c2/3
    Real shift = r.c2 / 3;
    Real P = r.c1 - r.c2 * r.c2 / 3;
    Real Q = r.c0 - r.c2 * r.c1 / 3 + 2 * r.c2 * r.c2 * r.c2 / 27;

    // Positive discriminant forces P < 0 and |arg| <= 1 up to rounding.
    Real amp = 2 * sqrt(-P / 3);
    Real arg = 3 * Q / (2 * P) * sqrt(-3 / P);
    if (arg > 1) arg = ctx.real(1);
    if (arg < -1) arg = ctx.real(-1);
    Real theta = acos(arg) / 3;
    Real third_turn = 2 * const_pi(ctx) / 3;

    std::array<Real, 3> roots = {amp * cos(theta) - shift,
                                 amp * cos(theta - third_turn) - shift,
                                 amp * cos(theta + third_turn) - shift};
    for (Real& x : roots)
        for (int step = 0; step < 2; ++step) x -= r.eval(x) / r.deriv(x);

    std::sort(roots.begin(), roots.end(), [](const Real& a, const Real& b) { return a < b; });

    Real bound = ctx.pow10(-(ctx.digits() - 5)) * max(ctx.real(1), abs(r.c0));
    for (const Real& x : roots)
        if (!(abs(r.eval(x)) < bound))
            throw non_convergence("cubic root residual above tolerance");
    return roots;
}

/// Chebyshev polynomial of the second kind by the recurrence
/// U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}.
inline Real chebyshev_u(long n, const Real& x_in, const PrecisionContext& ctx) {
    if (n < 0) throw domain_error("chebyshev_u requires n >= 0");
    Real x = ctx.promote(x_in);
    Real prev = ctx.real(1);
    if (n == 0) return prev;
    Real cur = 2 * x;
    for (long i = 2; i <= n; ++i) {
        Real next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace septica
