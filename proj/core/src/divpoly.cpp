#include "isoparity/divpoly.hpp"

#include <cassert>

namespace isoparity {

PolyQ two_torsion_cubic(const WeierstrassModel& m) {
    Invariants v = invariants(m);
    return PolyQ({v.b6, 2 * v.b4, v.b2, Rational(4)});
}

std::vector<PolyQ> division_sequence(const WeierstrassModel& m, long nmax) {
    assert(nmax >= 0);
    Invariants v = invariants(m);
    std::vector<PolyQ> f(static_cast<size_t>(nmax) + 1);
    f[0] = PolyQ();
    if (nmax >= 1) f[1] = PolyQ::constant(Rational(1));
    if (nmax >= 2) f[2] = PolyQ::constant(Rational(1));
    if (nmax >= 3)
        f[3] = PolyQ({v.b8, 3 * v.b6, 3 * v.b4, v.b2, Rational(3)});
    if (nmax >= 4)
        f[4] = PolyQ({v.b4 * v.b8 - v.b6 * v.b6, v.b2 * v.b8 - v.b4 * v.b6, 10 * v.b8, 10 * v.b6,
                      5 * v.b4, v.b2, Rational(2)});
    if (nmax < 5) return f;
    PolyQ F = two_torsion_cubic(m);
    PolyQ F2 = F * F;
    for (long n = 5; n <= nmax; ++n) {
        if (n % 2 == 1) {
            long k = (n - 1) / 2;
            if (k % 2 == 0)
                f[n] = f[k + 2] * f[k] * f[k] * f[k] * F2 - f[k - 1] * f[k + 1] * f[k + 1] * f[k + 1];
            else
                f[n] = f[k + 2] * f[k] * f[k] * f[k] - f[k - 1] * f[k + 1] * f[k + 1] * f[k + 1] * F2;
        } else {
            long k = n / 2;
            f[n] = f[k] * (f[k + 2] * f[k - 1] * f[k - 1] - f[k - 2] * f[k + 1] * f[k + 1]);
        }
    }
    return f;
}

PolyQ division_polynomial(const WeierstrassModel& m, long p) {
    assert(p >= 3 && p % 2 == 1);
    std::vector<PolyQ> f = division_sequence(m, p);
    assert(f[p].degree() == (static_cast<long>(p) * p - 1) / 2);
    return f[p];
}

XMultiple x_multiple(const WeierstrassModel& m, long mult) {
    assert(mult >= 1);
    if (mult == 1) return {PolyQ::x(), PolyQ::constant(Rational(1))};
    std::vector<PolyQ> f = division_sequence(m, mult + 1);
    PolyQ F = two_torsion_cubic(m);
    PolyQ den, sub;
    if (mult % 2 == 1) {
        den = f[mult] * f[mult];
        sub = f[mult - 1] * f[mult + 1] * F;
    } else {
        den = f[mult] * f[mult] * F;
        sub = f[mult - 1] * f[mult + 1];
    }
    return {PolyQ::x() * den - sub, den};
}

}  // namespace isoparity
