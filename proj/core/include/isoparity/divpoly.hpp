#ifndef ISOPARITY_DIVPOLY_HPP
#define ISOPARITY_DIVPOLY_HPP

#include <vector>

#include "isoparity/polyq.hpp"
#include "isoparity/weierstrass.hpp"

namespace isoparity {

// x-only division polynomials f_n: psi_n = f_n for n odd and
// psi_n = f_n * (2y + a1 x + a3) for n even, so f_n lives in Q[x].
// Returns f_0 .. f_nmax inclusive.
std::vector<PolyQ> division_sequence(const WeierstrassModel& m, long nmax);

// The p-division polynomial psi_p for odd p; degree (p^2 - 1)/2.
PolyQ division_polynomial(const WeierstrassModel& m, long p);

// x-coordinate of [mult]P as a rational function of x = x(P):
// x([mult]P) = num(x) / den(x).
struct XMultiple {
    PolyQ num;
    PolyQ den;
};
XMultiple x_multiple(const WeierstrassModel& m, long mult);

// The squared-ordinate cubic F = 4x^3 + b2 x^2 + 2 b4 x + b6,
// i.e. (2y + a1 x + a3)^2 rewritten in x on the curve.
PolyQ two_torsion_cubic(const WeierstrassModel& m);

}  // namespace isoparity

#endif
