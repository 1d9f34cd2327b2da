#ifndef ISOPARITY_TWIST_HPP
#define ISOPARITY_TWIST_HPP

#include "isoparity/polyq.hpp"
#include "isoparity/weierstrass.hpp"

namespace isoparity {

bool is_squarefree(const Int& d);

// Quadratic twist by squarefree d != 0: the short form y^2 = x^3 + Ax + B of m
// becomes y^2 = x^3 + A d^2 x + B d^3, so disc(twist) = d^6 * disc(short form).
// Throws NotSquarefree / ZeroElement.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Int& d);

// Discriminant of Q(sqrt(d)), d squarefree: d if d = 1 mod 4, else 4d.
Int fundamental_discriminant(const Int& d);

// x-coordinate transport of a monic kernel polynomial from m to short_model(m)
// coordinates: roots map x -> x_S under the to_short transformation.
PolyQ kernel_to_short(const PolyQ& h, const WeierstrassModel& m);

// Kernel transport along the twist isomorphism (x-coordinates scale by d):
// h_twist(X) = d^deg(h) * h_short(X/d), monic again.
PolyQ twist_kernel(const PolyQ& h_short, const Int& d);

}  // namespace isoparity

#endif
