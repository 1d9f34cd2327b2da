#include "isoparity/twist.hpp"

#include <cassert>

namespace isoparity {

bool is_squarefree(const Int& d) {
    if (d == 0) return false;
    for (const auto& [q, e] : factorize(abs(d)))
        if (e > 1) return false;
    return true;
}

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Int& d) {
    if (d == 0) throw ZeroElement("quadratic_twist: d = 0");
    if (!is_squarefree(d)) throw NotSquarefree("quadratic_twist: d = " + d.get_str());
    ShortModel s = short_model(m);
    Rational d2 = rational(d * d, 1), d3 = rational(d * d * d, 1);
    return short_to_model(s.A * d2, s.B * d3);
}

Int fundamental_discriminant(const Int& d) {
    if (!is_squarefree(d)) throw NotSquarefree("fundamental_discriminant: d = " + d.get_str());
    Int r = d % 4;
    if (r < 0) r += 4;
    return r == 1 ? d : 4 * d;
}

PolyQ kernel_to_short(const PolyQ& h, const WeierstrassModel& m) {
    assert(h.is_monic());
    ShortModel s = short_model(m);
    // x = u^2 x_S + r, so h_S(X) = h(u^2 X + r) normalized monic.
    PolyQ hs = compose_linear(h, s.to_short.u * s.to_short.u, s.to_short.r);
    return hs.monic();
}

PolyQ twist_kernel(const PolyQ& h_short, const Int& d) {
    assert(h_short.is_monic());
    Rational dd = rational(d, 1);
    PolyQ ht = compose_linear(h_short, Rational(1) / dd, Rational(0));
    Rational scale(1);
    for (long i = 0; i < h_short.degree(); ++i) scale *= dd;
    ht *= scale;
    assert(ht.is_monic());
    return ht;
}

}  // namespace isoparity
