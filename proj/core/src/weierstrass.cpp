#include "isoparity/weierstrass.hpp"

#include <cassert>

namespace isoparity {

bool WeierstrassModel::is_integral() const {
    return is_integer(a1) && is_integer(a2) && is_integer(a3) && is_integer(a4) && is_integer(a6);
}

std::string WeierstrassModel::to_string() const {
    auto s = [](const Rational& q) { return q.get_str(); };
    return "[" + s(a1) + "," + s(a2) + "," + s(a3) + "," + s(a4) + "," + s(a6) + "]";
}

Invariants invariants(const WeierstrassModel& m) {
    Invariants v;
    v.b2 = m.a1 * m.a1 + 4 * m.a2;
    v.b4 = 2 * m.a4 + m.a1 * m.a3;
    v.b6 = m.a3 * m.a3 + 4 * m.a6;
    v.b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 + m.a2 * m.a3 * m.a3 -
           m.a4 * m.a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 +
             9 * v.b2 * v.b4 * v.b6;
    assert(1728 * v.disc == v.c4 * v.c4 * v.c4 - v.c6 * v.c6);
    assert(4 * v.b8 == v.b2 * v.b6 - v.b4 * v.b4);
    if (v.disc == 0) throw SingularModel("discriminant is zero: " + m.to_string());
    v.j = v.c4 * v.c4 * v.c4 / v.disc;
    return v;
}

Transformation Transformation::compose(const Transformation& then) const {
    Transformation c;
    c.u = u * then.u;
    c.r = u * u * then.r + r;
    c.s = u * then.s + s;
    c.t = u * u * u * then.t + u * u * s * then.r + t;
    return c;
}

Transformation Transformation::inverse() const {
    Transformation inv;
    inv.u = Rational(1) / u;
    inv.r = -r / (u * u);
    inv.s = -s / u;
    inv.t = (r * s - t) / (u * u * u);
    return inv;
}

WeierstrassModel transform(const WeierstrassModel& m, const Transformation& t) {
    if (t.u == 0) throw Error("transform: u = 0");
    const Rational &u = t.u, &r = t.r, &s = t.s, &tt = t.t;
    Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    WeierstrassModel n;
    n.a1 = (m.a1 + 2 * s) / u;
    n.a2 = (m.a2 - s * m.a1 + 3 * r - s * s) / u2;
    n.a3 = (m.a3 + r * m.a1 + 2 * tt) / u3;
    n.a4 = (m.a4 - s * m.a3 + 2 * r * m.a2 - (tt + r * s) * m.a1 + 3 * r * r - 2 * s * tt) / u4;
    n.a6 = (m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - tt * m.a3 - tt * tt - r * tt * m.a1) / u6;
    return n;
}

namespace {

std::optional<Rational> rational_kth_root(const Rational& x, unsigned long k) {
    if (x <= 0) return std::nullopt;
    Int num, den;
    if (mpz_root(num.get_mpz_t(), x.get_num().get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), x.get_den().get_mpz_t(), k) == 0) return std::nullopt;
    return rational(num, den);
}

}  // namespace

std::optional<Transformation> transform_between(const WeierstrassModel& from,
                                                const WeierstrassModel& to) {
    Invariants vf = invariants(from), vt = invariants(to);
    std::optional<Rational> u;
    if (vt.c4 != 0)
        u = rational_kth_root(vf.c4 / vt.c4, 4);
    else if (vt.c6 != 0)
        u = rational_kth_root(vf.c6 / vt.c6, 6);
    if (!u) return std::nullopt;
    Transformation t;
    t.u = *u;
    t.s = (*u * to.a1 - from.a1) / 2;
    t.r = (*u * *u * to.a2 - from.a2 + t.s * from.a1 + t.s * t.s) / 3;
    t.t = (*u * *u * *u * to.a3 - from.a3 - t.r * from.a1) / 2;
    if (transform(from, t) == to) return t;
    return std::nullopt;
}

ShortModel short_model(const WeierstrassModel& m) {
    Invariants v = invariants(m);
    ShortModel s;
    s.A = -27 * v.c4;
    s.B = -54 * v.c6;
    s.to_short.u = rational(1, 6);
    s.to_short.r = -v.b2 / 12;
    s.to_short.s = -m.a1 / 2;
    s.to_short.t = m.a1 * v.b2 / 24 - m.a3 / 2;
    assert(transform(m, s.to_short) == short_to_model(s.A, s.B));
    return s;
}

WeierstrassModel short_to_model(const Rational& A, const Rational& B) {
    return WeierstrassModel{Rational(0), Rational(0), Rational(0), A, B};
}

}  // namespace isoparity
