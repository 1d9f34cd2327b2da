#include "isoparity/minimal.hpp"

#include <cassert>
#include <limits>
#include <set>

namespace isoparity {

namespace {

Int mod_pos(const Int& a, long m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Realizability of an integer pair (c4, c6) by an integral model, decided
// locally. Eliminating b4 = (b2^2 - c4)/24 and b6 = (-b2^3 + 36 b2 b4 - c6)/216
// leaves, for W(b2) = b2^3 - 3 c4 b2 - 2 c6 = 432 b6:
//   at 3: 3 | b2^2 - c4 and 27 | W for some b2;
//   at 2: b2 = 0, 1 mod 4 (b2 = a1^2 + 4 a2), 8 | b2^2 - c4, W = 0 or 48
//         mod 64 (b6 integral with b6 = a3^2 = 0, 1 mod 4), and the parity
//         tie b4 = a1 a3 mod 2.
// Every condition depends on b2 only mod 64 (resp. 27), so a residue scan is
// exact.
bool kraus_at2(const Int& c4, const Int& c6) {
    for (long b = 0; b < 64; ++b) {
        if (b % 4 == 2 || b % 4 == 3) continue;
        Int t = Int(b) * b - c4;
        if (mod_pos(t, 8) != 0) continue;
        Int w = Int(b) * b * b - 3 * c4 * b - 2 * c6;
        long w64 = mod_pos(w, 64).get_si();
        if (w64 != 0 && w64 != 48) continue;
        long p4 = mod_pos(t / 8, 2).get_si();
        long p6 = w64 == 48 ? 1 : 0;
        if (p4 == (b % 2) * p6) return true;
    }
    return false;
}

bool kraus_at3(const Int& c4, const Int& c6) {
    for (long b = 0; b < 27; ++b) {
        if (mod_pos(Int(b) * b - c4, 3) != 0) continue;
        if (mod_pos(Int(b) * b * b - 3 * c4 * b - 2 * c6, 27) == 0) return true;
    }
    return false;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Maximal d with (c4/q^4d, c6/q^6d) integral at q, ignoring realizability;
// negative when the pair itself is non-integral at q.
long scaling_exponent_at(const Rational& c4, const Rational& c6, const Int& q) {
    std::optional<long> v4 = valuation(c4, q), v6 = valuation(c6, q);
    if (!v4 && !v6) throw SingularModel("c4 = c6 = 0");
    long d4 = v4 ? floor_div(*v4, 4) : std::numeric_limits<long>::max();
    long d6 = v6 ? floor_div(*v6, 6) : std::numeric_limits<long>::max();
    return std::min(d4, d6);
}

Rational int_pow(const Int& q, long e) {
    Rational r(1);
    Rational qq = rational(q, 1);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= qq;
    return e < 0 ? Rational(1) / r : r;
}

// Integral model with the given realizable invariants. Any integral model has
// b2 = 0 or 1 mod 4, hence b2^3 = b2 mod 12 and b2 = -c6 mod 12; divisibility
// of b4, b6 only depends on that residue, but integrality of a6 (b6 = a3
// mod 4) can force a lift of it, so several lifts are tried and each candidate
// is verified exactly.
WeierstrassModel model_from_c4c6(const Int& c4, const Int& c6) {
    Int r = mod_pos(-c6, 12);
    for (long k = -8; k <= 8; ++k) {
        Int b2 = r + 12 * k;
        Int t = b2 * b2 - c4;
        if (t % 24 != 0) continue;
        Int b4 = t / 24;
        t = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
        if (t % 216 != 0) continue;
        Int b6 = t / 216;
        Int a1 = mod_pos(b2, 2);
        Int a3 = mod_pos(b6, 2);
        if ((b2 - a1) % 4 != 0 || (b4 - a1 * a3) % 2 != 0 || (b6 - a3) % 4 != 0) continue;
        WeierstrassModel m{rational(a1, 1), rational((b2 - a1) / 4, 1), rational(a3, 1),
                           rational((b4 - a1 * a3) / 2, 1), rational((b6 - a3) / 4, 1)};
        Invariants v = invariants(m);
        if (v.c4 == c4 && v.c6 == c6) return m;
    }
    throw Error("model_from_c4c6: pair not realizable");
}

}  // namespace

std::pair<WeierstrassModel, Transformation> global_minimal_model(const WeierstrassModel& m) {
    Invariants v = invariants(m);
    std::set<Int> primes{Int(2), Int(3)};
    for (const Rational* c : {&v.c4, &v.c6}) {
        if (*c == 0) continue;
        for (const auto& [q, e] : factorize(c->get_num())) primes.insert(q);
        for (const auto& [q, e] : factorize(c->get_den())) primes.insert(q);
    }
    Rational u(1);
    for (const Int& q : primes) u *= int_pow(q, scaling_exponent_at(v.c4, v.c6, q));
    Rational u2 = u * u, u4 = u2 * u2, u6 = u4 * u2;
    Rational c4r = v.c4 / u4, c6r = v.c6 / u6;
    assert(is_integer(c4r) && is_integer(c6r));
    Int c4 = c4r.get_num(), c6 = c6r.get_num();
    while (!kraus_at3(c4, c6)) {
        u /= 3;
        c4 *= 81;
        c6 *= 729;
    }
    while (!kraus_at2(c4, c6)) {
        u /= 2;
        c4 *= 16;
        c6 *= 64;
    }
    WeierstrassModel mm = model_from_c4c6(c4, c6);
    auto t = transform_between(m, mm);
    if (!t) throw Error("global_minimal_model: transformation recovery failed");
    assert(t->u == u);
    return {mm, *t};
}

bool is_minimal_at(const WeierstrassModel& m, const Int& q) {
    Invariants v = invariants(m);
    long d = scaling_exponent_at(v.c4, v.c6, q);
    if (d < 0) return false;  // not integral at q
    if (d == 0) return true;
    if (q >= 5) return false;
    for (long k = d; k >= 1; --k) {
        Rational c4c = v.c4 / int_pow(q, 4 * k), c6c = v.c6 / int_pow(q, 6 * k);
        if (!is_integer(c4c) || !is_integer(c6c)) continue;
        bool ok = q == 2 ? kraus_at2(c4c.get_num(), c6c.get_num())
                         : kraus_at3(c4c.get_num(), c6c.get_num());
        if (ok) return false;
    }
    return true;
}

}  // namespace isoparity
