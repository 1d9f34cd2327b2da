#ifndef ISOPARITY_TESTS_HELPERS_HPP
#define ISOPARITY_TESTS_HELPERS_HPP

// Brute-force oracles shared by the test suite. Everything here recomputes
// from first principles (point enumeration, schoolbook group law, residue
// scans) so that library results are checked against independent arithmetic,
// never against themselves.

#include <array>
#include <cstdlib>
#include <optional>
#include <vector>

#include "isoparity/numbers.hpp"
#include "isoparity/polyq.hpp"
#include "isoparity/weierstrass.hpp"

namespace testol {

using isoparity::Int;
using isoparity::Rational;
using isoparity::WeierstrassModel;

inline long md(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long inv_mod(long a, long m) {
    long t = 0, nt = 1, r = m, nr = md(a, m);
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) std::abort();
    return md(t, m);
}

// a-invariants reduced mod ell; nullopt when a denominator is divisible.
inline std::optional<std::array<long, 5>> reduce_curve(const WeierstrassModel& m, long ell) {
    std::array<Rational, 5> as = {m.a1, m.a2, m.a3, m.a4, m.a6};
    std::array<long, 5> out{};
    for (int i = 0; i < 5; ++i) {
        Int den = as[i].get_den();
        if (mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(ell)) == 0) return std::nullopt;
        long n = static_cast<long>(mpz_fdiv_ui(as[i].get_num().get_mpz_t(),
                                               static_cast<unsigned long>(ell)));
        long d = static_cast<long>(mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(ell)));
        out[i] = md(n * inv_mod(d, ell), ell);
    }
    return out;
}

// ---------------------------------------------------------------------------
// F_{ell^2} = F_ell[T]/(T^2 - n), n the least quadratic nonresidue; ell odd.

struct Fq {
    long a = 0, b = 0;  // a + b T
    friend bool operator==(const Fq& x, const Fq& y) = default;
};

struct FqCtx {
    long ell = 0, nonres = 0;

    explicit FqCtx(long l) : ell(l) {
        std::vector<char> sq(static_cast<size_t>(l), 0);
        for (long y = 0; y < l; ++y) sq[static_cast<size_t>(md(y * y, l))] = 1;
        for (long n = 2; n < l; ++n)
            if (!sq[static_cast<size_t>(n)]) {
                nonres = n;
                break;
            }
        if (nonres == 0) std::abort();  // ell = 2 unsupported here
    }

    Fq make(long a, long b = 0) const { return {md(a, ell), md(b, ell)}; }
    bool flat(const Fq& x) const { return x.b == 0; }
    Fq add(const Fq& x, const Fq& y) const { return {md(x.a + y.a, ell), md(x.b + y.b, ell)}; }
    Fq sub(const Fq& x, const Fq& y) const { return {md(x.a - y.a, ell), md(x.b - y.b, ell)}; }
    Fq neg(const Fq& x) const { return {md(-x.a, ell), md(-x.b, ell)}; }
    Fq mul(const Fq& x, const Fq& y) const {
        return {md(x.a * y.a + md(x.b * y.b, ell) * nonres, ell), md(x.a * y.b + x.b * y.a, ell)};
    }
    Fq inv(const Fq& x) const {
        // (a + bT)^-1 = (a - bT) / (a^2 - n b^2)
        long nrm = md(x.a * x.a - md(x.b * x.b, ell) * nonres, ell);
        long w = inv_mod(nrm, ell);
        return {md(x.a * w, ell), md(-x.b * w, ell)};
    }
    Fq frob(const Fq& x) const { return {x.a, md(-x.b, ell)}; }  // T^ell = -T

    // Square root of a prime-field element inside F_{ell^2}; always exists.
    Fq sqrt_flat(long d) const {
        d = md(d, ell);
        for (long y = 0; y < ell; ++y)
            if (md(y * y, ell) == d) return {y, 0};
        for (long b = 1; b < ell; ++b)
            if (md(md(b * b, ell) * nonres, ell) == d) return {0, b};
        std::abort();
    }
};

struct Pt {
    bool inf = true;
    Fq x, y;
    friend bool operator==(const Pt& p, const Pt& q) = default;
};

// Group law on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, coords in Fq.
inline Pt neg_pt(const FqCtx& F, const std::array<long, 5>& a, const Pt& p) {
    if (p.inf) return p;
    Fq ny = F.sub(F.neg(p.y), F.add(F.mul(F.make(a[0]), p.x), F.make(a[2])));
    return {false, p.x, ny};
}

inline Pt add_pts(const FqCtx& F, const std::array<long, 5>& a, const Pt& p, const Pt& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    Fq a1 = F.make(a[0]), a2 = F.make(a[1]), a3 = F.make(a[2]), a4 = F.make(a[3]),
       a6 = F.make(a[4]);
    if (p.x == q.x) {
        // q = -p?
        Fq s = F.add(F.add(p.y, q.y), F.add(F.mul(a1, p.x), a3));
        if (s == Fq{0, 0}) return {};
    }
    Fq lam, nu;
    if (p.x == q.x) {
        Fq den = F.add(F.add(p.y, p.y), F.add(F.mul(a1, p.x), a3));
        Fq x2 = F.mul(p.x, p.x);
        lam = F.mul(F.add(F.add(F.mul(F.make(3), x2), F.mul(F.make(2 * a[1]), p.x)),
                          F.sub(a4, F.mul(a1, p.y))),
                    F.inv(den));
        Fq x3 = F.mul(x2, p.x);
        nu = F.mul(F.add(F.sub(F.add(F.mul(a4, p.x), F.add(a6, a6)), F.mul(a3, p.y)),
                         F.neg(x3)),
                   F.inv(den));
    } else {
        Fq den = F.inv(F.sub(q.x, p.x));
        lam = F.mul(F.sub(q.y, p.y), den);
        nu = F.mul(F.sub(F.mul(p.y, q.x), F.mul(q.y, p.x)), den);
    }
    Fq x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), p.x), q.x);
    Fq y3 = F.sub(F.sub(F.neg(F.mul(F.add(lam, a1), x3)), nu), a3);
    return {false, x3, y3};
}

inline Pt mul_pt(const FqCtx& F, const std::array<long, 5>& a, long k, const Pt& p) {
    Pt r;
    for (long i = 0; i < k; ++i) r = add_pts(F, a, r, p);
    return r;
}

inline bool on_curve(const FqCtx& F, const std::array<long, 5>& a, const Pt& p) {
    if (p.inf) return true;
    Fq lhs = F.add(F.mul(p.y, p.y),
                   F.add(F.mul(F.mul(F.make(a[0]), p.x), p.y), F.mul(F.make(a[2]), p.y)));
    Fq x2 = F.mul(p.x, p.x);
    Fq rhs = F.add(F.add(F.mul(x2, p.x), F.mul(F.make(a[1]), x2)),
                   F.add(F.mul(F.make(a[3]), p.x), F.make(a[4])));
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Prime-field brute counts (valid at every ell including 2 and 3).

inline bool on_curve_l(const std::array<long, 5>& a, long ell, long x, long y) {
    long lhs = md(y * y + a[0] * x * y + a[2] * y, ell);
    long rhs = md(((x + a[1]) * x + a[3]) % ell * x + a[4], ell);
    return lhs == rhs;
}

inline bool singular_at(const std::array<long, 5>& a, long ell, long x, long y) {
    long fx = md(a[0] * y - (3 * x * x + 2 * a[1] * x + a[3]), ell);
    long fy = md(2 * y + a[0] * x + a[2], ell);
    return fx == 0 && fy == 0;
}

// #E(F_ell) including the point at infinity (meaningful for good reduction).
inline long count_points(const std::array<long, 5>& a, long ell) {
    long n = 1;
    for (long x = 0; x < ell; ++x)
        for (long y = 0; y < ell; ++y)
            if (on_curve_l(a, ell, x, y)) ++n;
    return n;
}

enum class BruteClass { Good, Split, Nonsplit, Additive };

// Classify the reduction of an ell-minimal model by counting nonsingular
// points: ell - 1 split, ell + 1 nonsplit, ell additive; no singular point
// means good reduction. Distinguishes all four classes at every ell.
inline BruteClass brute_class(const std::array<long, 5>& a, long ell) {
    long smooth = 1;  // infinity
    bool sing = false;
    for (long x = 0; x < ell; ++x)
        for (long y = 0; y < ell; ++y)
            if (on_curve_l(a, ell, x, y)) {
                if (singular_at(a, ell, x, y))
                    sing = true;
                else
                    ++smooth;
            }
    if (!sing) return BruteClass::Good;
    if (smooth == ell - 1) return BruteClass::Split;
    if (smooth == ell + 1) return BruteClass::Nonsplit;
    if (smooth == ell) return BruteClass::Additive;
    std::abort();
}

// Roots of a PolyQ mod ell lying in the prime field (coefficients must be
// ell-integral); brute scan.
inline std::vector<long> roots_mod(const isoparity::PolyQ& h, long ell) {
    std::vector<long> rs;
    for (long x = 0; x < ell; ++x) {
        long acc = 0;
        for (long i = h.degree(); i >= 0; --i) {
            Rational c = h.coeff(i);
            long d = static_cast<long>(
                mpz_fdiv_ui(c.get_den().get_mpz_t(), static_cast<unsigned long>(ell)));
            if (d == 0) std::abort();
            long n = static_cast<long>(
                mpz_fdiv_ui(c.get_num().get_mpz_t(), static_cast<unsigned long>(ell)));
            acc = md(acc * x + n * inv_mod(d, ell), ell);
        }
        if (acc == 0) rs.push_back(x);
    }
    return rs;
}

// Both points over x0 (y in F_{ell^2} when the fiber quadratic is inert).
inline std::vector<Pt> points_over_x(const FqCtx& F, const std::array<long, 5>& a, long x0) {
    // y^2 + B y = C with B = a1 x0 + a3, C = x0^3 + a2 x0^2 + a4 x0 + a6
    long B = md(a[0] * x0 + a[2], F.ell);
    long C = md(((x0 + a[1]) * x0 + a[3]) % F.ell * x0 + a[4], F.ell);
    long D = md(B * B + 4 * C, F.ell);
    Fq s = F.sqrt_flat(D);
    Fq half = F.make(inv_mod(2, F.ell));
    Fq y1 = F.mul(F.sub(s, F.make(B)), half);
    Fq y2 = F.mul(F.sub(F.neg(s), F.make(B)), half);
    std::vector<Pt> out = {{false, F.make(x0), y1}};
    if (!(y1 == y2)) out.push_back({false, F.make(x0), y2});
    return out;
}

}  // namespace testol

#endif
