#include "isoparity/localdata.hpp"

#include <cassert>

#include "isoparity/polyf.hpp"

namespace isoparity {

std::string KodairaType::to_string() const {
    switch (tag) {
        case I0: return "I0";
        case In: return "I" + std::to_string(n);
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case I0star: return "I0*";
        case Instar: return "I" + std::to_string(n) + "*";
        case IVstar: return "IV*";
        case IIIstar: return "III*";
        case IIstar: return "II*";
    }
    return "?";
}

std::string to_string(ReductionClass c) {
    switch (c) {
        case ReductionClass::Good: return "Good";
        case ReductionClass::MultiplicativeSplit: return "MultSplit";
        case ReductionClass::MultiplicativeNonsplit: return "MultNonsplit";
        case ReductionClass::AdditivePotentiallyMultiplicative: return "AddPotMult";
        case ReductionClass::AdditivePotentiallyGood: return "AddPotGood";
    }
    return "?";
}

namespace {

struct ZModel {
    Int a1, a2, a3, a4, a6;
};

struct ZInv {
    Int b2, b4, b6, b8, c4, c6, disc;
};

ZInv zinv(const ZModel& e) {
    ZInv v;
    v.b2 = e.a1 * e.a1 + 4 * e.a2;
    v.b4 = e.a1 * e.a3 + 2 * e.a4;
    v.b6 = e.a3 * e.a3 + 4 * e.a6;
    v.b8 = e.a1 * e.a1 * e.a6 + 4 * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
           e.a4 * e.a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 +
             9 * v.b2 * v.b4 * v.b6;
    return v;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Valuation with a large sentinel for 0, safe to compare against small bounds.
long val(const Int& x, const Int& ell) {
    auto v = valuation(x, ell);
    return v ? *v : 1000000L;
}

// u = 1 coordinate change x -> x + r, y -> y + s*x + t.
ZModel translate(const ZModel& e, const Int& r, const Int& s, const Int& t) {
    ZModel n;
    n.a1 = e.a1 + 2 * s;
    n.a2 = e.a2 - s * e.a1 + 3 * r - s * s;
    n.a3 = e.a3 + r * e.a1 + 2 * t;
    n.a4 = e.a4 - s * e.a3 + 2 * r * e.a2 - (t + r * s) * e.a1 + 3 * r * r - 2 * s * t;
    n.a6 = e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - t * e.a3 - t * t - r * t * e.a1;
    return n;
}

Int pow_int(const Int& b, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

uint64_t to_u64(const Int& x, const Int& ell) { return mod_pos(x, ell).get_ui(); }

// Distinct roots of the monic cubic T^3 + c2 T^2 + c1 T + c0 over F_ell
// (odd ell), together with the repeated root when one exists.
struct CubicShape {
    int distinct_rational_roots = 0;  // meaningful when no repeated root
    bool repeated = false;
    bool triple = false;
    Int repeated_root;  // set when repeated
};

CubicShape cubic_shape_odd(const Int& c2, const Int& c1, const Int& c0, const Int& ell) {
    uint64_t l = ell.get_ui();
    PolyF p(l, {to_u64(c0, ell), to_u64(c1, ell), to_u64(c2, ell), 1});
    PolyF dp = p.derivative();
    CubicShape s;
    if (dp.is_zero()) {
        // char 3 with c2 = c1 = 0: T^3 + c0 = (T + c0)^3.
        s.repeated = s.triple = true;
        s.repeated_root = mod_pos(-c0, ell);
        return s;
    }
    PolyF g = gcd_poly(p, dp);
    if (g.degree() == 0) {
        PolyF xq = powmod(PolyF::x(l), ell, p);
        PolyF diff = xq - PolyF::x(l);
        PolyF r = diff.is_zero() ? p : gcd_poly(diff, p);
        s.distinct_rational_roots = static_cast<int>(r.degree());
        return s;
    }
    s.repeated = true;
    if (g.degree() == 1) {
        // g = x + g0 up to scale
        PolyF gm = g.monic();
        s.repeated_root = Int(gm.coeff(0)) == 0 ? Int(0) : ell - Int(gm.coeff(0));
        s.triple = false;
    } else {
        // g = (x - r)^2: triple root of p
        PolyF gm = g.monic();
        Int two_r = mod_pos(-Int(gm.coeff(1)), ell);
        Int inv2;
        Int two(2);
        mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), ell.get_mpz_t());
        s.repeated_root = mod_pos(two_r * inv2, ell);
        s.triple = true;
    }
    return s;
}

CubicShape cubic_shape_2(const Int& c2, const Int& c1, const Int& c0) {
    // Multiplicity of each candidate root by repeated synthetic division.
    auto mult_at = [&](long r) {
        std::vector<long> cs = {mod_pos(c0, Int(2)).get_si(), mod_pos(c1, Int(2)).get_si(),
                                mod_pos(c2, Int(2)).get_si(), 1};
        long m = 0;
        while (cs.size() > 1) {
            std::vector<long> q(cs.size() - 1);
            long acc = 0;
            for (long i = static_cast<long>(cs.size()) - 1; i >= 1; --i) {
                acc = (acc * r + cs[i]) & 1;
                q[i - 1] = acc;
            }
            if (((acc * r + cs[0]) & 1) != 0) break;
            ++m;
            cs = q;
        }
        return m;
    };
    long m0 = mult_at(0), m1 = mult_at(1);
    CubicShape s;
    if (m0 >= 2 || m1 >= 2) {
        s.repeated = true;
        s.triple = (m0 >= 3 || m1 >= 3);
        s.repeated_root = m0 >= 2 ? 0 : 1;
    } else {
        s.distinct_rational_roots = static_cast<int>((m0 ? 1 : 0) + (m1 ? 1 : 0));
    }
    return s;
}

CubicShape cubic_shape(const Int& c2, const Int& c1, const Int& c0, const Int& ell) {
    return ell == 2 ? cubic_shape_2(c2, c1, c0) : cubic_shape_odd(c2, c1, c0, ell);
}

// Monic quadratic Y^2 + bY + c over F_ell: separability, rational root count,
// and the double root when inseparable-or-double.
struct QuadShape {
    bool separable = false;
    int roots = 0;       // rational roots, meaningful when separable
    Int double_root;     // set when not separable (or disc = 0)
};

QuadShape quad_shape(const Int& b, const Int& c, const Int& ell) {
    QuadShape s;
    if (ell == 2) {
        if (mod_pos(b, ell) != 0) {
            s.separable = true;
            for (long y : {0L, 1L})
                if (mod_pos(Int(y * y) + b * y + c, ell) == 0) ++s.roots;
        } else {
            s.double_root = mod_pos(c, ell);  // sqrt in F_2
        }
        return s;
    }
    Int disc = b * b - 4 * c;
    if (mod_pos(disc, ell) == 0) {
        Int inv2;
        Int two(2);
        mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), ell.get_mpz_t());
        s.double_root = mod_pos(-b * inv2, ell);
        return s;
    }
    s.separable = true;
    s.roots = legendre(disc, ell) == 1 ? 2 : 0;
    return s;
}

// General quadratic r2 X^2 + r1 X + r0 with r2 a unit mod ell.
QuadShape quad_shape_general(const Int& r2, const Int& r1, const Int& r0, const Int& ell) {
    Int inv;
    Int r2m = mod_pos(r2, ell);
    mpz_invert(inv.get_mpz_t(), r2m.get_mpz_t(), ell.get_mpz_t());
    return quad_shape(mod_pos(r1 * inv, ell), mod_pos(r0 * inv, ell), ell);
}

// Singular point of the reduced curve mod ell (reduction assumed singular).
std::pair<Int, Int> singular_point(const ZModel& e, const Int& ell) {
    if (ell == 2) {
        for (long x = 0; x <= 1; ++x)
            for (long y = 0; y <= 1; ++y) {
                Int on = y * y + e.a1 * x * y + e.a3 * y - x * x * x - e.a2 * x * x - e.a4 * x -
                         e.a6;
                Int dx = e.a1 * y - 3 * x * x - 2 * e.a2 * x - e.a4;
                Int dy = 2 * y + e.a1 * x + e.a3;
                if (mod_pos(on, ell) == 0 && mod_pos(dx, ell) == 0 && mod_pos(dy, ell) == 0)
                    return {Int(x), Int(y)};
            }
        throw Error("singular_point: none found mod 2");
    }
    ZInv v = zinv(e);
    uint64_t l = ell.get_ui();
    // (2y + a1 x + a3)^2 = F(x); singular x0 is the repeated root of F mod ell.
    PolyF f(l, {to_u64(v.b6, ell), to_u64(2 * v.b4, ell), to_u64(v.b2, ell), to_u64(Int(4), ell)});
    PolyF df = f.derivative();
    Int x0;
    if (df.is_zero()) {
        // char 3 with F/4 = x^3 + c0 = (x + c0)^3
        assert(ell == 3);
        PolyF fm = f.monic();
        assert(fm.coeff(1) == 0 && fm.coeff(2) == 0);
        x0 = mod_pos(-Int(fm.coeff(0)), ell);
        Int inv2a;
        Int twoa(2);
        mpz_invert(inv2a.get_mpz_t(), twoa.get_mpz_t(), ell.get_mpz_t());
        return {x0, mod_pos(-(e.a1 * x0 + e.a3) * inv2a, ell)};
    }
    PolyF g = gcd_poly(f, df);
    if (g.degree() == 1) {
        PolyF gm = g.monic();
        x0 = mod_pos(-Int(gm.coeff(0)), ell);
    } else if (g.degree() == 2) {
        PolyF gm = g.monic();
        Int inv2;
        Int two(2);
        mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), ell.get_mpz_t());
        x0 = mod_pos(-Int(gm.coeff(1)) * inv2, ell);
    } else {
        throw Error("singular_point: unexpected gcd degree");
    }
    Int inv2;
    Int two(2);
    mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), ell.get_mpz_t());
    Int y0 = mod_pos(-(e.a1 * x0 + e.a3) * inv2, ell);
    return {x0, y0};
}

// Tangent-cone split test on a model whose singular point sits at the origin:
// the node is split iff y^2 + a1 xy - a2 x^2 has two rational tangents.
bool split_at_origin(const ZModel& e, const Int& ell) {
    if (ell == 2) {
        assert(mod_pos(e.a1, ell) == 1);  // nodal tangent form is nondegenerate
        return mod_pos(e.a2, ell) == 0;
    }
    Int disc = e.a1 * e.a1 + 4 * e.a2;
    assert(mod_pos(disc, ell) != 0);
    return legendre(disc, ell) == 1;
}

// s,t adjustments so that v(a1) >= 1, v(a2) >= 1, v(a3) >= 2, v(a4) >= 2,
// v(a6) >= 3; valid once steps II/III/IV have been passed on a model with the
// singular point at the origin.
ZModel normalize_additive(ZModel e, const Int& ell) {
    if (ell == 2) {
        assert(val(e.a1, ell) >= 1);
        e = translate(e, 0, mod_pos(e.a2, ell), 0);
        assert(val(e.a3, ell) >= 2 && val(e.a6, ell) >= 2);
        Int t1 = mod_pos(e.a6 / 4, ell);
        e = translate(e, 0, 0, 2 * t1);
    } else {
        Int ell2 = ell * ell;
        Int inv2;
        Int two(2);
        mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), ell.get_mpz_t());
        e = translate(e, 0, mod_pos(-e.a1 * inv2, ell), 0);
        Int inv2w;
        mpz_invert(inv2w.get_mpz_t(), two.get_mpz_t(), ell2.get_mpz_t());
        e = translate(e, 0, 0, mod_pos(-e.a3 * inv2w, ell2));
    }
    assert(val(e.a1, ell) >= 1 && val(e.a2, ell) >= 1);
    assert(val(e.a3, ell) >= 2 && val(e.a4, ell) >= 2 && val(e.a6, ell) >= 3);
    return e;
}

}  // namespace

bool detail::split_by_tangent_cone(const WeierstrassModel& m, const Int& ell) {
    // Clear denominators away from ell (the test only looks mod ell).
    std::vector<Int> dens = denominator_primes({m.a1, m.a2, m.a3, m.a4, m.a6});
    Rational u(1);
    for (const Int& q : dens) {
        if (q == ell) throw NonIntegralModel("tangent cone: model not integral at " + ell.get_str());
        long worst = 0;
        for (const Rational* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6}) {
            auto vq = valuation(*a, q);
            if (vq && *vq < worst) worst = *vq;
        }
        for (long i = 0; i < -worst; ++i) u /= rational(q, 1);
    }
    WeierstrassModel w = transform(m, {u, Rational(0), Rational(0), Rational(0)});
    assert(w.is_integral());
    ZModel e{w.a1.get_num(), w.a2.get_num(), w.a3.get_num(), w.a4.get_num(), w.a6.get_num()};
    auto [x0, y0] = singular_point(e, ell);
    return split_at_origin(translate(e, x0, 0, y0), ell);
}

LocalData tate_algorithm(const WeierstrassModel& m, const Int& ell) {
    for (const Rational* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6}) {
        auto vl = valuation(*a, ell);
        if (vl && *vl < 0)
            throw NonIntegralModel("tate_algorithm: model not integral at " + ell.get_str());
    }
    // Clear denominators supported away from ell; an ell-unit scaling leaves
    // all local data unchanged.
    Rational u(1);
    for (const Int& q : denominator_primes({m.a1, m.a2, m.a3, m.a4, m.a6})) {
        long worst = 0;
        for (const Rational* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6}) {
            auto vq = valuation(*a, q);
            if (vq && *vq < worst) worst = *vq;
        }
        for (long i = 0; i < -worst; ++i) u /= rational(q, 1);
    }
    WeierstrassModel w = transform(m, {u, Rational(0), Rational(0), Rational(0)});
    assert(w.is_integral());

    Rational jq = invariants(m).j;
    bool j_negative_val = false;
    {
        auto vj = valuation(jq, ell);
        j_negative_val = vj && *vj < 0;
    }

    ZModel e{w.a1.get_num(), w.a2.get_num(), w.a3.get_num(), w.a4.get_num(), w.a6.get_num()};
    LocalData out;
    out.ell = ell;

    for (;;) {
        ZInv iv = zinv(e);
        assert(iv.disc != 0);
        long ndisc = val(iv.disc, ell);

        if (ndisc == 0) {
            out.vdisc_min = 0;
            out.kodaira = {KodairaType::I0, 0};
            out.c = 1;
            out.cls = ReductionClass::Good;
            return out;
        }

        if (val(iv.c4, ell) == 0) {
            // Type In, n = v(disc); necessarily minimal.
            bool split = ell > 3 ? legendre(-iv.c6, ell) == 1 : [&] {
                auto [x0, y0] = singular_point(e, ell);
                return split_at_origin(translate(e, x0, 0, y0), ell);
            }();
            out.vdisc_min = ndisc;
            out.kodaira = {KodairaType::In, ndisc};
            out.c = split ? Int(ndisc) : Int(ndisc % 2 == 0 ? 2 : 1);
            out.cls = split ? ReductionClass::MultiplicativeSplit
                            : ReductionClass::MultiplicativeNonsplit;
            return out;
        }

        out.cls = j_negative_val ? ReductionClass::AdditivePotentiallyMultiplicative
                                 : ReductionClass::AdditivePotentiallyGood;
        out.vdisc_min = ndisc;

        auto [x0, y0] = singular_point(e, ell);
        ZModel f = translate(e, x0, 0, y0);
        assert(val(f.a3, ell) >= 1 && val(f.a4, ell) >= 1 && val(f.a6, ell) >= 1);

        if (val(f.a6, ell) < 2) {
            out.kodaira = {KodairaType::II, 0};
            out.c = 1;
            return out;
        }
        ZInv fv = zinv(f);
        if (val(fv.b8, ell) < 3) {
            out.kodaira = {KodairaType::III, 0};
            out.c = 2;
            return out;
        }
        if (val(fv.b6, ell) < 3) {
            // Type IV; c = 3 iff Y^2 + (a3/l) Y - a6/l^2 has a rational root.
            Int b = f.a3 / ell, c = -(f.a6 / (ell * ell));
            QuadShape q = quad_shape(mod_pos(b, ell), mod_pos(c, ell), ell);
            bool solvable = q.separable ? q.roots > 0 : true;
            out.kodaira = {KodairaType::IV, 0};
            out.c = solvable ? 3 : 1;
            return out;
        }

        f = normalize_additive(f, ell);

        Int ell2 = ell * ell, ell3 = ell2 * ell;
        CubicShape cu = cubic_shape(f.a2 / ell, f.a4 / ell2, f.a6 / ell3, ell);
        if (!cu.repeated) {
            out.kodaira = {KodairaType::I0star, 0};
            out.c = 1 + cu.distinct_rational_roots;
            return out;
        }

        if (!cu.triple) {
            // Type In*, n >= 1: put the double root of the cubic at T = 0.
            f = translate(f, ell * cu.repeated_root, 0, 0);
            assert(val(f.a2, ell) == 1 && val(f.a4, ell) >= 3 && val(f.a6, ell) >= 4);
            long n = 1, mlev = 1;
            for (;;) {
                if (n % 2 == 1) {
                    Int b = f.a3 / pow_int(ell, mlev + 1);
                    Int c = -(f.a6 / pow_int(ell, 2 * mlev + 2));
                    QuadShape q = quad_shape(mod_pos(b, ell), mod_pos(c, ell), ell);
                    if (q.separable) {
                        out.kodaira = {KodairaType::Instar, n};
                        out.c = 2 + q.roots;
                        assert(ndisc == 6 + n);
                        return out;
                    }
                    f = translate(f, 0, 0, pow_int(ell, mlev + 1) * q.double_root);
                } else {
                    Int r2 = f.a2 / ell;
                    Int r1 = f.a4 / pow_int(ell, mlev + 2);
                    Int r0 = f.a6 / pow_int(ell, 2 * mlev + 3);
                    QuadShape q = quad_shape_general(r2, r1, r0, ell);
                    if (q.separable) {
                        out.kodaira = {KodairaType::Instar, n};
                        out.c = 2 + q.roots;
                        assert(ndisc == 6 + n);
                        return out;
                    }
                    f = translate(f, pow_int(ell, mlev + 1) * q.double_root, 0, 0);
                    ++mlev;
                }
                ++n;
                assert(n <= ndisc);  // loop is bounded by v(disc)
            }
        }

        // Triple root: move it to T = 0.
        f = translate(f, ell * cu.repeated_root, 0, 0);
        assert(val(f.a2, ell) >= 2 && val(f.a4, ell) >= 3 && val(f.a6, ell) >= 4);
        {
            Int b = f.a3 / ell2, c = -(f.a6 / (ell2 * ell2));
            QuadShape q = quad_shape(mod_pos(b, ell), mod_pos(c, ell), ell);
            if (q.separable) {
                out.kodaira = {KodairaType::IVstar, 0};
                out.c = q.roots > 0 ? 3 : 1;
                return out;
            }
            f = translate(f, 0, 0, ell2 * q.double_root);
        }
        assert(val(f.a3, ell) >= 3 && val(f.a6, ell) >= 5);
        if (val(f.a4, ell) < 4) {
            out.kodaira = {KodairaType::IIIstar, 0};
            out.c = 2;
            return out;
        }
        if (val(f.a6, ell) < 6) {
            out.kodaira = {KodairaType::IIstar, 0};
            out.c = 1;
            return out;
        }
        // Not minimal at ell: rescale and restart.
        assert(val(f.a1, ell) >= 1 && val(f.a2, ell) >= 2 && val(f.a3, ell) >= 3 &&
               val(f.a4, ell) >= 4 && val(f.a6, ell) >= 6);
        e = ZModel{f.a1 / ell, f.a2 / ell2, f.a3 / ell3, f.a4 / (ell2 * ell2),
                   f.a6 / (ell3 * ell3)};
    }
}

ReductionClass reduction_class(const WeierstrassModel& m, const Int& ell) {
    return tate_algorithm(m, ell).cls;
}

bool supports_root_number(const LocalData& d, const Int& ell) {
    switch (d.cls) {
        case ReductionClass::Good:
        case ReductionClass::MultiplicativeSplit:
        case ReductionClass::MultiplicativeNonsplit: return true;
        case ReductionClass::AdditivePotentiallyMultiplicative: return ell > 2;
        case ReductionClass::AdditivePotentiallyGood: return ell > 3;
    }
    return false;
}

}  // namespace isoparity
