#include "isoparity/isogeny.hpp"

#include <cassert>
#include <vector>

#include "isoparity/errors.hpp"
#include "isoparity/sturm.hpp"
#include "isoparity/unitgroup.hpp"

namespace isoparity {

namespace {

bool kernel_shape_ok(const KernelPolynomial& k) {
    if (k.p < 5 || !is_prime(k.p)) return false;
    Int deg2 = (k.p - 1) / 2;
    return k.h.is_monic() && k.h.degree() == deg2.get_si();
}

// h(N/D) cleared of denominators: sum_j h_j N^j D^(deg h - j), reduced mod h.
PolyQ stability_witness(const PolyQ& h, const PolyQ& num, const PolyQ& den) {
    long n = h.degree();
    PolyQ nr = divmod(num, h).second;
    PolyQ dr = divmod(den, h).second;
    std::vector<PolyQ> dpow(static_cast<size_t>(n) + 1);
    dpow[0] = PolyQ::constant(Rational(1));
    for (long i = 1; i <= n; ++i) dpow[i] = divmod(dpow[i - 1] * dr, h).second;
    PolyQ acc;
    for (long j = n; j >= 0; --j) {
        acc = divmod(acc * nr, h).second;
        acc += divmod(PolyQ::constant(h.coeff(j)) * dpow[n - j], h).second;
    }
    return divmod(acc, h).second;
}

}  // namespace

PolyQ transport_kernel(const PolyQ& h, const Transformation& t) {
    return compose_linear(h, t.u * t.u, t.r).monic();
}

bool validate_kernel(const WeierstrassModel& m, const KernelPolynomial& k) {
    if (!kernel_shape_ok(k)) return false;
    const PolyQ& h = k.h;
    if (gcd_poly(h, h.derivative()).degree() != 0) return false;
    try {
        PolyQ psi = division_polynomial(m, k.p.get_si());
        if (!divides(h, psi)) return false;
        PolyQ F = two_torsion_cubic(m);
        if (gcd_poly(h, F).degree() != 0) return false;
        long g = primitive_root(k.p).get_si();
        XMultiple xg = x_multiple(m, g);
        if (gcd_poly(h, xg.den).degree() != 0) return false;
        if (!stability_witness(h, xg.num, xg.den).is_zero()) return false;
        WeierstrassModel cod = velu(m, k);
        invariants(cod);  // nonsingular codomain
    } catch (const Error&) {
        return false;
    }
    assert(real_root_count(h) == h.degree());
    return true;
}

WeierstrassModel velu(const WeierstrassModel& m, const KernelPolynomial& k) {
    if (!kernel_shape_ok(k)) throw InvalidKernel("kernel polynomial shape");
    Invariants v = invariants(m);
    long n = k.h.degree();
    Rational s1 = -k.h.coeff(n - 1);
    Rational s2 = n >= 2 ? k.h.coeff(n - 2) : Rational(0);
    Rational s3 = n >= 3 ? -k.h.coeff(n - 3) : Rational(0);
    Rational p1 = s1;
    Rational p2 = s1 * s1 - 2 * s2;
    Rational p3 = s1 * s1 * s1 - 3 * s1 * s2 + 3 * s3;
    Rational t = 6 * p2 + v.b2 * p1 + n * v.b4;
    Rational w = 10 * p3 + 2 * v.b2 * p2 + 3 * v.b4 * p1 + n * v.b6;
    return WeierstrassModel{m.a1, m.a2, m.a3, m.a4 - 5 * t, m.a6 - v.b2 * t - 7 * w};
}

long alpha_valuation_at_p(const IsogenyData& d) {
    auto v = valuation(d.u_prime, d.kernel.p);
    assert(v.has_value());
    if (*v != 0 && *v != 1)
        throw AlphaOutOfRange("v_p(alpha) = " + std::to_string(*v) + " at p = " + d.kernel.p.get_str());
    return *v;
}

long a_ell(const WeierstrassModel& m, const Int& ell, long bound) {
    if (ell > bound) throw BoundExceeded("ell " + ell.get_str() + " exceeds bound");
    for (const Rational* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6})
        if (mpz_divisible_p(a->get_den().get_mpz_t(), ell.get_mpz_t()))
            throw BadReduction("model not integral at " + ell.get_str());
    Invariants v = invariants(m);
    auto vd = valuation(v.disc, ell);
    if (!vd || *vd != 0) throw BadReduction("singular reduction at " + ell.get_str());

    auto res = [&](const Rational& q) {
        Int num = q.get_num() % ell, den = q.get_den() % ell, inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ell.get_mpz_t());
        Int r = ((num * inv) % ell + ell) % ell;
        return r.get_ui();
    };

    long count;
    if (ell == 2) {
        long affine = 0;
        uint64_t a1 = res(m.a1), a2 = res(m.a2), a3 = res(m.a3), a4 = res(m.a4), a6 = res(m.a6);
        for (uint64_t x = 0; x < 2; ++x)
            for (uint64_t y = 0; y < 2; ++y)
                if ((y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6) % 2 == 0)
                    ++affine;
        count = affine + 1;
    } else {
        uint64_t l = ell.get_ui();
        uint64_t b2 = res(v.b2), b4r = res(2 * v.b4), b6 = res(v.b6);
        std::vector<char> issq(l, 0);
        for (uint64_t i = 0; i < l; ++i) issq[(i * i) % l] = 1;
        long sum = 0;
        for (uint64_t x = 0; x < l; ++x) {
            uint64_t fx = (((4 * x + b2) % l * x + b4r) % l * x + b6) % l;
            if (fx == 0) continue;
            sum += issq[fx] ? 1 : -1;
        }
        count = static_cast<long>(l) + 1 + sum;
        // a_ell = ell + 1 - count = -sum
    }
    long a = ell.get_si() + 1 - count;
    assert(a * a <= 4 * ell.get_si());
    return a;
}

IsogenyData build_isogeny(const WeierstrassModel& m, const KernelPolynomial& k) {
    auto [dom, t] = global_minimal_model(m);
    KernelPolynomial kmin{k.p, transport_kernel(k.h, t)};
    if (!validate_kernel(dom, kmin)) throw InvalidKernel("kernel validation failed");
    WeierstrassModel raw = velu(dom, kmin);
    auto [cod, t2] = global_minimal_model(raw);
    return IsogenyData{dom, kmin, raw, cod, t2.u};
}

}  // namespace isoparity
