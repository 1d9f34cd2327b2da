#include "isoparity/parity.hpp"

#include <algorithm>
#include <cassert>

#include "isoparity/errors.hpp"
#include "isoparity/twist.hpp"

namespace isoparity {

namespace {

long vp(const Int& n, const Int& p) {
    auto v = valuation(n, p);
    assert(v.has_value());
    return *v;
}

}  // namespace

std::optional<int> root_number(const LocalData& d, const Int& ell) {
    if (!supports_root_number(d, ell)) return std::nullopt;
    switch (d.cls) {
        case ReductionClass::Good:
        case ReductionClass::MultiplicativeNonsplit:
            return 1;
        case ReductionClass::MultiplicativeSplit:
            return -1;
        case ReductionClass::AdditivePotentiallyMultiplicative:
            return legendre(Int(-1), ell) == 1 ? 1 : -1;
        case ReductionClass::AdditivePotentiallyGood: {
            Int e = Int(d.vdisc_min) * ell / 12;
            return mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
        }
    }
    return std::nullopt;
}

int root_number_infinite() { return -1; }

int sigma_place(const IsogenyData& iso, const LocalData& d_dom, const LocalData& d_cod,
                const Int& ell) {
    const Int& p = iso.kernel.p;
    long e = vp(d_cod.c, p) - vp(d_dom.c, p);
    if (ell == p) e += alpha_valuation_at_p(iso);
    return e % 2 == 0 ? 1 : -1;
}

int sigma_infinite(const IsogenyData& iso) {
    return kernel_is_real(iso.domain, iso.kernel) ? -1 : 1;
}

PlaceVerdict verify_place(const IsogenyData& iso, const CharacterData& chi, const Int& ell) {
    LocalData dd = tate_algorithm(iso.domain, ell);
    LocalData dc = tate_algorithm(iso.codomain_min, ell);
    PlaceVerdict v;
    v.place = ell;
    v.w = root_number(dd, ell);
    v.symbol = local_symbol(chi, ell);
    v.sigma = sigma_place(iso, dd, dc, ell);
    if (v.w) v.holds = *v.w == v.symbol * v.sigma;
    return v;
}

PlaceVerdict verify_place_infinite(const IsogenyData& iso, const CharacterData& chi) {
    PlaceVerdict v;
    v.infinite = true;
    v.w = root_number_infinite();
    v.symbol = infinite_symbol(chi);
    v.sigma = sigma_infinite(iso);
    v.holds = *v.w == v.symbol * v.sigma;
    return v;
}

std::vector<Int> bad_primes(const IsogenyData& iso) {
    std::vector<Int> out;
    for (const WeierstrassModel* m : {&iso.domain, &iso.codomain_min}) {
        Invariants v = invariants(*m);
        assert(v.disc.get_den() == 1);
        Int n = abs(v.disc.get_num());
        for (const auto& [q, e] : factorize(n))
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GlobalReport verify_global_report(const IsogenyData& iso, const CharacterData& chi,
                                  const std::vector<Int>& good_sample) {
    std::vector<Int> places = bad_primes(iso);
    auto add = [&](const Int& q) {
        if (std::find(places.begin(), places.end(), q) == places.end()) places.push_back(q);
    };
    add(iso.kernel.p);
    for (const Int& q : good_sample) add(q);
    std::sort(places.begin(), places.end());

    GlobalReport rep;
    bool supported = true;
    int wprod = 1;
    for (const Int& ell : places) {
        PlaceVerdict v = verify_place(iso, chi, ell);
        if (v.w)
            wprod *= *v.w;
        else
            supported = false;
        rep.sigma_product *= v.sigma;
        rep.symbol_product *= v.symbol;
        rep.places.push_back(std::move(v));
    }
    PlaceVerdict vi = verify_place_infinite(iso, chi);
    wprod *= *vi.w;
    rep.sigma_product *= vi.sigma;
    rep.symbol_product *= vi.symbol;
    rep.places.push_back(std::move(vi));

    if (supported) {
        rep.w_global = wprod;
        rep.global_holds = wprod == rep.sigma_product;
    }
    return rep;
}

GlobalReport verify_global(const IsogenyData& iso, const CharacterData& chi,
                           const std::vector<Int>& good_sample) {
    GlobalReport rep = verify_global_report(iso, chi, good_sample);
    if (!rep.w_global)
        throw GlobalUnsupported("root number unsupported at an additive place over 2 or 3");
    return rep;
}

TwistReport twist_report(const IsogenyData& iso, const CharacterData& chi, const Int& d,
                         long frobenius_bound, const std::vector<Int>& good_sample) {
    ShortModel s = short_model(iso.domain);
    WeierstrassModel shortm = short_to_model(s.A, s.B);
    WeierstrassModel tw = quadratic_twist(iso.domain, d);
    Int d6;
    mpz_pow_ui(d6.get_mpz_t(), d.get_mpz_t(), 6);
    bool delta_ok = invariants(tw).disc == Rational(d6) * invariants(shortm).disc;

    PolyQ hs = kernel_to_short(iso.kernel.h, iso.domain);
    PolyQ ht = twist_kernel(hs, d);
    IsogenyData iso2 = build_isogeny(tw, KernelPolynomial{iso.kernel.p, ht});
    CharacterStudy st2 = study_character(iso2.domain, iso2.kernel, bad_primes(iso2),
                                         frobenius_bound);

    Int D = fundamental_discriminant(d);
    Int L, absD = abs(D);
    mpz_lcm(L.get_mpz_t(), chi.modulus.get_mpz_t(), st2.chi.modulus.get_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), absD.get_mpz_t());
    Int pm1 = chi.p - 1;
    bool chi_ok = true;
    for (const UnitGen& gen : unit_group_generators(L)) {
        Int tau_exp = kronecker(D, gen.residue) == 1 ? Int(0) : pm1 / 2;
        Int lhs = evaluate_exponent(st2.chi, gen.residue);
        Int rhs = (evaluate_exponent(chi, gen.residue) + tau_exp) % pm1;
        if (lhs != rhs) {
            chi_ok = false;
            break;
        }
    }

    TwistReport tr{d, delta_ok, chi_ok, verify_global_report(iso2, st2.chi, good_sample)};
    return tr;
}

}  // namespace isoparity
