#include "isoparity/character.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <random>

#include "isoparity/errors.hpp"
#include "isoparity/polyf.hpp"
#include "isoparity/sturm.hpp"

namespace isoparity {

namespace {

// Joint discrete log in a small unit group: exponents x with
// prod gens[i].residue^x[i] = target (mod q_pow). Orders here are tiny, so an
// odometer scan over all combinations is exact and fast enough.
std::vector<Int> component_dl(const std::vector<UnitGen>& gens, const Int& q_pow,
                              const Int& target) {
    Int t = ((target % q_pow) + q_pow) % q_pow;
    size_t k = gens.size();
    if (k == 0) {
        if (t != 1) throw Error("component_dl: nontrivial target in trivial group");
        return {};
    }
    std::vector<std::vector<Int>> pows(k);
    for (size_t i = 0; i < k; ++i) {
        long o = gens[i].order.get_si();
        Int acc = 1;
        for (long j = 0; j < o; ++j) {
            pows[i].push_back(acc);
            acc = acc * gens[i].residue % q_pow;
        }
    }
    std::vector<long> idx(k, 0);
    for (;;) {
        Int prod = 1;
        for (size_t i = 0; i < k; ++i) prod = prod * pows[i][idx[i]] % q_pow;
        if (prod == t) return std::vector<Int>(idx.begin(), idx.end());
        size_t i = 0;
        while (i < k) {
            if (++idx[i] < gens[i].order.get_si()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == k) throw Error("component_dl: target outside the group");
    }
}

struct CompGroup {
    Int q;
    Int q_pow;
    std::vector<UnitGen> local;     // residues reduced mod q_pow
    std::vector<size_t> gidx;       // positions in the global generator list
};

std::vector<CompGroup> group_by_prime(const std::vector<UnitGen>& gens) {
    std::vector<CompGroup> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        CompGroup* grp = nullptr;
        for (auto& c : out)
            if (c.q == gens[i].prime) grp = &c;
        if (!grp) {
            out.push_back({gens[i].prime, gens[i].prime_power, {}, {}});
            grp = &out.back();
        }
        UnitGen local = gens[i];
        local.residue %= local.prime_power;
        grp->local.push_back(local);
        grp->gidx.push_back(i);
    }
    return out;
}

// Exponent vector of n across all global generators.
std::vector<Int> global_dl(const std::vector<CompGroup>& groups, size_t ngens, const Int& n) {
    std::vector<Int> x(ngens, Int(0));
    for (const auto& grp : groups) {
        std::vector<Int> local = component_dl(grp.local, grp.q_pow, n % grp.q_pow);
        for (size_t i = 0; i < local.size(); ++i) x[grp.gidx[i]] = local[i];
    }
    return x;
}

Int dl_mod_p(const Int& g, const Int& lambda, const Int& p) {
    Int acc = 1;
    Int lam = ((lambda % p) + p) % p;
    for (Int e = 0; e < p - 1; ++e) {
        if (acc == lam) return e;
        acc = acc * g % p;
    }
    throw Error("dl_mod_p: not a unit");
}

int coerce_sign(const Int& exponent, const Int& pm1) {
    if (exponent == 0) return 1;
    if (2 * exponent == pm1) return -1;
    throw Error("character value at -1 has order > 2");
}

Int component_exponent(const CharacterComponent& comp, const Int& n, const Int& pm1) {
    std::vector<Int> x = component_dl(comp.gens, comp.q_pow, n % comp.q_pow);
    Int e = 0;
    for (size_t i = 0; i < x.size(); ++i) e += x[i] * comp.exps[i];
    return ((e % pm1) + pm1) % pm1;
}

}  // namespace

Int character_modulus_bound(const Int& p, const std::vector<Int>& bad_primes) {
    Int M = p;
    std::vector<Int> seen;
    for (const Int& q : bad_primes) {
        if (q == p || std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
        seen.push_back(q);
        long e = 1 + *valuation(Int(p - 1), q) + (q == 2 ? 1 : 0);
        for (long i = 0; i < e; ++i) M *= q;
    }
    return M;
}

Int frobenius_eigenvalue(const WeierstrassModel& m, const KernelPolynomial& k, const Int& ell) {
    if (ell == 2 || ell == k.p || !is_prime(ell))
        throw BadReduction("sampling prime must be odd, good, and distinct from p");
    long trace = a_ell(m, ell);  // also rejects bad reduction
    uint64_t l = ell.get_ui();
    auto hbar_opt = reduce_mod(k.h, l);
    assert(hbar_opt);  // kernel x-coordinates are integral at good odd ell
    PolyF hbar = hbar_opt->monic();
    assert(hbar.degree() == k.h.degree());
    auto pattern = factor_degree_pattern(hbar);
    long d = pattern.front().first;
    for (const auto& [deg, mult] : pattern)
        if (deg != d) throw MixedDegrees("kernel factors unevenly mod " + ell.get_str());
    std::mt19937_64 rng(0x150BA217ull ^ (l * 0x9E3779B97F4A7C15ull));
    PolyF g = d == hbar.degree() ? hbar : irreducible_factor(hbar, d, rng);
    auto fbar_opt = reduce_mod(two_torsion_cubic(m), l);
    assert(fbar_opt);
    PolyF fred = divmod(*fbar_opt, g).second;
    bool y_in_base = is_square_in_extension(fred, g);
    long order = y_in_base ? d : 2 * d;

    Int p = k.p;
    Int t = ((Int(trace) % p) + p) % p;
    std::vector<Int> hits;
    for (Int lam = 1; lam < p; ++lam) {
        // exact multiplicative order of lam mod p
        Int acc = lam;
        long o = 1;
        while (acc != 1) {
            acc = acc * lam % p;
            ++o;
        }
        if (o != order) continue;
        Int inv;
        mpz_invert(inv.get_mpz_t(), lam.get_mpz_t(), p.get_mpz_t());
        if ((lam + ell * inv) % p == t) hits.push_back(lam);
    }
    if (hits.empty()) throw NoMatch("no eigenvalue candidate at ell = " + ell.get_str());
    if (hits.size() > 1) throw Ambiguous("two eigenvalue candidates at ell = " + ell.get_str());
    return hits.front();
}

CharacterData reconstruct_character(const std::vector<FrobeniusSample>& samples, const Int& p,
                                    const std::vector<Int>& bad_primes) {
    Int M = character_modulus_bound(p, bad_primes);
    Int pm1 = p - 1;
    Int g = primitive_root(p);
    std::vector<UnitGen> gens = unit_group_generators(M);
    std::vector<CompGroup> groups = group_by_prime(gens);
    size_t k = gens.size();

    std::vector<std::vector<Int>> sdl;
    std::vector<Int> sval;
    for (const auto& s : samples) {
        Int gg;
        mpz_gcd(gg.get_mpz_t(), M.get_mpz_t(), s.ell.get_mpz_t());
        assert(gg == 1);
        sdl.push_back(global_dl(groups, k, s.ell));
        sval.push_back(dl_mod_p(g, s.lambda, p));
    }

    // Candidate exponent on generator i ranges over multiples of
    // (p-1)/gcd(order_i, p-1); anything else violates chi(x)^order(x) = 1.
    std::vector<std::vector<Int>> choices(k);
    for (size_t i = 0; i < k; ++i) {
        Int gc;
        mpz_gcd(gc.get_mpz_t(), gens[i].order.get_mpz_t(), pm1.get_mpz_t());
        Int step = pm1 / gc;
        for (Int c = 0; c < pm1; c += step) choices[i].push_back(c);
    }

    std::vector<std::vector<Int>> survivors;
    std::vector<size_t> idx(k, 0);
    for (;;) {
        bool ok = true;
        for (size_t s = 0; s < samples.size() && ok; ++s) {
            Int e = 0;
            for (size_t i = 0; i < k; ++i) e += sdl[s][i] * choices[i][idx[i]];
            ok = ((e % pm1) + pm1) % pm1 == sval[s];
        }
        if (ok) {
            std::vector<Int> c(k);
            for (size_t i = 0; i < k; ++i) c[i] = choices[i][idx[i]];
            survivors.push_back(c);
            if (survivors.size() > 1) break;
        }
        size_t i = 0;
        while (i < k) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == k) break;
        if (k == 0) break;
    }
    if (survivors.empty()) throw NoMatch("no character matches the samples");
    if (survivors.size() > 1) throw Underdetermined("samples do not yet pin the character");

    CharacterData chi{p, M, g, {}};
    const std::vector<Int>& c = survivors.front();
    for (const auto& grp : groups) {
        CharacterComponent comp{grp.q, grp.q_pow, grp.local, {}};
        for (size_t i : grp.gidx) comp.exps.push_back(c[i]);
        chi.components.push_back(comp);
    }
    return chi;
}

Int evaluate_exponent(const CharacterData& chi, const Int& n) {
    Int gg;
    mpz_gcd(gg.get_mpz_t(), chi.modulus.get_mpz_t(), n.get_mpz_t());
    assert(gg == 1);
    Int pm1 = chi.p - 1;
    Int e = 0;
    for (const auto& comp : chi.components) e += component_exponent(comp, n, pm1);
    return ((e % pm1) + pm1) % pm1;
}

Int evaluate(const CharacterData& chi, const Int& n) {
    return modpow(chi.g, evaluate_exponent(chi, n), chi.p);
}

Int character_order(const CharacterData& chi) {
    Int pm1 = chi.p - 1;
    Int ord = 1;
    for (const auto& comp : chi.components)
        for (const Int& e : comp.exps) {
            Int gc;
            mpz_gcd(gc.get_mpz_t(), e.get_mpz_t(), pm1.get_mpz_t());
            Int component_order = pm1 / gc;
            mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), component_order.get_mpz_t());
        }
    return ord;
}

int local_symbol(const CharacterData& chi, const Int& q) {
    Int pm1 = chi.p - 1;
    for (const auto& comp : chi.components)
        if (comp.q == q) return coerce_sign(component_exponent(comp, comp.q_pow - 1, pm1), pm1);
    return 1;
}

int infinite_symbol(const CharacterData& chi) {
    return coerce_sign(evaluate_exponent(chi, chi.modulus - 1), chi.p - 1);
}

Int ramification_index_at_p(const CharacterData& chi) {
    Int pm1 = chi.p - 1;
    for (const auto& comp : chi.components)
        if (comp.q == chi.p) {
            Int ord = 1;
            for (const Int& e : comp.exps) {
                Int gc;
                mpz_gcd(gc.get_mpz_t(), e.get_mpz_t(), pm1.get_mpz_t());
                Int component_order = pm1 / gc;
                mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), component_order.get_mpz_t());
            }
            return ord;
        }
    throw Error("character modulus omits p");
}

bool kernel_is_real(const WeierstrassModel& m, const KernelPolynomial& k) {
    ShortModel s = short_model(m);
    PolyQ hs = transport_kernel(k.h, s.to_short);
    PolyQ f({s.B, s.A, Rational(0), Rational(1)});
    auto ivs = real_root_isolate(hs);
    assert(static_cast<long>(ivs.size()) == hs.degree());
    for (const auto& iv : ivs)
        if (sign_at_root(f, hs, iv) >= 0) return true;
    return false;
}

CharacterStudy study_character(const WeierstrassModel& m, const KernelPolynomial& k,
                               const std::vector<Int>& bad_primes, long frobenius_bound) {
    Int M = character_modulus_bound(k.p, bad_primes);
    std::vector<FrobeniusSample> samples;
    std::optional<CharacterData> found;
    Int ell(2);
    while (!found) {
        ell = next_prime(ell);
        if (ell > frobenius_bound) throw Underdetermined("frobenius bound exhausted");
        if (mpz_divisible_p(M.get_mpz_t(), ell.get_mpz_t())) continue;
        Int lam;
        try {
            lam = frobenius_eigenvalue(m, k, ell);
        } catch (const Ambiguous&) {
            continue;
        }
        samples.push_back({ell, lam});
        try {
            found = reconstruct_character(samples, k.p, bad_primes);
        } catch (const Underdetermined&) {
        }
    }
    for (;;) {
        ell = next_prime(ell);
        if (ell > frobenius_bound) throw Underdetermined("no holdout prime below the bound");
        if (mpz_divisible_p(M.get_mpz_t(), ell.get_mpz_t())) continue;
        try {
            Int lam = frobenius_eigenvalue(m, k, ell);
            return {*found, samples, {ell, lam}};
        } catch (const Ambiguous&) {
        }
    }
}

}  // namespace isoparity
