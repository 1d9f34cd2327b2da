#ifndef ISOPARITY_CHARACTER_HPP
#define ISOPARITY_CHARACTER_HPP

#include <vector>

#include "isoparity/isogeny.hpp"
#include "isoparity/numbers.hpp"
#include "isoparity/unitgroup.hpp"

namespace isoparity {

// One Frobenius observation: the kernel eigenvalue at a good prime ell.
struct FrobeniusSample {
    Int ell;
    Int lambda;  // in [1, p-1], satisfies lambda + ell/lambda = a_ell mod p
};

// Restriction of the kernel character to the units mod q_pow, q prime.
// Values are exponents of the fixed primitive root g mod p: the character
// sends gens[i] to g^exps[i].
struct CharacterComponent {
    Int q;
    Int q_pow;
    std::vector<UnitGen> gens;  // residues reduced mod q_pow
    std::vector<Int> exps;      // mod p-1, aligned with gens
};

// Dirichlet realization of the kernel character: a character mod `modulus`
// of order dividing p-1, stored as one component per prime q | modulus.
struct CharacterData {
    Int p;
    Int modulus;
    Int g;  // smallest primitive root mod p; value group is <g> = F_p^x
    std::vector<CharacterComponent> components;
};

// Modulus bound p * prod_{q in bad} q^(1 + v_q(p-1) + [q = 2]); the q = p
// factor is never squared (the character is tame at p).
Int character_modulus_bound(const Int& p, const std::vector<Int>& bad_primes);

// lambda = eigenvalue of Frob_ell on the kernel, as a residue mod p.
// Decides the order of lambda from the factorization degree of h mod ell and
// a squareness test on the 2-torsion cubic in the residue extension, then
// matches lambda + ell/lambda = a_ell mod p. ell must be an odd prime of good
// reduction, ell != p. Throws MixedDegrees (invalid kernel), Ambiguous (two
// survivors; use another ell), NoMatch (none), BadReduction.
Int frobenius_eigenvalue(const WeierstrassModel& m, const KernelPolynomial& k, const Int& ell);

// The unique character mod character_modulus_bound(...) of order dividing p-1
// matching every sample; NoMatch if none fits, Underdetermined if more than
// one does (supply more samples).
CharacterData reconstruct_character(const std::vector<FrobeniusSample>& samples, const Int& p,
                                    const std::vector<Int>& bad_primes);

// Exponent e with chi(n) = g^e, e mod p-1; n must be coprime to the modulus.
Int evaluate_exponent(const CharacterData& chi, const Int& n);

// chi(n) as a residue mod p.
Int evaluate(const CharacterData& chi, const Int& n);

// Order of chi as a character; divides p-1.
Int character_order(const CharacterData& chi);

// Value of the q-component at -1, coerced to +-1; +1 when chi is unramified
// at q (including q absent from the modulus).
int local_symbol(const CharacterData& chi, const Int& q);

// chi(-1) coerced to +-1.
int infinite_symbol(const CharacterData& chi);

// Order of the p-component; the ramification index of the character field
// at p. Divides p-1.
Int ramification_index_at_p(const CharacterData& chi);

// True iff the kernel points are real: some (equivalently every) root x0 of
// the kernel polynomial has nonnegative cubic value on the short model.
bool kernel_is_real(const WeierstrassModel& m, const KernelPolynomial& k);

// Sampling policy bundled: ascending odd primes coprime to the modulus bound,
// skipping Ambiguous ones, until the character is uniquely determined; the
// next usable prime is held out for independent validation.
struct CharacterStudy {
    CharacterData chi;
    std::vector<FrobeniusSample> samples;
    FrobeniusSample holdout;
};
CharacterStudy study_character(const WeierstrassModel& m, const KernelPolynomial& k,
                               const std::vector<Int>& bad_primes, long frobenius_bound = 10000);

}  // namespace isoparity

#endif
