#ifndef ISOPARITY_ISOGENY_HPP
#define ISOPARITY_ISOGENY_HPP

#include "isoparity/divpoly.hpp"
#include "isoparity/minimal.hpp"
#include "isoparity/polyq.hpp"
#include "isoparity/weierstrass.hpp"

namespace isoparity {

// Monic polynomial in Q[x] cutting out the x-coordinates of the nontrivial
// points of a rational cyclic subgroup of prime order p >= 5.
struct KernelPolynomial {
    Int p;
    PolyQ h;  // monic, degree (p-1)/2
};

// A p-isogeny pipeline result. domain is globally minimal and the kernel is
// expressed on it; codomain_raw is the normalized Velu output; u_prime is the
// scaling of the raw->minimal codomain transformation, so the pullback of the
// minimal codomain differential is u_prime times the minimal domain
// differential.
struct IsogenyData {
    WeierstrassModel domain;
    KernelPolynomial kernel;
    WeierstrassModel codomain_raw;
    WeierstrassModel codomain_min;
    Rational u_prime;
};

// Rewrites a kernel polynomial under the model change t applied to the model
// carrying h (roots x map to (x - t.r) / t.u^2).
PolyQ transport_kernel(const PolyQ& h, const Transformation& t);

// True iff h is monic of degree (p-1)/2, squarefree, divides the p-division
// polynomial, avoids the 2-torsion cubic, and its root set is stable under
// multiplication by a primitive root mod p. Failures return false, never
// throw. On success asserts every root of h is real.
bool validate_kernel(const WeierstrassModel& m, const KernelPolynomial& k);

// Codomain of the p-isogeny with kernel h, normalized so the pullback of the
// codomain invariant differential equals the domain one. Throws InvalidKernel
// on malformed input.
WeierstrassModel velu(const WeierstrassModel& m, const KernelPolynomial& k);

// v_p(u_prime); contract: in {0,1} for a minimal-domain pipeline, enforced by
// AlphaOutOfRange.
long alpha_valuation_at_p(const IsogenyData& d);

// Trace of Frobenius at a prime of good reduction (model must be integral at
// ell with unit discriminant). Naive O(ell) count; BadReduction or
// BoundExceeded otherwise.
long a_ell(const WeierstrassModel& m, const Int& ell, long bound = 10000);

// Full pipeline: minimalize the domain, transport and validate the kernel,
// run velu, minimalize the codomain. Throws InvalidKernel if validation
// fails.
IsogenyData build_isogeny(const WeierstrassModel& m, const KernelPolynomial& k);

}  // namespace isoparity

#endif
