#ifndef ISOPARITY_CASES_HPP
#define ISOPARITY_CASES_HPP

#include <string>
#include <vector>

#include "isoparity/numbers.hpp"

namespace isoparity {

// Abstract local-field state for the symbolic case engine: everything the
// sign laws depend on. vdisc/vdisc_dual are minimal-discriminant valuations
// in {2,3,4,6,8,9,10} (0 once good reduction is reached); q24 is the residue
// field size mod 24; sigma_sign is carried through base changes by its
// transformation law rather than recomputed.
struct CaseState {
    Int p;
    bool f_odd;
    long q24;
    long vdisc;
    long vdisc_dual;
    int sigma_sign;

    friend bool operator==(const CaseState& a, const CaseState& b) = default;
};

// (-1)^floor(vdisc * q / 12) for q = #F, which only depends on q mod 24.
// InvalidResidue if vdisc is not an additive valuation or q24 is not a unit
// mod 24.
int rn_potentially_good(long vdisc, long q24);

// (-1)^(f (p-1) / e); EDoesNotDivide unless e | p-1.
int jnt_symbol(const Int& p, long f, long e);

// Unramified-degree-f_ext, ramification-e base change: valuations scale by e
// mod 12, sigma picks up (-1)^(b + b') with b = floor(e*vdisc/12), the
// residue field size is raised to the f_ext power. f_ext must be odd
// (WrongResidue).
CaseState base_change(const CaseState& s, long e, long f_ext);

// Minimal-discriminant shift of the nontrivial quadratic twist.
long twist_shift(long vdisc);

// The codomain valuation paired with vdisc: the unique admissible value
// congruent to p * vdisc mod 12.
long disc_partner(const Int& p, long vdisc);

// sigma of a type III/III* rational-kernel isogeny at p = 4k + 3: (-1)^k.
// WrongResidue unless p = 3 mod 4.
int sigma_type_III(const Int& p);

struct GridReport {
    long cases_checked = 0;
    std::vector<std::string> counterexamples;  // ordered by (p, vdisc, q24)
};

// Exhaustive consistency sweep over all primes 3 < p <= p_max and admissible
// (f parity, q24, vdisc): floor-parity identities, the cubic-base-change
// sign chain, composition/involution laws of the operations, and the type
// III/III* sign law against the root-number formula.
GridReport grid_verify(long p_max);

}  // namespace isoparity

#endif
