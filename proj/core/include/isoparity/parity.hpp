#ifndef ISOPARITY_PARITY_HPP
#define ISOPARITY_PARITY_HPP

#include <optional>
#include <vector>

#include "isoparity/character.hpp"
#include "isoparity/isogeny.hpp"
#include "isoparity/localdata.hpp"

namespace isoparity {

// One place's worth of the verification: the local root number w (absent when
// the place is outside the supported table), the local Artin symbol, the
// isogeny sign sigma, and whether w = symbol * sigma. holds is absent exactly
// when w is.
struct PlaceVerdict {
    bool infinite = false;
    Int place = 0;  // ignored when infinite
    std::optional<int> w;
    int symbol = 1;
    int sigma = 1;
    std::optional<bool> holds;
};

struct GlobalReport {
    std::vector<PlaceVerdict> places;  // finite places ascending, then infinity
    std::optional<int> w_global;       // product of w; absent if any w absent
    int sigma_product = 1;
    int symbol_product = 1;
    std::optional<bool> global_holds;
};

// Local root number from reduction data: +1 for good or nonsplit
// multiplicative, -1 for split multiplicative, the quadratic residue of -1
// for additive potentially multiplicative (ell > 2), and
// (-1)^floor(v(disc) * ell / 12) for additive potentially good (ell > 3).
// nullopt for the unsupported additive cases at 2 and 3.
std::optional<int> root_number(const LocalData& d, const Int& ell);

// The archimedean root number over Q.
int root_number_infinite();

// sigma at a finite place: parity of ord_p(c'/c), plus v_p(alpha) when
// ell = p.
int sigma_place(const IsogenyData& iso, const LocalData& d_dom, const LocalData& d_cod,
                const Int& ell);

// sigma at infinity: -1 iff the kernel is real (the real isogeny has kernel
// of size p rather than 1).
int sigma_infinite(const IsogenyData& iso);

PlaceVerdict verify_place(const IsogenyData& iso, const CharacterData& chi, const Int& ell);
PlaceVerdict verify_place_infinite(const IsogenyData& iso, const CharacterData& chi);

// Verdicts at every prime dividing either minimal discriminant, at p, at the
// supplied good sample primes, and at infinity. Never throws on unsupported
// root numbers: w_global and global_holds are simply absent.
GlobalReport verify_global_report(const IsogenyData& iso, const CharacterData& chi,
                                  const std::vector<Int>& good_sample = {});

// As verify_global_report, but demands full support: GlobalUnsupported when
// some needed w is outside the table.
GlobalReport verify_global(const IsogenyData& iso, const CharacterData& chi,
                           const std::vector<Int>& good_sample = {});

// Quadratic-twist coherence: twists the pair by d, re-runs the whole
// pipeline, checks the discriminant law and the character twist law, and
// reports the twisted pair's verification.
struct TwistReport {
    Int d;
    bool delta_matches;      // disc(twisted short model) = d^6 * disc(short model)
    bool character_matches;  // twisted character = original * quadratic character of d
    GlobalReport twisted;
};
TwistReport twist_report(const IsogenyData& iso, const CharacterData& chi, const Int& d,
                         long frobenius_bound = 10000, const std::vector<Int>& good_sample = {});

// Prime support of the minimal discriminants of both curves (equal sets for
// isogenous curves; the union is taken defensively).
std::vector<Int> bad_primes(const IsogenyData& iso);

}  // namespace isoparity

#endif
