#ifndef ISOPARITY_LOCALDATA_HPP
#define ISOPARITY_LOCALDATA_HPP

#include <string>

#include "isoparity/weierstrass.hpp"

namespace isoparity {

struct KodairaType {
    enum Tag { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };
    Tag tag = I0;
    long n = 0;  // meaningful for In / Instar

    std::string to_string() const;
    friend bool operator==(const KodairaType& a, const KodairaType& b) = default;
};

enum class ReductionClass {
    Good,
    MultiplicativeSplit,
    MultiplicativeNonsplit,
    AdditivePotentiallyMultiplicative,
    AdditivePotentiallyGood,
};

std::string to_string(ReductionClass c);

struct LocalData {
    Int ell;
    long vdisc_min = 0;      // v_ell of the minimal discriminant
    KodairaType kodaira;
    Int c;                   // Tamagawa number [E(Q_ell) : E0(Q_ell)]
    ReductionClass cls = ReductionClass::Good;
};

// Tate's algorithm at ell, in full generality (ell = 2, 3 included).
// Requires ell-integral a-invariants (NonIntegralModel otherwise); handles
// ell-non-minimal input by rescaling internally.
LocalData tate_algorithm(const WeierstrassModel& m, const Int& ell);

ReductionClass reduction_class(const WeierstrassModel& m, const Int& ell);

// True iff the root-number classification covers (ell, class): always for
// good or multiplicative reduction; additive potentially multiplicative needs
// ell > 2; additive potentially good needs ell > 3.
bool supports_root_number(const LocalData& d, const Int& ell);

namespace detail {
// Split/nonsplit via the tangent directions at the node, valid at every ell;
// requires multiplicative reduction.
bool split_by_tangent_cone(const WeierstrassModel& m, const Int& ell);
}  // namespace detail

}  // namespace isoparity

#endif
