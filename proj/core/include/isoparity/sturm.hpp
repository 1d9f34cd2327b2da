#ifndef ISOPARITY_STURM_HPP
#define ISOPARITY_STURM_HPP

#include <utility>
#include <vector>

#include "isoparity/polyq.hpp"

namespace isoparity {

// Closed rational interval; lo == hi encodes an exact rational root.
using RootInterval = std::pair<Rational, Rational>;

// Exact count of distinct real roots of a squarefree f (Sturm).
long real_root_count(const PolyQ& f);

// Pairwise-disjoint isolating intervals, one real root each, ascending.
// Endpoints of non-degenerate intervals are not roots of f.
std::vector<RootInterval> real_root_isolate(const PolyQ& f);

// Exact sign of g at the unique root of f inside iv (an interval produced by
// real_root_isolate(f)); requires that root not be a root of g.
int sign_at_root(const PolyQ& g, const PolyQ& f, RootInterval iv);

}  // namespace isoparity

#endif
