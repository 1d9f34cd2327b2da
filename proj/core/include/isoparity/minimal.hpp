#ifndef ISOPARITY_MINIMAL_HPP
#define ISOPARITY_MINIMAL_HPP

#include <utility>

#include "isoparity/weierstrass.hpp"

namespace isoparity {

// Laska-Kraus-Connell: globally minimal integral model and the transformation
// carrying m to it. Idempotent; identity transformation on minimal inputs.
std::pair<WeierstrassModel, Transformation> global_minimal_model(const WeierstrassModel& m);

// True iff an integral model minimal at q admits no further q-scaling, i.e.
// no u with v_q(u) > 0 keeps (u^-4 c4, u^-6 c6) integral and realizable.
bool is_minimal_at(const WeierstrassModel& m, const Int& q);

}  // namespace isoparity

#endif
