#pragma once

#include "comb/family.hpp"
#include "comb/stream_comb.hpp"

namespace comb {

// (delay X)_0 = I, (delay X)_{n+1} = X_n.
ObjectFamily delay_family(const ObjectFamily& x);

// delay f : delay X -> delay Y; stage 0 is the identity on the unit and
// stage n+1 is f_n, with (delay M)_{n+1} = M_n.
StreamComb delay_comb(const StreamComb& f);

// Feedback over the carrier X: turns f : delay X (x) A -> X (x) B into a
// comb A -> B whose memory at stage n is M_n (x) X_n, so the X_n emitted at
// stage n arrives in the (delay X)_{n+1} slot of stage n+1.
StreamComb feedback(const ObjectFamily& carrier, const ObjectFamily& passenger_in,
                    const ObjectFamily& passenger_out, const StreamComb& f);
// As above with A and B recovered by splitting the carrier off f's families.
StreamComb feedback(const ObjectFamily& carrier, const StreamComb& f);

}  // namespace comb
