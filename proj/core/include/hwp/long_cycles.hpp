#pragma once

#include <utility>
#include <vector>

#include "hwp/cycles.hpp"
#include "hwp/params.hpp"
#include "hwp/sign_map.hpp"

namespace hwp {

struct LongPairSpec {
    int d1 = 0, d2 = 0;
    int t = 0;
    int x = 0, y = 0;
};

// A (2t+1)-cycle on raw integer pairs whose first components are exactly
// [0, 2t] and whose differences are +-([1,|I|] x {y}) u +-(J x {x}) u
// {+-(d, x-y)} with I, J the half-intervals split at t (t odd) or t+1
// (t even).  Requires d in [1, t-1] \ {ceil(t/2)} with d = t (mod 2).
RawCycle build_cd_cycle(int d, int t, int x, int y);

// The pair (C1, C2) = (build_cd_cycle(d1, t, x, y), build_cd_cycle(d2, t, y, x)),
// whose combined differences are +-([1, 2t] x {x, y}) u {+-(d1, x-y), +-(d2, y-x)}.
std::pair<RawCycle, RawCycle> build_pair(const LongPairSpec& spec);

struct LongSet {
    std::vector<LiftedCycle> cycles;  // (ell-5)/2 transversal long cycles
    SignMap f;                        // on D u -D, values in {+-1}
};

// The set L of Proposition-level long cycles: differences cover
// Z_M^* x (Z_ell \ {0, +-1, +-2}) plus {(d, f(d)) : d in D u -D}.
LongSet build_long_set(const Params& p);

}  // namespace hwp
