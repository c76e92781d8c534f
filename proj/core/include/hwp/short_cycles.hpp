#pragma once

#include <utility>
#include <vector>

#include "hwp/cycles.hpp"
#include "hwp/params.hpp"
#include "hwp/sign_map.hpp"
#include "hwp/skolem.hpp"

namespace hwp {

// The 2k-2 reserved differences and their complement in [2, ell*n - 1].
struct DSet {
    std::vector<std::pair<int, int>> pairs;  // (d_i1, d_i2) for i = 1..k-1
    std::vector<int> d_values;               // flattened, sorted
    std::vector<int> dbar;                   // [2, ell*n - 1] minus d_values
};

DSet build_D(const Params& p);

// A 4k-cycle built from alternating partial sums, plus its delta sequence.
struct Gon {
    ZCycle cycle;             // residues mod M
    std::vector<int> delta;   // delta_1..delta_4k, all in [1, ell*n]
    bool alternating = false; // Definition of the alternating property holds
};

// Builds the 4k-cycle with difference multiset +-U.  U must have ell-1
// elements in [1, ell*n] and split into pairs of consecutive integers;
// otherwise NotPairable.
Gon cycle_from_pairs(const std::vector<int>& U, const Params& p);

// The n-2k ell-cycles A_i and 2k (ell-1)-cycles B_i over Z_M whose combined
// differences cover Z_M^- minus (D u -D) exactly once.
struct BaseGons {
    std::vector<ZCycle> A;
    std::vector<ZCycle> B;
    // For i >= 2 (1-indexed), B_i is alternating with differences
    // +-[u_i, u_i + 4k - 1]; b_intervals[i-1] stores that interval
    // (the entry for B_1 stores {0, 0}).
    std::vector<std::pair<int, int>> b_intervals;
};

BaseGons build_base_gons(const Params& p, const SkolemSeq& skolem);

// Second-coordinate labeling cycles on Z_ell.
ZCycle q_cycle(const Params& p, int i);   // i in [1, 2k-1]
ZCycle p_cycle(const Params& p, int mu);  // any residue mu mod ell

// sum_{i in [interval]} (-1)^i phi(i) where (i, phi(i)) ranges over the
// differences of the lifted cycle with first component in [u, u'].
int alternating_partial_sum(const LiftedCycle& lifted, std::pair<int, int> interval,
                            const Params& p);

struct LiftResult {
    std::vector<LiftedCycle> shorts;  // n transversal short cycles
    SignMap phi;                      // defined on Z_M^- minus (D u -D)
    int mu = 0;                       // the selected lift of B_{2k}
};

// Lifts A u B to transversal short cycles of K_v such that the alternating
// sum of phi over Dbar is s_target.
LiftResult lift_all(const Params& p, const BaseGons& gons, int s_target);

}  // namespace hwp
