#pragma once

#include <optional>
#include <vector>

#include "hwp/cycles.hpp"
#include "hwp/params.hpp"
#include "hwp/sign_map.hpp"

namespace hwp {

// Construction byproducts kept for reporting and tests.
struct Provenance {
    SignMap f;    // from the long-cycle set, on D u -D
    SignMap phi;  // from the short-cycle lift
    SignMap F;    // glued total map on Z_M^-
    SignMap G;    // Lemma-level companion with sum -1 (mod ell)
    int mu = 0;   // selected lift index of B_{2k}
    int s = 0;    // target alternating sum handed to the lift
    int t = 0;    // flip-set size used to build G
    std::vector<int> X;  // the flipped subset of Dbar
};

struct BaseCycleSet {
    Params params;
    std::vector<LiftedCycle> shorts;  // n transversal short cycles
    std::vector<LiftedCycle> longs;   // (ell-1)/2 transversal long cycles
    std::optional<Provenance> provenance;
};

// F(x) = f(x) on D u -D and phi(x) elsewhere on Z_M^-.  Throws
// DomainOverlap/DomainGap when the two domains do not partition Z_M^-.
SignMap glue_F(const SignMap& f, const SignMap& phi, const Params& p);

struct GResult {
    SignMap G;
    int t = 0;
    std::vector<int> X;
};

// A map G with sum_G = rho (mod ell), |G| swapped relative to |F|, and odd
// symmetry.  Requires sum_F = 0 (mod ell).
GResult build_G(const SignMap& F, int rho, const Params& p);

struct CompletionCycles {
    LiftedCycle C;
    LiftedCycle Cprime;
};

// The two remaining transversal long cycles covering Z_M^* x {0}, the four
// corner columns, and for each i in Z_M^- the three values {+-1,+-2} \ {F(i)}.
CompletionCycles build_completion_cycles(const Params& p, const SignMap& F,
                                         const SignMap& G);

// End-to-end construction of the full base cycle set for valid Params.
BaseCycleSet assemble(const Params& p);

}  // namespace hwp
