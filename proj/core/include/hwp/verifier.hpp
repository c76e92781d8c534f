#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hwp/completion.hpp"
#include "hwp/cycles.hpp"
#include "hwp/params.hpp"

namespace hwp {

struct CoverageReport {
    bool ok = false;
    // For check_base: uncovered / repeated nonzero differences (a, b).
    // For check_factorization: uncovered / repeated edges as packed vertex
    // pairs (z1, z2) of Z_v.
    std::vector<std::pair<int, int>> missing;
    std::vector<std::pair<int, int>> duplicated;
    std::vector<std::string> transversality_failures;
};

// Exact multiset accounting of all ell*M - 1 nonzero differences, plus
// member counts and per-cycle transversality.
CoverageReport check_base(const BaseCycleSet& base);

enum class FactorType { ShortCycles, LongCycles };  // [ell^M] vs [M^ell]

struct FactorRef {
    FactorType type = FactorType::ShortCycles;
    int base_index = 0;  // into shorts or longs
    int shift_a = 0;     // translation applied to the base cycle
    int shift_b = 0;
};

// The full orbit development.  Factors are materialized one at a time.
class Factorization {
public:
    Factorization() = default;
    Factorization(Params p, std::vector<LiftedCycle> shorts, std::vector<LiftedCycle> longs,
                  std::vector<FactorRef> refs)
        : params_(p), shorts_(std::move(shorts)), longs_(std::move(longs)),
          refs_(std::move(refs)) {}

    const Params& params() const { return params_; }
    int size() const { return static_cast<int>(refs_.size()); }
    const FactorRef& ref(int i) const { return refs_[i]; }
    std::vector<FactorRef>& refs() { return refs_; }

    // The vertex-disjoint cycles of factor i.
    std::vector<LiftedCycle> factor(int i) const;

private:
    Params params_;
    std::vector<LiftedCycle> shorts_;
    std::vector<LiftedCycle> longs_;
    std::vector<FactorRef> refs_;
};

// Expands the base set into r factors of type [ell^M] and r' of type
// [M^ell].  Throws DevelopBeforeCheck when check_base does not pass.
Factorization develop(const BaseCycleSet& base);

// Verifies every factor is a spanning 2-regular subgraph of the tagged type
// and that the factors' edge sets partition E(K_v).
CoverageReport check_factorization(const Factorization& fact, const Params& p);

}  // namespace hwp
