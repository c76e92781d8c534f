#pragma once

#include <utility>
#include <vector>

#include "hwp/cycles.hpp"
#include "hwp/params.hpp"

namespace hwp {

// Dense multiset of differences over Z_M x Z_ell, one counter per element.
class DiffMultiset {
public:
    explicit DiffMultiset(const Params& p)
        : M_(p.M), ell_(p.ell), counts_(static_cast<std::size_t>(p.M) * p.ell, 0) {}

    void add(long long a, long long b) { ++counts_[index(a, b)]; }
    int count(long long a, long long b) const { return counts_[index(a, b)]; }

    // Adds +(u - u') and -(u - u') for every cyclic edge of the cycle.
    void add_cycle(const LiftedCycle& c);

    // count(a, b) == count(-a, -b) for every element.
    bool negation_symmetric() const;

    long long total() const;

    int M() const { return M_; }
    int ell() const { return ell_; }

private:
    std::size_t index(long long a, long long b) const {
        return static_cast<std::size_t>(mod(a, M_)) * ell_ + mod(b, ell_);
    }

    int M_;
    int ell_;
    std::vector<int> counts_;
};

// The multiset of all differences of one cycle (2 per edge).
DiffMultiset differences(const LiftedCycle& c, const Params& p);

}  // namespace hwp
