#pragma once

#include <vector>

namespace hwp {

enum class SkolemFlavor { Ordinary, Hooked };

// (s_1, ..., s_n) such that the union of {s_i, s_i + i} is [1, 2n]
// (ordinary) or [1, 2n+1] \ {2n} (hooked), all values distinct.
struct SkolemSeq {
    int order = 0;
    std::vector<int> entries;  // 1-indexed in the math; entries[i-1] = s_i
    SkolemFlavor flavor = SkolemFlavor::Ordinary;
};

SkolemFlavor skolem_flavor_for(int order);

// Deterministic generator; succeeds for every order >= 1.
SkolemSeq generate_skolem(int order);

bool validate_skolem(const SkolemSeq& seq);

}  // namespace hwp
