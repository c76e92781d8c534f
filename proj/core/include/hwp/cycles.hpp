#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hwp/params.hpp"

namespace hwp {

// Canonical residue in [0, m).
inline int mod(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Symmetric representative in [-(m-1)/2, (m-1)/2] (m odd).
inline int sym_rep(int x, int m) {
    int r = mod(x, m);
    return r > m / 2 ? r - m : r;
}

// A vertex of K_v as a pair (residue mod M, residue mod ell).
struct Vertex {
    int a = 0;
    int b = 0;
    auto operator<=>(const Vertex&) const = default;
};

// Cycle on residues mod M; read cyclically.
using ZCycle = std::vector<int>;

// Cycle on Z_M x Z_ell vertices; read cyclically.
using LiftedCycle = std::vector<Vertex>;

// Cycle on raw integer pairs, before any modular reduction.
using RawCycle = std::vector<std::pair<int, int>>;

enum class CycleKind { Short, Long };

Vertex make_vertex(long long a, long long b, const Params& p);
LiftedCycle reduce_cycle(const RawCycle& raw, const Params& p);

// CRT identification of Z_M x Z_ell with Z_v.
long long crt_pack(const Vertex& u, const Params& p);
Vertex crt_unpack(long long z, const Params& p);

// Rotates/orients a cycle so it starts at its lexicographically smallest
// vertex and proceeds toward the smaller of that vertex's two neighbors.
LiftedCycle canonical_form(const LiftedCycle& c);

// True iff the designated components are pairwise distinct (short cycles:
// second components, long cycles: first components).  Throws LengthMismatch
// when the length does not match the kind.
bool is_transversal(const LiftedCycle& c, CycleKind kind, const Params& p);

}  // namespace hwp
