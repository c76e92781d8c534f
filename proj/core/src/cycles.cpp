#include "hwp/cycles.hpp"

#include <algorithm>
#include <string>

#include "hwp/errors.hpp"

namespace hwp {

Vertex make_vertex(long long a, long long b, const Params& p) {
    return Vertex{mod(a, p.M), mod(b, p.ell)};
}

LiftedCycle reduce_cycle(const RawCycle& raw, const Params& p) {
    LiftedCycle out;
    out.reserve(raw.size());
    for (const auto& [a, b] : raw) out.push_back(make_vertex(a, b, p));
    return out;
}

long long crt_pack(const Vertex& u, const Params& p) {
    // smallest z >= 0 with z = u.a (mod M), z = u.b (mod ell)
    for (long long z = u.a; z < p.v; z += p.M)
        if (z % p.ell == u.b) return z;
    throw Error("internal: crt_pack failed");
}

Vertex crt_unpack(long long z, const Params& p) {
    return Vertex{mod(z, p.M), mod(z, p.ell)};
}

LiftedCycle canonical_form(const LiftedCycle& c) {
    if (c.size() < 3) return c;
    const int n = static_cast<int>(c.size());
    int start = 0;
    for (int i = 1; i < n; ++i)
        if (c[i] < c[start]) start = i;
    const Vertex& nxt = c[(start + 1) % n];
    const Vertex& prv = c[(start + n - 1) % n];
    LiftedCycle out;
    out.reserve(n);
    if (nxt <= prv) {
        for (int i = 0; i < n; ++i) out.push_back(c[(start + i) % n]);
    } else {
        for (int i = 0; i < n; ++i) out.push_back(c[(start + n - i) % n]);
    }
    return out;
}

bool is_transversal(const LiftedCycle& c, CycleKind kind, const Params& p) {
    const int want = kind == CycleKind::Short ? p.ell : p.M;
    if (static_cast<int>(c.size()) != want)
        throw LengthMismatch("cycle length " + std::to_string(c.size()) +
                             " does not match kind (expected " + std::to_string(want) + ")");
    std::vector<char> seen(want, 0);
    for (const Vertex& u : c) {
        int comp = kind == CycleKind::Short ? u.b : u.a;
        if (comp < 0 || comp >= want || seen[comp]) return false;
        seen[comp] = 1;
    }
    return true;
}

}  // namespace hwp
