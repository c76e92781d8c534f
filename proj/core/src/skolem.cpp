#include "hwp/skolem.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hwp/errors.hpp"

namespace hwp {

namespace {

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed * 2654435761ULL + 88172645463325252ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int below(int m) { return static_cast<int>(next() % static_cast<std::uint64_t>(m)); }
};

// Min-conflicts search for the pair positions: pos[d] = a places the pair
// (a, a+d).  Deterministic for a fixed (order, seed).
bool solve_positions(int n, int slots, bool hooked, std::uint64_t seed,
                     long long max_iters, std::vector<int>& pos) {
    Rng rng(seed);
    std::vector<int> occ(slots + 2, 0);
    const int banned = hooked ? 2 * n : -1;

    pos.assign(n + 1, 0);
    for (int d = 1; d <= n; ++d) {
        int a;
        do {
            a = 1 + rng.below(slots - d);
        } while (a == banned || a + d == banned);
        pos[d] = a;
        ++occ[a];
        ++occ[a + d];
    }

    for (long long it = 0; it < max_iters; ++it) {
        // find a conflicted difference, scanning from a random start
        int d = 0;
        int start = 1 + rng.below(n);
        for (int step = 0; step < n; ++step) {
            int cand = 1 + (start + step - 1) % n;
            int a = pos[cand];
            if (occ[a] > 1 || occ[a + cand] > 1) {
                d = cand;
                break;
            }
        }
        if (d == 0) return true;  // no conflicts anywhere

        int a0 = pos[d];
        --occ[a0];
        --occ[a0 + d];

        if (rng.below(100) < 4) {
            int a;
            do {
                a = 1 + rng.below(slots - d);
            } while (a == banned || a + d == banned);
            pos[d] = a;
            ++occ[a];
            ++occ[a + d];
            continue;
        }

        int best_cost = 1 << 30;
        int chosen = a0;
        int ties = 0;
        for (int a = 1; a + d <= slots; ++a) {
            if (a == banned || a + d == banned) continue;
            int cost = occ[a] + occ[a + d];
            if (cost < best_cost) {
                best_cost = cost;
                chosen = a;
                ties = 1;
            } else if (cost == best_cost) {
                // reservoir choice among ties
                ++ties;
                if (rng.below(ties) == 0) chosen = a;
            }
        }
        pos[d] = chosen;
        ++occ[chosen];
        ++occ[chosen + d];
    }
    return false;
}

}  // namespace

SkolemFlavor skolem_flavor_for(int order) {
    int r = order % 4;
    return (r == 0 || r == 1) ? SkolemFlavor::Ordinary : SkolemFlavor::Hooked;
}

SkolemSeq generate_skolem(int order) {
    if (order < 0) throw IndexOutOfRange("skolem order must be >= 0");
    if (order == 0) return SkolemSeq{0, {}, SkolemFlavor::Ordinary};
    const SkolemFlavor flavor = skolem_flavor_for(order);
    const bool hooked = flavor == SkolemFlavor::Hooked;
    const int slots = 2 * order + (hooked ? 1 : 0);

    std::vector<int> pos;
    bool ok = false;
    for (std::uint64_t attempt = 0; attempt < 64 && !ok; ++attempt) {
        long long iters = 300000 + 6000LL * order;
        ok = solve_positions(order, slots, hooked, 1000ULL * order + attempt, iters, pos);
    }
    if (!ok) throw Error("skolem generation did not converge for order " + std::to_string(order));

    SkolemSeq seq;
    seq.order = order;
    seq.flavor = flavor;
    seq.entries.assign(pos.begin() + 1, pos.end());
    if (!validate_skolem(seq)) throw Error("internal: generated skolem sequence invalid");
    return seq;
}

bool validate_skolem(const SkolemSeq& seq) {
    const int n = seq.order;
    if (n == 0) return seq.entries.empty() && seq.flavor == SkolemFlavor::Ordinary;
    if (n < 1 || static_cast<int>(seq.entries.size()) != n) return false;
    if (seq.flavor != skolem_flavor_for(n)) return false;
    const bool hooked = seq.flavor == SkolemFlavor::Hooked;
    const int top = hooked ? 2 * n + 1 : 2 * n;
    std::vector<char> seen(top + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int a = seq.entries[i - 1];
        int b = a + i;
        if (a < 1 || b > top) return false;
        if (hooked && (a == 2 * n || b == 2 * n)) return false;
        if (seen[a] || seen[b]) return false;
        seen[a] = seen[b] = 1;
    }
    return true;
}

}  // namespace hwp
