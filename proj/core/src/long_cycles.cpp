#include "hwp/long_cycles.hpp"

#include <string>

#include "hwp/diff_multiset.hpp"
#include "hwp/errors.hpp"
#include "hwp/interval_paths.hpp"
#include "hwp/short_cycles.hpp"

namespace hwp {

namespace {

// Paths U and W of the two-interval family, oriented so the cycle joins
// U-last to W-first and W-last back to U-first.
struct PathPair {
    IntervalPath U, W;
    int u_first, u_last, w_first, w_last;
};

PathPair make_paths(int d, int t) {
    PathPair pp{};
    if (t % 2 == 1) {
        const int m = (t + 1) / 2;
        const int kk = (d - 1) / 2;  // d = 2kk + 1
        IntervalPathSpec su{m, 2 * m - 2, 2 * m - 1, 3 * m - 2, 3, kk};
        IntervalPathSpec sw{0, m - 1, 3 * m - 1, 4 * m - 2, 2, kk};
        pp.u_first = 3 * m - 2 - kk;
        pp.u_last = 2 * m - 1 + kk;
        pp.w_first = kk;
        pp.w_last = 3 * m - 1 + kk;
        pp.U = build_interval_path(su);
        pp.W = build_interval_path(sw);
    } else {
        const int m = t / 2;
        const int kk = d / 2;  // d = 2kk
        IntervalPathSpec su{m, 2 * m - 1, 2 * m, 3 * m, 3, kk};
        IntervalPathSpec sw{0, m - 1, 3 * m + 1, 4 * m, 2, kk - 1};
        pp.u_first = 3 * m - kk;
        pp.u_last = 2 * m + kk;
        pp.w_first = kk - 1;
        pp.w_last = 3 * m + kk;
        pp.U = build_interval_path(su);
        pp.W = build_interval_path(sw);
    }
    if (pp.U.front() != pp.u_first) std::reverse(pp.U.begin(), pp.U.end());
    if (pp.W.front() != pp.w_first) std::reverse(pp.W.begin(), pp.W.end());
    if (pp.U.front() != pp.u_first || pp.U.back() != pp.u_last ||
        pp.W.front() != pp.w_first || pp.W.back() != pp.w_last)
        throw Error("internal: interval path endpoints do not match the long-cycle plan");
    return pp;
}

}  // namespace

RawCycle build_cd_cycle(int d, int t, int x, int y) {
    if (t < 2) throw SpecViolation("t must be >= 2");
    if (d < 1 || d > t - 1 || d == (t + 1) / 2)
        throw SpecViolation("d must lie in [1, t-1] and avoid ceil(t/2)");
    if ((d - t) % 2 != 0) throw SpecViolation("d and t must share parity");

    PathPair pp = make_paths(d, t);
    RawCycle cycle;
    cycle.reserve(2 * t + 1);
    // vertices of U's upper interval carry y, W's upper interval carries x,
    // everything else carries 0
    const int u_split = t % 2 == 1 ? 2 * ((t + 1) / 2) - 1 : 2 * (t / 2);  // first upper value of U
    for (int v : pp.U) cycle.emplace_back(v, v >= u_split ? y : 0);
    const int w_split = t % 2 == 1 ? 3 * ((t + 1) / 2) - 1 : 3 * (t / 2) + 1;
    for (int v : pp.W) cycle.emplace_back(v, v >= w_split ? x : 0);
    return cycle;
}

std::pair<RawCycle, RawCycle> build_pair(const LongPairSpec& s) {
    if ((s.d1 - s.t) % 2 != 0 || (s.d2 - s.t) % 2 != 0)
        throw SpecViolation("d1, d2, t must share parity");
    return {build_cd_cycle(s.d1, s.t, s.x, s.y), build_cd_cycle(s.d2, s.t, s.y, s.x)};
}

LongSet build_long_set(const Params& p) {
    const int t = p.ell * p.n;
    const DSet dset = build_D(p);

    LongSet out;
    out.cycles.reserve(2 * (p.k - 1));
    out.f = SignMap(p.M);

    for (int i = 1; i <= p.k - 1; ++i) {
        auto [da, db] = dset.pairs[i - 1];
        auto dprime = [&](int d) { return d % 4 == 1 ? p.M - d : d; };
        const int d1 = dprime(da) / 2;
        const int d2 = dprime(db) / 2;
        LongPairSpec spec{d1, d2, t, 2 * i + 1, 2 * i + 2};
        auto [c1, c2] = build_pair(spec);
        for (const RawCycle& raw : {c1, c2}) {
            RawCycle doubled;
            doubled.reserve(raw.size());
            for (const auto& [a, b] : raw) doubled.emplace_back(mod(2LL * a, p.M), b);
            LiftedCycle cyc = reduce_cycle(doubled, p);
            if (!is_transversal(cyc, CycleKind::Long, p))
                throw Error("internal: long cycle not transversal");
            out.cycles.push_back(std::move(cyc));
        }
    }

    // extract f by scanning for the differences with second component +-1
    DiffMultiset diffs(p);
    for (const LiftedCycle& c : out.cycles) diffs.add_cycle(c);
    for (int d : dset.d_values) {
        int value = 0;
        for (int cand : {1, -1}) {
            if (diffs.count(d, cand) == 1) {
                if (value != 0) throw Error("internal: ambiguous f at " + std::to_string(d));
                value = cand;
            }
        }
        if (value == 0) throw Error("internal: no f value found at " + std::to_string(d));
        out.f.set(d, value);
    }
    return out;
}

}  // namespace hwp
