#include "hwp/interval_paths.hpp"

#include <algorithm>
#include <string>

#include "hwp/errors.hpp"

namespace hwp {

namespace {

// --- canonical case-2 construction -----------------------------------------
//
// A member of P([0,g],[g+1,2g+1]) with ends (i, g+1+i) is assembled from a
// permutation walk x_0..x_g of [0,g] with x_0 = i plus a pivot position p
// with x_p = g-i, such that the g consecutive sums x_j + x_{j+1} together
// with the virtual sum x_p + x_g are exactly {odd numbers in [1, 2g-1]}
// u {2g-2i}.  The walk is produced by a self-similar recursion that peels
// the block [0, i] and recurses on the remainder.

struct Walk {
    std::vector<int> x;
    int pivot = 0;
};

Walk case2_walk(int g, int i) {
    if (2 * i > g) {
        Walk w = case2_walk(g, g - i);
        for (int& v : w.x) v = g - v;
        return w;
    }
    if (g == 2 * i || g == 2 * i + 1) {
        Walk w;
        w.x.reserve(g + 1);
        for (int v = i; v >= 0; --v) w.x.push_back(v);
        for (int v = g; v > i; --v) w.x.push_back(v);
        w.pivot = (g == 2 * i) ? 0 : g;
        return w;
    }
    Walk sub = case2_walk(g - i - 1, i);
    Walk w;
    w.x.reserve(g + 1);
    for (int v = i; v >= 0; --v) w.x.push_back(v);
    for (int z : sub.x) w.x.push_back(z + i + 1);
    w.pivot = (i + 1) + sub.pivot;
    return w;
}

// Interleaves the walk with reflected upper values; the pivot controls which
// neighbor each upper vertex reflects.
IntervalPath assemble_case2(const Walk& w, int g) {
    const int N = 2 * g + 1;
    IntervalPath v;
    v.reserve(2 * g + 2);
    for (int j = 0; j < g; ++j) {
        v.push_back(w.x[j]);
        v.push_back(j < w.pivot ? N - w.x[j] : N - w.x[j + 1]);
    }
    v.push_back(w.x[g]);
    v.push_back(N - w.x[w.pivot]);
    return v;
}

// Member of P([0,g],[g+1,2g+1]) with ends (i, g+1+i), starting at i.
IntervalPath case2_path(int g, int i) {
    Walk w = case2_walk(g, i);
    return assemble_case2(w, g);
}

// Member of P([0,g1],[g1+1,2g1]) with ends {i, g1-i}, both in the lower
// interval, starting at min(i, g1-i).  Undefined for 2i = g1.
IntervalPath case1_path(int g1, int i) {
    i = std::min(i, g1 - i);
    if (g1 == 0) return {0};
    // descending zig-zag over [0,i] and the top i upper values, ending at 0
    IntervalPath path;
    path.reserve(2 * g1 + 1);
    for (int j = 0; j < i; ++j) {
        path.push_back(i - j);
        path.push_back(2 * g1 - i + 1 + j);
    }
    path.push_back(0);
    // bridge (difference 2g1-2i) into a case-2 block entered from its upper end
    IntervalPath sub = case2_path(g1 - i - 1, g1 - 2 * i - 1);
    for (int& v : sub) v += i + 1;
    path.insert(path.end(), sub.rbegin(), sub.rend());
    return path;
}

// Member of P([0,g2-1],[g2,2g2]) with ends {g2+i, 2g2-i}: mirror of case 1.
IntervalPath case3_path(int g2, int i) {
    IntervalPath p = case1_path(g2, i);
    for (int& v : p) v = 2 * g2 - v;
    return p;
}

void check_spec(const IntervalPathSpec& s) {
    const int g1 = s.b - s.a, g2 = s.d - s.c;
    if (!(s.a <= s.b && s.b < s.c && s.c <= s.d))
        throw SpecViolation("intervals must satisfy a <= b < c <= d");
    if (g1 - g2 > 1 || g2 - g1 > 1)
        throw SpecViolation("interval lengths may differ by at most one");
    switch (s.endpoint_case) {
        case 1:
            if (g1 != g2 + 1) throw SpecViolation("case 1 requires gamma1 = gamma2 + 1");
            if (s.i < 0 || s.i > g1 || 2 * s.i == g1)
                throw SpecViolation("case 1 index out of range or at excluded midpoint");
            break;
        case 2:
            if (g1 != g2) throw SpecViolation("case 2 requires gamma1 = gamma2");
            if (s.i < 0 || s.i > g1) throw SpecViolation("case 2 index out of range");
            break;
        case 3:
            if (g1 != g2 - 1) throw SpecViolation("case 3 requires gamma1 = gamma2 - 1");
            if (s.i < 0 || s.i > g2 || 2 * s.i == g2)
                throw SpecViolation("case 3 index out of range or at excluded midpoint");
            break;
        default:
            throw SpecViolation("endpoint_case must be 1, 2 or 3");
    }
}

}  // namespace

std::pair<int, int> interval_path_endpoints(const IntervalPathSpec& s) {
    check_spec(s);
    switch (s.endpoint_case) {
        case 1: return {s.a + s.i, s.b - s.i};
        case 2: return {s.a + s.i, s.c + s.i};
        default: return {s.c + s.i, s.d - s.i};
    }
}

IntervalPath build_interval_path(const IntervalPathSpec& s) {
    check_spec(s);
    const int g1 = s.b - s.a, g2 = s.d - s.c;
    IntervalPath path;
    switch (s.endpoint_case) {
        case 1: path = case1_path(g1, s.i); break;
        case 2: path = case2_path(g1, s.i); break;
        default: path = case3_path(g2, s.i); break;
    }
    // relocate the canonical instance to [a,b] u [c,d]
    for (int& v : path) v = v <= g1 ? v + s.a : v - (g1 + 1) + s.c;
    auto [w, w2] = interval_path_endpoints(s);
    if (path.front() != w) std::reverse(path.begin(), path.end());
    if (path.front() != w || path.back() != w2 ||
        !validate_interval_path(path, s.a, s.b, s.c, s.d))
        throw Error("internal: constructed interval path failed validation");
    return path;
}

bool validate_interval_path(const IntervalPath& path, int a, int b, int c, int d) {
    const int nlo = b - a + 1, nhi = d - c + 1;
    if (static_cast<int>(path.size()) != nlo + nhi) return false;
    std::vector<char> seen(nlo + nhi, 0);
    for (int v : path) {
        int idx;
        if (v >= a && v <= b) idx = v - a;
        else if (v >= c && v <= d) idx = nlo + (v - c);
        else return false;
        if (seen[idx]) return false;
        seen[idx] = 1;
    }
    const int dmin = c - b, dmax = d - a;
    std::vector<char> used(dmax + 1, 0);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        int lo = std::min(path[j], path[j + 1]);
        int hi = std::max(path[j], path[j + 1]);
        if (!(lo >= a && lo <= b && hi >= c && hi <= d)) return false;
        int diff = hi - lo;
        if (diff < dmin || diff > dmax || used[diff]) return false;
        used[diff] = 1;
    }
    for (int diff = dmin; diff <= dmax; ++diff)
        if (!used[diff]) return false;
    return true;
}

std::vector<IntervalPath> enumerate_interval_paths(int a, int b, int c, int d) {
    if ((b - a) + (d - c) > 10)
        throw TooLarge("exhaustive enumeration limited to gamma1 + gamma2 <= 10");
    if (!(a <= b && b < c && c <= d))
        throw SpecViolation("intervals must satisfy a <= b < c <= d");

    std::vector<int> lo, hi;
    for (int v = a; v <= b; ++v) lo.push_back(v);
    for (int v = c; v <= d; ++v) hi.push_back(v);
    const int total = static_cast<int>(lo.size() + hi.size());

    std::vector<IntervalPath> out;
    IntervalPath cur;
    std::vector<char> used_lo(lo.size(), 0), used_hi(hi.size(), 0);
    std::vector<char> used_diff(d - a + 1, 0);

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == total) {
            IntervalPath p = cur;
            if (p.back() < p.front()) std::reverse(p.begin(), p.end());
            out.push_back(p);
            return;
        }
        bool last_is_low = cur.back() <= b;
        const auto& pool = last_is_low ? hi : lo;
        auto& used = last_is_low ? used_hi : used_lo;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (used[j]) continue;
            int diff = last_is_low ? pool[j] - cur.back() : cur.back() - pool[j];
            if (used_diff[diff]) continue;
            used[j] = 1;
            used_diff[diff] = 1;
            cur.push_back(pool[j]);
            self(self);
            cur.pop_back();
            used_diff[diff] = 0;
            used[j] = 0;
        }
    };

    // start from the larger side (or both when equal); dedupe reversals by
    // keeping only paths whose first vertex <= last vertex
    for (int v = a; v <= b; ++v) {
        if (static_cast<int>(lo.size()) < static_cast<int>(hi.size())) break;
        cur = {v};
        used_lo[v - a] = 1;
        rec(rec);
        used_lo[v - a] = 0;
    }
    for (int v = c; v <= d; ++v) {
        if (static_cast<int>(hi.size()) < static_cast<int>(lo.size())) break;
        cur = {v};
        used_hi[v - c] = 1;
        rec(rec);
        used_hi[v - c] = 0;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hwp
