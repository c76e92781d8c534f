#include "hwp/short_cycles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hwp/diff_multiset.hpp"
#include "hwp/errors.hpp"

namespace hwp {

namespace {

// 2^(-1) mod m for odd m.
int inv2(int m) { return (m + 1) / 2; }

void append_run(ZCycle& c, int from, int to, int step) {
    if (step > 0)
        for (int v = from; v <= to; v += step) c.push_back(v);
    else
        for (int v = from; v >= to; v += step) c.push_back(v);
}

// Definition-level check of the alternating property on symmetric
// representatives.
bool is_alternating(const std::vector<int>& delta, const Params& p) {
    const int fourk = 4 * p.k;
    if (static_cast<int>(delta.size()) != fourk) return false;
    for (int i = 1; i <= fourk; ++i) {
        int d = delta[i - 1];
        if (d < 1 || d > p.ell * p.n) return false;
        int want = i <= 2 * p.k ? (i + 1) % 2 : i % 2;
        if (d % 2 != want) return false;
    }
    return true;
}

}  // namespace

DSet build_D(const Params& p) {
    DSet out;
    const int t = p.ell * p.n;
    for (int i = 1; i <= p.k - 1; ++i) {
        int d1 = p.n % 2 == 1 ? 4 * i - 2 : 4 * i;
        int d2 = 4 * i + 1;
        out.pairs.emplace_back(d1, d2);
    }
    if (!out.pairs.empty() && ((p.n - 2 * p.k) % 4 == 2 || (p.n - 2 * p.k) % 4 == 3))
        out.pairs.back() = {t - 2 * p.k - 1, t - 2 * p.k + 3};

    for (auto [a, b] : out.pairs) {
        out.d_values.push_back(a);
        out.d_values.push_back(b);
    }
    std::sort(out.d_values.begin(), out.d_values.end());
    for (int x = 2; x <= t - 1; ++x)
        if (!std::binary_search(out.d_values.begin(), out.d_values.end(), x))
            out.dbar.push_back(x);
    return out;
}

Gon cycle_from_pairs(const std::vector<int>& U, const Params& p) {
    const int fourk = 4 * p.k;
    if (static_cast<int>(U.size()) != fourk)
        throw NotPairable("U must have ell-1 = " + std::to_string(fourk) + " elements");
    std::vector<int> u = U;
    std::sort(u.begin(), u.end());
    if (u.front() < 1 || u.back() > p.ell * p.n)
        throw NotPairable("U must lie in [1, ell*n]");
    if (std::adjacent_find(u.begin(), u.end()) != u.end())
        throw NotPairable("U must be a set");
    for (int j = 0; j < fourk; j += 2)
        if (u[j + 1] != u[j] + 1)
            throw NotPairable("U admits no partition into consecutive pairs");

    // increasing sequence (delta_1..delta_2k, x, delta_{2k+1}..delta_{4k-1})
    std::vector<int> d(u.begin(), u.begin() + 2 * p.k);
    const int x = u[2 * p.k];
    d.insert(d.end(), u.begin() + 2 * p.k + 1, u.end());

    Gon g;
    g.cycle.reserve(fourk);
    int b = 0;
    g.cycle.push_back(mod(b, p.M));
    for (int h = 1; h <= fourk - 1; ++h) {
        b += (h % 2 == 1) ? -d[h - 1] : d[h - 1];
        g.cycle.push_back(mod(b, p.M));
    }
    if (mod(-x, p.M) != g.cycle.back())
        throw Error("internal: gon closing difference mismatch");

    g.delta = d;
    g.delta.push_back(x);  // delta_4k = b_0 - b_{4k-1}
    g.alternating = is_alternating(g.delta, p);
    return g;
}

BaseGons build_base_gons(const Params& p, const SkolemSeq& skolem) {
    const int nu = p.n - 2 * p.k;
    if (skolem.order != nu)
        throw SkolemMismatch("need a Skolem sequence of order n-2k = " + std::to_string(nu));
    if (skolem.flavor != skolem_flavor_for(nu) || !validate_skolem(skolem))
        throw SkolemMismatch("Skolem sequence invalid or of wrong flavor");

    const int k = p.k, n = p.n, t = p.ell * p.n;
    const bool hooked = skolem.flavor == SkolemFlavor::Hooked;
    BaseGons out;

    // the ell-cycles A_i
    for (int i = 1; i <= nu; ++i) {
        ZCycle a(4 * k + 1);
        for (int j = 0; j <= 4 * k; ++j) {
            long long val;
            if (j == 4 * k - 1) val = -2 * k;
            else if (j == 4 * k) val = skolem.entries[i - 1] + i + (4LL * k - 1) * n - 1;
            else if (j % 2 == 1) val = (4LL * k - 2 - j) * n;
            else if (j <= 2 * k - 2) val = 1LL * j * n + i - 2 * k;
            else val = 1LL * j * n + i - 1 + 2 * k;
            a[j] = mod(val, p.M);
        }
        out.A.push_back(std::move(a));
    }

    // interval bookkeeping for the 4k-gons
    const DSet dset = build_D(p);
    auto in_D = [&](int x) {
        return std::binary_search(dset.d_values.begin(), dset.d_values.end(), x);
    };

    std::vector<std::vector<int>> gon_diffs(2 * k);
    for (int x = 2; x <= 4 * k - 1; ++x)  // J_0 minus D
        if (!in_D(x)) gon_diffs[0].push_back(x);
    if (!hooked) {
        for (int x = t - 2 * k; x <= t - 1; ++x) gon_diffs[0].push_back(x);  // J_2k
    } else {
        for (int x = t - 2 * k - 1; x <= t - 1; ++x)  // J_2k minus D
            if (x != t - 2 * k && !in_D(x)) gon_diffs[0].push_back(x);
    }
    for (int beta = 1; beta <= 2 * k - 1; ++beta)
        for (int x = 2 * n * beta; x <= 2 * n * beta + 4 * k - 1; ++x)
            gon_diffs[beta].push_back(x);

    out.b_intervals.emplace_back(0, 0);
    for (int beta = 0; beta <= 2 * k - 1; ++beta) {
        Gon g = cycle_from_pairs(gon_diffs[beta], p);
        if (beta >= 1) {
            if (!g.alternating) throw Error("internal: B cycle not alternating");
            out.b_intervals.emplace_back(2 * n * beta, 2 * n * beta + 4 * k - 1);
        }
        out.B.push_back(std::move(g.cycle));
    }
    return out;
}

ZCycle q_cycle(const Params& p, int i) {
    const int k = p.k;
    if (i < 1 || i > 2 * k - 1)
        throw IndexOutOfRange("q_cycle index must lie in [1, 2k-1]");
    ZCycle q;
    q.reserve(4 * k + 1);
    append_run(q, 0, 4 * k - i, 1);
    if (i % 2 == 0) {
        append_run(q, 4 * k - i + 2, 4 * k, 2);
        append_run(q, 4 * k - 1, 4 * k - i + 1, -2);
    } else {
        append_run(q, 4 * k - i + 2, 4 * k - 1, 2);
        append_run(q, 4 * k, 4 * k - i + 1, -2);
    }
    for (int& v : q) v = mod(v, p.ell);
    return q;
}

ZCycle p_cycle(const Params& p, int mu) {
    const int k = p.k, ell = p.ell;
    mu = mod(mu, ell);
    ZCycle c;
    c.reserve(ell);
    if (mu == mod(2 * k, ell)) {
        c.push_back(0);
        append_run(c, 2, 2 * k + 1, 1);
        append_run(c, 2 * k + 3, 4 * k - 1, 2);
        append_run(c, 4 * k, 2 * k + 2, -2);
        c.push_back(1);
    } else if (mu == mod(-2 * k, ell)) {
        c = p_cycle(p, 2 * k);
        for (int& v : c) v = mod(-v, ell);
        return c;
    } else {
        const int x = mod(1LL * (2 * k - mu) * inv2(ell), ell);
        if (x == 0 || x == 2 * k) throw Error("internal: p_cycle selector collision");
        if (x < 2 * k) {
            c.push_back(0);
            if (x % 2 == 1) {
                append_run(c, 4 * k - 1, 2 * k + x + 2, -2);
                append_run(c, 2 * k + x + 1, 4 * k, 2);
                append_run(c, 1, 2 * k - 1, 1);
                append_run(c, 2 * k + 1, 2 * k + x, 2);
                append_run(c, 2 * k + x - 1, 2 * k, -2);
            } else {
                append_run(c, 4 * k - 1, 2 * k + x + 1, -2);
                append_run(c, 2 * k + x + 2, 4 * k, 2);
                append_run(c, 1, 2 * k - 1, 1);
                append_run(c, 2 * k + 1, 2 * k + x - 1, 2);
                append_run(c, 2 * k + x, 2 * k, -2);
            }
        } else if (x == 2 * k + 1) {  // mu = 2k - 1
            c.push_back(0);
            append_run(c, 4 * k, 2 * k + 1, -1);
            append_run(c, 2 * k - 1, 1, -2);
            append_run(c, 2, 2 * k, 2);
        } else {
            const int xp = x - 2 * k;
            if (x % 2 == 0) {
                append_run(c, 0, xp - 2, 2);
                append_run(c, xp - 1, 1, -2);
                append_run(c, 4 * k, 2 * k + 1, -1);
                append_run(c, 2 * k - 1, xp + 1, -2);
                append_run(c, xp, 2 * k, 2);
            } else {
                append_run(c, 0, xp - 1, 2);
                append_run(c, xp - 2, 1, -2);
                append_run(c, 4 * k, 2 * k + 1, -1);
                append_run(c, 2 * k - 1, xp, -2);
                append_run(c, xp + 1, 2 * k, 2);
            }
        }
    }
    if (static_cast<int>(c.size()) != ell)
        throw Error("internal: p_cycle has wrong length for mu = " + std::to_string(mu));
    for (int& v : c) v = mod(v, ell);
    return c;
}

int alternating_partial_sum(const LiftedCycle& lifted, std::pair<int, int> interval,
                            const Params& p) {
    const auto [u, u2] = interval;
    const int n = static_cast<int>(lifted.size());
    if (n != p.ell) throw ShapeMismatch("lifted cycle must have length ell");
    std::vector<int> phi(u2 + 1, 99);
    for (int j = 0; j < n; ++j) {
        const Vertex& s = lifted[j];
        const Vertex& e = lifted[(j + 1) % n];
        int da = sym_rep(s.a - e.a, p.M);
        int db = sym_rep(s.b - e.b, p.ell);
        if (da == 0) continue;  // the closing column difference
        if (da < 0) { da = -da; db = -db; }
        if (da < u || da > u2 || phi[da] != 99)
            throw ShapeMismatch("difference " + std::to_string(da) +
                                " outside the expected interval");
        phi[da] = db;
    }
    int s = 0;
    for (int i = u; i <= u2; ++i) {
        if (phi[i] == 99) throw ShapeMismatch("interval value missing from differences");
        s += (i % 2 == 0) ? phi[i] : -phi[i];
    }
    return mod(s, p.ell);
}

LiftResult lift_all(const Params& p, const BaseGons& gons, int s_target) {
    const int k = p.k;
    s_target = mod(s_target, p.ell);
    const DSet dset = build_D(p);

    std::vector<LiftedCycle> fixed;
    // A_i lifted with second components (0, 1, ..., 4k)
    for (const ZCycle& a : gons.A) {
        LiftedCycle c;
        c.reserve(p.ell);
        for (int j = 0; j <= 4 * k; ++j) c.push_back(Vertex{a[j], j});
        fixed.push_back(std::move(c));
    }
    // B_i for i <= 2k-1, closed with an extra vertex and labeled by Q_i
    for (int i = 1; i <= 2 * k - 1; ++i) {
        const ZCycle& b = gons.B[i - 1];
        ZCycle q = q_cycle(p, i);
        LiftedCycle c;
        c.reserve(p.ell);
        c.push_back(Vertex{0, 0});
        for (int j = 1; j <= 4 * k - 1; ++j) c.push_back(Vertex{b[j], q[j]});
        c.push_back(Vertex{0, q[4 * k]});
        fixed.push_back(std::move(c));
    }

    const ZCycle& b2k = gons.B[2 * k - 1];
    auto lift_b2k = [&](int mu) {
        ZCycle pm = p_cycle(p, mu);
        LiftedCycle c;
        c.reserve(p.ell);
        c.push_back(Vertex{0, 0});
        for (int j = 1; j <= 4 * k - 1; ++j) c.push_back(Vertex{b2k[j], pm[j]});
        bool corner = mu == mod(2 * k, p.ell) || mu == mod(-2 * k, p.ell);
        c.push_back(Vertex{corner ? b2k[4 * k - 1] : 0, pm[4 * k]});
        return c;
    };

    auto phi_of = [&](const std::vector<LiftedCycle>& shorts) {
        DiffMultiset diffs(p);
        for (const LiftedCycle& c : shorts) diffs.add_cycle(c);
        SignMap phi(p.M);
        for (int i : dset.dbar) {
            int value = 0;
            for (int cand : {1, -1, 2, -2}) {
                if (diffs.count(i, cand) == 1) {
                    if (value != 0) throw Error("internal: ambiguous phi at " + std::to_string(i));
                    value = cand;
                }
            }
            if (value == 0)
                throw NoMuFound("no second component found for difference " + std::to_string(i));
            phi.set(i, value);
        }
        return phi;
    };

    for (int mu = 0; mu < p.ell; ++mu) {
        std::vector<LiftedCycle> shorts = fixed;
        shorts.push_back(lift_b2k(mu));
        SignMap phi = phi_of(shorts);
        int sum = 0;
        for (int i : dset.dbar) sum += (i % 2 == 0) ? phi.get(i) : -phi.get(i);
        if (mod(sum, p.ell) != s_target) continue;

        for (const LiftedCycle& c : shorts)
            if (!is_transversal(c, CycleKind::Short, p))
                throw Error("internal: lifted short cycle not transversal");
        // size of {i in Dbar : phi(i) = (-1)^(i+1)} must meet the bound
        int good = 0;
        for (int i : dset.dbar)
            if (phi.get(i) == (i % 2 == 0 ? -1 : 1)) ++good;
        if (good < (p.ell - 5) * (p.ell - 1) / 4)
            throw Error("internal: phi unbalance bound violated");
        return LiftResult{std::move(shorts), std::move(phi), mu};
    }
    throw NoMuFound("no lift of B_2k reaches the target alternating sum");
}

}  // namespace hwp
