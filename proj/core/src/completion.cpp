#include "hwp/completion.hpp"

#include <string>

#include "hwp/errors.hpp"
#include "hwp/long_cycles.hpp"
#include "hwp/short_cycles.hpp"
#include "hwp/skolem.hpp"

namespace hwp {

namespace {

// rho is pinned: the C/C' construction needs sum_G = -1 (mod ell).
constexpr int kRho = -1;

}  // namespace

SignMap glue_F(const SignMap& f, const SignMap& phi, const Params& p) {
    const int t = p.ell * p.n;
    SignMap F(p.M);
    for (int x = 2; x <= t - 1; ++x) {
        const bool in_f = f.has(x), in_phi = phi.has(x);
        if (in_f && in_phi)
            throw DomainOverlap("f and phi both define " + std::to_string(x));
        if (!in_f && !in_phi)
            throw DomainGap("neither f nor phi defines " + std::to_string(x));
        F.set(x, in_f ? f.get(x) : phi.get(x));
    }
    return F;
}

GResult build_G(const SignMap& F, int rho, const Params& p) {
    const int t = p.ell * p.n;
    if (mod(alternating_sum(F, 2, t - 1), p.ell) != 0)
        throw SpecViolation("build_G requires sum_F = 0 (mod ell)");

    SignMap g(p.M);
    for (int x = 2; x <= t - 1; ++x) {
        int fx = F.get(x);
        g.set(x, (fx == 1 || fx == -1) ? 2 * fx : fx / 2);
    }
    const int sum_g = alternating_sum(g, 2, t - 1);
    const int tt = mod(1LL * (sum_g - rho) * p.k, p.ell);

    // flip set: the tt smallest eligible elements of Dbar at or above 2n
    // (the region populated by the alternating-gon lifts)
    const DSet dset = build_D(p);
    std::vector<int> X;
    for (int x : dset.dbar) {
        if (static_cast<int>(X.size()) == tt) break;
        if (x < 2 * p.n) continue;
        if (F.get(x) == (x % 2 == 0 ? -1 : 1)) X.push_back(x);
    }
    if (static_cast<int>(X.size()) < tt)
        throw InsufficientFlipSet("only " + std::to_string(X.size()) +
                                  " eligible flips, need " + std::to_string(tt));

    GResult out;
    out.t = tt;
    out.X = X;
    out.G = SignMap(p.M);
    std::vector<char> in_X(t, 0);
    for (int x : X) in_X[x] = 1;
    for (int x = 2; x <= t - 1; ++x)
        out.G.set(x, in_X[x] ? -g.get(x) : g.get(x));

    if (mod(alternating_sum(out.G, 2, t - 1), p.ell) != mod(rho, p.ell))
        throw Error("internal: sum_G misses rho");
    return out;
}

CompletionCycles build_completion_cycles(const Params& p, const SignMap& F,
                                         const SignMap& G) {
    const int t = p.ell * p.n;  // ell*n; M = 2t+1
    const int ell = p.ell;

    // first components 0, 1, -1, 2, -2, ..., t, -t
    std::vector<int> xs(2 * t + 1);
    for (int i = 0; i <= 2 * t; ++i) {
        int mag = (i + 1) / 2;
        xs[i] = (i % 2 == 1) ? mag : -mag;
    }

    // second components by running alternating partial sums
    std::vector<int> ys(2 * t + 1, 0);
    ys[0] = 0;
    ys[1] = 1;
    int acc = 1;
    for (int i = 2; i <= t - 1; ++i) {
        acc += (i % 2 == 0) ? F.get(i) : -F.get(i);
        ys[i] = acc;
    }
    if (mod(ys[t - 1], ell) != 1)
        throw AnchorViolation("y_{ell*n - 1} must be 1; upstream sums are off");
    ys[t] = 2;
    ys[t + 1] = 1;
    acc = 1;
    for (int i = t + 2; i <= 2 * t - 1; ++i) {
        acc += (i % 2 == 0) ? G.get(i) : -G.get(i);
        ys[i] = acc;
    }
    if (mod(ys[2 * t - 1], ell) != 0)
        throw AnchorViolation("y_{2*ell*n - 1} must be 0; upstream sums are off");
    ys[2 * t] = -2;

    RawCycle c_raw(2 * t + 1), cp_raw(2 * t + 1);
    for (int i = 0; i <= 2 * t; ++i) c_raw[i] = {xs[i], ys[i]};

    if (p.n % 2 == 0) {
        for (int i = 0; i <= 2 * t; ++i) {
            int xp = i <= t ? xs[i] : -xs[i];
            int yp = i <= t ? 0 : ys[i];
            cp_raw[i] = {xp, yp};
        }
    } else {
        for (int i = 0; i <= 2 * t; ++i) {
            int xp = i <= t - 1 ? xs[i] : -xs[i];
            int yp = i <= t - 1 ? 0 : (i == t ? 1 : ys[i]);
            cp_raw[i] = {xp, yp};
        }
    }

    CompletionCycles out;
    out.C = reduce_cycle(c_raw, p);
    out.Cprime = reduce_cycle(cp_raw, p);
    if (!is_transversal(out.C, CycleKind::Long, p) ||
        !is_transversal(out.Cprime, CycleKind::Long, p))
        throw Error("internal: completion cycle not transversal");
    return out;
}

BaseCycleSet assemble(const Params& p) {
    LongSet longs = build_long_set(p);

    const DSet dset = build_D(p);
    int s = 0;
    for (int d : dset.d_values) s += (d % 2 == 0) ? longs.f.get(d) : -longs.f.get(d);
    s = mod(-s, p.ell);

    SkolemSeq skolem = generate_skolem(p.n - 2 * p.k);
    BaseGons gons = build_base_gons(p, skolem);
    LiftResult lift = lift_all(p, gons, s);

    SignMap F = glue_F(longs.f, lift.phi, p);
    if (mod(alternating_sum(F, 2, p.ell * p.n - 1), p.ell) != 0)
        throw Error("internal: sum_F not 0 (mod ell)");
    GResult G = build_G(F, kRho, p);
    CompletionCycles cc = build_completion_cycles(p, F, G.G);

    BaseCycleSet base;
    base.params = p;
    base.shorts = std::move(lift.shorts);
    base.longs = std::move(longs.cycles);
    base.longs.push_back(std::move(cc.C));
    base.longs.push_back(std::move(cc.Cprime));

    Provenance prov;
    prov.f = std::move(longs.f);
    prov.phi = std::move(lift.phi);
    prov.F = std::move(F);
    prov.G = std::move(G.G);
    prov.mu = lift.mu;
    prov.s = s;
    prov.t = G.t;
    prov.X = std::move(G.X);
    base.provenance = std::move(prov);
    return base;
}

}  // namespace hwp
