#include <doctest.h>

#include <set>
#include <vector>

#include "hwp/completion.hpp"
#include "hwp/diff_multiset.hpp"
#include "hwp/errors.hpp"
#include "hwp/long_cycles.hpp"
#include "hwp/params.hpp"
#include "hwp/short_cycles.hpp"
#include "hwp/skolem.hpp"

using namespace hwp;

namespace {

BaseCycleSet assembled_95() {
    static BaseCycleSet base = assemble(make_params(9, 5));
    return base;
}

}  // namespace

TEST_CASE("glue_F matches the worked table") {
    BaseCycleSet base = assembled_95();
    REQUIRE(base.provenance.has_value());
    const SignMap& F = base.provenance->F;
    CHECK(F.get(2) == -1);   // from f (paper renders -1 as 8)
    CHECK(F.get(10) == -1);  // from phi
    CHECK(F.get(26) == 2);
    // odd symmetry everywhere
    Params p = base.params;
    for (int x = 2; x <= p.ell * p.n - 1; ++x) CHECK(F.get(-x) == -F.get(x));
    CHECK(mod(alternating_sum(F, 2, p.ell * p.n - 1), p.ell) == 0);
}

TEST_CASE("glue_F rejects overlapping or gapped domains") {
    Params p = make_params(9, 5);
    SignMap f(p.M), phi(p.M);
    f.set(2, -1);
    f.set(5, -1);
    // gap: phi misses 44
    for (int x : build_D(p).dbar)
        if (x != 44) phi.set(x, 1);
    CHECK_THROWS_AS(glue_F(f, phi, p), DomainGap);
    phi.set(44, 1);
    SignMap f2 = f;
    f2.set(44, 1);  // overlap at 44
    CHECK_THROWS_AS(glue_F(f2, phi, p), DomainOverlap);
}

TEST_CASE("build_G reproduces t and X of the final example") {
    BaseCycleSet base = assembled_95();
    CHECK(base.provenance->t == 8);
    CHECK(base.provenance->X == std::vector<int>{10, 11, 12, 13, 14, 18, 20, 21});
    // printed G table: G(47) = 2, G(58) = 1, G(59) = 8 = -1 (as residues 47..89)
    const SignMap& G = base.provenance->G;
    Params p = base.params;
    CHECK(mod(G.get(47), p.ell) == 2);
    CHECK(mod(G.get(58), p.ell) == 1);
    CHECK(mod(G.get(59), p.ell) == mod(-1, p.ell));
    CHECK(mod(G.get(89), p.ell) == 2);
}

TEST_CASE("build_G satisfies the three properties for every rho") {
    for (auto [ell, n] : {std::pair{9, 5}, {13, 6}}) {
        Params p = make_params(ell, n);
        BaseCycleSet base = assemble(p);
        const SignMap& F = base.provenance->F;
        const int t = p.ell * p.n;
        for (int rho = 0; rho < ell; ++rho) {
            GResult gr = build_G(F, rho, p);
            CHECK(mod(alternating_sum(gr.G, 2, t - 1), ell) == rho);
            for (int x = 2; x <= t - 1; ++x) {
                int fa = std::abs(F.get(x)), ga = std::abs(gr.G.get(x));
                CHECK(((fa == 1 && ga == 2) || (fa == 2 && ga == 1)));
                CHECK(gr.G.get(-x) == -gr.G.get(x));
            }
        }
        // rho = sum_g has t = 0, so G equals the doubled/halved map exactly
        SignMap g(p.M);
        for (int x = 2; x <= t - 1; ++x) {
            int fx = F.get(x);
            g.set(x, std::abs(fx) == 1 ? 2 * fx : fx / 2);
        }
        int rho0 = mod(alternating_sum(g, 2, t - 1), ell);
        GResult gr0 = build_G(F, rho0, p);
        CHECK(gr0.t == 0);
        CHECK(gr0.X.empty());
        for (int x = 2; x <= t - 1; ++x) CHECK(gr0.G.get(x) == g.get(x));
    }
}

TEST_CASE("completion cycles carry the printed y-sequences") {
    BaseCycleSet base = assembled_95();
    Params p = base.params;
    const SignMap& F = base.provenance->F;
    const SignMap& G = base.provenance->G;
    CompletionCycles cc = build_completion_cycles(p, F, G);

    // reconstruct y_i from the constructed cycle C: vertices are (x_i, y_i)
    REQUIRE(cc.C.size() == 91);
    std::vector<int> ys;
    for (const Vertex& u : cc.C) ys.push_back(u.b);

    std::vector<int> want_y2_44{0, 1, 2, 3, 2, 1, 2, 1, 0, 8, 7, 6, 5, 6, 7, 0, 8, 0, 8, 7, 6,
                                5, 3, 4, 6, 7, 8, 7, 5, 4, 6, 8, 7, 6, 5, 4, 3, 4, 5, 4, 3, 2, 1};
    REQUIRE(want_y2_44.size() == 43);
    for (int i = 2; i <= 44; ++i) CHECK(ys[i] == want_y2_44[i - 2]);
    CHECK(ys[44] == 1);  // y_{ell n - 1} = 1

    std::vector<int> want_y47_89{8, 6, 4, 2, 4, 6, 4, 2, 0, 7, 5, 6, 7, 5, 4, 2, 4, 6, 7, 0, 8,
                                 6, 4, 6, 8, 1, 3, 4, 6, 8, 1, 3, 5, 7, 0, 7, 0, 7, 5, 7, 0, 2, 0};
    REQUIRE(want_y47_89.size() == 43);
    for (int i = 47; i <= 89; ++i) CHECK(ys[i] == want_y47_89[i - 47]);
    CHECK(ys[89] == 0);  // y_{2 ell n - 1} = 0
    CHECK(ys[0] == 0);
    CHECK(ys[1] == 1);
    CHECK(ys[45] == 2);
    CHECK(ys[46] == 1);
    CHECK(ys[90] == mod(-2, 9));

    // pi(C) = (0, 1, -1, 2, -2, ...); pi(C') twists at nu = floor(ell n / 2)
    for (int i = 0; i <= 90; ++i) {
        int mag = (i + 1) / 2;
        CHECK(cc.C[i].a == mod(i % 2 == 1 ? mag : -mag, 91));
    }
    const int nu = 45 / 2;
    for (int i = 0; i <= 90; ++i) {
        int mag = (i + 1) / 2;
        int expect = i % 2 == 1 ? mag : -mag;
        if (mag > nu) expect = -expect;
        CHECK(cc.Cprime[i].a == mod(expect, 91));
    }

    // Delta P_2 of C is +-{(ell n, -1), (ell n, 1)}
    {
        DiffMultiset d(p);
        LiftedCycle p2{cc.C[44], cc.C[45], cc.C[46]};
        // a 3-vertex path has 2 edges; count them directly
        auto add_edge = [&](const Vertex& s, const Vertex& e) {
            d.add(s.a - e.a, s.b - e.b);
            d.add(e.a - s.a, e.b - s.b);
        };
        add_edge(p2[0], p2[1]);
        add_edge(p2[1], p2[2]);
        CHECK(d.count(45, 1) == 1);
        CHECK(d.count(-45, -1) == 1);
        CHECK(d.count(45, -1) == 1);
        CHECK(d.count(-45, 1) == 1);
    }

    // Delta C' contains all of Z_91^* x {0}
    DiffMultiset dcp = differences(cc.Cprime, p);
    for (int a = 1; a < 91; ++a) CHECK(dcp.count(a, 0) == 1);
}

TEST_CASE("the subpath difference lists of C and C' hold piecewise") {
    BaseCycleSet base = assembled_95();
    Params p = base.params;
    const SignMap& F = base.provenance->F;
    const SignMap& G = base.provenance->G;
    CompletionCycles cc = build_completion_cycles(p, F, G);
    const int t = p.ell * p.n;  // 45

    DiffMultiset d(p);
    auto add_path = [&](const LiftedCycle& c, int from, int to) {
        for (int i = from; i < to; ++i) {
            d.add(c[i].a - c[i + 1].a, c[i].b - c[i + 1].b);
            d.add(c[i + 1].a - c[i].a, c[i + 1].b - c[i].b);
        }
    };

    // P_1 = (c_1 .. c_{t-1}): +-{(i, -F(i)) : 2 <= i <= t-1}
    d = DiffMultiset(p);
    add_path(cc.C, 1, t - 1);
    for (int i = 2; i <= t - 1; ++i) CHECK(d.count(i, -F.get(i)) == 1);
    CHECK(d.total() == 2 * (t - 2));

    // P_3 = (c_{t+1} .. c_{2t-1}): +-{(i, -G(i)) : 2 <= i <= t-1}
    d = DiffMultiset(p);
    add_path(cc.C, t + 1, 2 * t - 1);
    for (int i = 2; i <= t - 1; ++i) CHECK(d.count(i, -G.get(i)) == 1);

    // P_4 = (c_{2t-1}, c_{2t}, c_0, c_1): +-{(1,-2), (t, 2), (1, 1)}
    d = DiffMultiset(p);
    add_path(cc.C, 2 * t - 1, 2 * t);
    d.add(cc.C[2 * t].a - cc.C[0].a, cc.C[2 * t].b - cc.C[0].b);
    d.add(cc.C[0].a - cc.C[2 * t].a, cc.C[0].b - cc.C[2 * t].b);
    d.add(cc.C[0].a - cc.C[1].a, cc.C[0].b - cc.C[1].b);
    d.add(cc.C[1].a - cc.C[0].a, cc.C[1].b - cc.C[0].b);
    CHECK(d.count(1, -2) == 1);
    CHECK(d.count(t, 2) == 1);
    CHECK(d.count(1, 1) == 1);

    // P'_1 (n odd): (Z_M^* minus {+-t}) x {0} u +-{(1, -1)}
    d = DiffMultiset(p);
    add_path(cc.Cprime, 0, t);
    for (int a = 2; a <= 2 * t - 1; ++a)
        if (a != t && a != t + 1) CHECK(d.count(a, 0) == 1);
    CHECK(d.count(1, -1) == 1);
    CHECK(d.count(1, 0) == 1);
    CHECK(d.count(t, 0) == 0);

    // P'_2 (n odd): +-(t, 0)
    d = DiffMultiset(p);
    add_path(cc.Cprime, t, t + 1);
    CHECK(d.count(t, 0) == 1);
    CHECK(d.count(-t, 0) == 1);

    // P'_3: +-{(i, G(i))}; P'_4: +-{(1, 2), (t, -2)}
    d = DiffMultiset(p);
    add_path(cc.Cprime, t + 1, 2 * t - 1);
    for (int i = 2; i <= t - 1; ++i) CHECK(d.count(i, G.get(i)) == 1);
    d = DiffMultiset(p);
    add_path(cc.Cprime, 2 * t - 1, 2 * t);
    d.add(cc.Cprime[2 * t].a - cc.Cprime[0].a, cc.Cprime[2 * t].b - cc.Cprime[0].b);
    d.add(cc.Cprime[0].a - cc.Cprime[2 * t].a, cc.Cprime[0].b - cc.Cprime[2 * t].b);
    CHECK(d.count(1, 2) == 1);
    CHECK(d.count(t, -2) == 1);
}

TEST_CASE("for every i the four values F, G, -G, -F exhaust {+-1, +-2}") {
    BaseCycleSet base = assembled_95();
    Params p = base.params;
    const SignMap& F = base.provenance->F;
    const SignMap& G = base.provenance->G;
    for (int x = 2; x <= p.ell * p.n - 1; ++x) {
        std::set<int> vals{F.get(x), G.get(x), -G.get(x), -F.get(x)};
        CHECK(vals == std::set<int>{-2, -1, 1, 2});
    }
}

TEST_CASE("anchor violations are detected") {
    BaseCycleSet base = assembled_95();
    Params p = base.params;
    // a G with the wrong alternating sum breaks the second anchor
    GResult bad = build_G(base.provenance->F, 3, p);
    CHECK_THROWS_AS(build_completion_cycles(p, base.provenance->F, bad.G),
                    AnchorViolation);
}

TEST_CASE("assemble yields the right shapes") {
    BaseCycleSet base = assembled_95();
    CHECK(base.shorts.size() == 5);
    CHECK(base.longs.size() == 4);
    CHECK(base.provenance->mu == 6);
    CHECK(base.provenance->s == 0);

    BaseCycleSet b94 = assemble(make_params(9, 4));
    CHECK(b94.shorts.size() == 4);
    CHECK(b94.longs.size() == 4);

    BaseCycleSet b136 = assemble(make_params(13, 6));
    CHECK(b136.shorts.size() == 6);
    CHECK(b136.longs.size() == 6);
}

TEST_CASE("assemble is deterministic end to end") {
    BaseCycleSet a = assemble(make_params(9, 6));
    BaseCycleSet b = assemble(make_params(9, 6));
    CHECK(a.shorts == b.shorts);
    CHECK(a.longs == b.longs);
}
