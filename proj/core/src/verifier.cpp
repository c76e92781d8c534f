#include "hwp/verifier.hpp"

#include <algorithm>
#include <string>

#include "hwp/diff_multiset.hpp"
#include "hwp/errors.hpp"

namespace hwp {

namespace {

constexpr std::size_t kReportCap = 4096;  // keep pathological reports bounded

LiftedCycle translate(const LiftedCycle& c, int da, int db, const Params& p) {
    LiftedCycle out;
    out.reserve(c.size());
    for (const Vertex& u : c) out.push_back(make_vertex(u.a + da, u.b + db, p));
    return out;
}

// triangular index of the unordered pair {z1, z2}, z1 != z2, in [0, v(v-1)/2)
long long edge_index(long long z1, long long z2, long long v) {
    long long i = std::min(z1, z2), j = std::max(z1, z2);
    return i * (2 * v - i - 1) / 2 + (j - i - 1);
}

}  // namespace

CoverageReport check_base(const BaseCycleSet& base) {
    const Params& p = base.params;
    CoverageReport rep;

    if (static_cast<int>(base.shorts.size()) != p.x)
        rep.transversality_failures.push_back(
            "expected " + std::to_string(p.x) + " short cycles, found " +
            std::to_string(base.shorts.size()));
    if (static_cast<int>(base.longs.size()) != p.y)
        rep.transversality_failures.push_back(
            "expected " + std::to_string(p.y) + " long cycles, found " +
            std::to_string(base.longs.size()));

    DiffMultiset diffs(p);
    auto feed = [&](const std::vector<LiftedCycle>& cycles, CycleKind kind, const char* tag) {
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            try {
                if (!is_transversal(cycles[i], kind, p))
                    rep.transversality_failures.push_back(
                        std::string(tag) + " cycle " + std::to_string(i) + " not transversal");
            } catch (const LengthMismatch&) {
                rep.transversality_failures.push_back(
                    std::string(tag) + " cycle " + std::to_string(i) + " has wrong length");
            }
            diffs.add_cycle(cycles[i]);
        }
    };
    feed(base.shorts, CycleKind::Short, "short");
    feed(base.longs, CycleKind::Long, "long");

    for (int a = 0; a < p.M; ++a) {
        for (int b = 0; b < p.ell; ++b) {
            if (a == 0 && b == 0) continue;
            int c = diffs.count(a, b);
            if (c == 0 && rep.missing.size() < kReportCap) rep.missing.emplace_back(a, b);
            if (c >= 2 && rep.duplicated.size() < kReportCap) rep.duplicated.emplace_back(a, b);
        }
    }
    if (diffs.count(0, 0) != 0) rep.duplicated.emplace_back(0, 0);

    rep.ok = rep.missing.empty() && rep.duplicated.empty() &&
             rep.transversality_failures.empty();
    return rep;
}

std::vector<LiftedCycle> Factorization::factor(int i) const {
    const FactorRef& r = refs_[i];
    std::vector<LiftedCycle> parts;
    if (r.type == FactorType::ShortCycles) {
        const LiftedCycle& base = shorts_[r.base_index];
        parts.reserve(params_.M);
        for (int j = 0; j < params_.M; ++j)
            parts.push_back(translate(base, r.shift_a + j, r.shift_b, params_));
    } else {
        const LiftedCycle& base = longs_[r.base_index];
        parts.reserve(params_.ell);
        for (int j = 0; j < params_.ell; ++j)
            parts.push_back(translate(base, r.shift_a, r.shift_b + j, params_));
    }
    return parts;
}

Factorization develop(const BaseCycleSet& base) {
    CoverageReport rep = check_base(base);
    if (!rep.ok)
        throw DevelopBeforeCheck("base-cycle criterion fails; refusing to develop");

    const Params& p = base.params;
    std::vector<FactorRef> refs;
    refs.reserve(p.r + p.r_prime);
    for (int i = 0; i < static_cast<int>(base.shorts.size()); ++i)
        for (int b = 0; b < p.ell; ++b)
            refs.push_back(FactorRef{FactorType::ShortCycles, i, 0, b});
    for (int i = 0; i < static_cast<int>(base.longs.size()); ++i)
        for (int a = 0; a < p.M; ++a)
            refs.push_back(FactorRef{FactorType::LongCycles, i, a, 0});
    return Factorization(p, base.shorts, base.longs, std::move(refs));
}

CoverageReport check_factorization(const Factorization& fact, const Params& p) {
    CoverageReport rep;
    const long long v = p.v;
    const long long nedges = v * (v - 1) / 2;
    std::vector<bool> edge_seen(nedges, false);

    int count_short = 0, count_long = 0;
    std::vector<char> vertex_seen(v, 0);

    for (int fi = 0; fi < fact.size(); ++fi) {
        const FactorRef& r = fact.ref(fi);
        std::vector<LiftedCycle> parts = fact.factor(fi);

        const int want_parts = r.type == FactorType::ShortCycles ? p.M : p.ell;
        const int want_len = r.type == FactorType::ShortCycles ? p.ell : p.M;
        (r.type == FactorType::ShortCycles ? count_short : count_long)++;

        bool shape_ok = static_cast<int>(parts.size()) == want_parts;
        std::fill(vertex_seen.begin(), vertex_seen.end(), 0);
        long long covered = 0;
        for (const LiftedCycle& c : parts) {
            if (static_cast<int>(c.size()) != want_len) shape_ok = false;
            for (const Vertex& u : c) {
                long long z = crt_pack(u, p);
                if (vertex_seen[z]) shape_ok = false;
                vertex_seen[z] = 1;
                ++covered;
            }
        }
        if (!shape_ok || covered != v) {
            rep.transversality_failures.push_back(
                "factor " + std::to_string(fi) + " is not a spanning 2-factor of its type");
        }
        for (const LiftedCycle& c : parts) {
            const int len = static_cast<int>(c.size());
            for (int j = 0; j < len; ++j) {
                long long z1 = crt_pack(c[j], p);
                long long z2 = crt_pack(c[(j + 1) % len], p);
                if (z1 == z2) continue;
                long long e = edge_index(z1, z2, v);
                if (edge_seen[e]) {
                    if (rep.duplicated.size() < kReportCap)
                        rep.duplicated.emplace_back(static_cast<int>(std::min(z1, z2)),
                                                    static_cast<int>(std::max(z1, z2)));
                } else {
                    edge_seen[e] = true;
                }
            }
        }
    }

    if (count_short != p.r)
        rep.transversality_failures.push_back("expected r = " + std::to_string(p.r) +
                                              " short-type factors, found " +
                                              std::to_string(count_short));
    if (count_long != p.r_prime)
        rep.transversality_failures.push_back("expected r' = " + std::to_string(p.r_prime) +
                                              " long-type factors, found " +
                                              std::to_string(count_long));

    for (long long z1 = 0; z1 < v && rep.missing.size() < kReportCap; ++z1)
        for (long long z2 = z1 + 1; z2 < v; ++z2)
            if (!edge_seen[edge_index(z1, z2, v)]) {
                rep.missing.emplace_back(static_cast<int>(z1), static_cast<int>(z2));
                if (rep.missing.size() >= kReportCap) break;
            }

    rep.ok = rep.missing.empty() && rep.duplicated.empty() &&
             rep.transversality_failures.empty();
    return rep;
}

}  // namespace hwp
