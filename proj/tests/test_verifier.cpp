#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "hwp/completion.hpp"
#include "hwp/errors.hpp"
#include "hwp/params.hpp"
#include "hwp/verifier.hpp"

using namespace hwp;

namespace {

BaseCycleSet assembled_95() {
    static BaseCycleSet base = assemble(make_params(9, 5));
    return base;
}

std::string factor_key(const std::vector<LiftedCycle>& parts) {
    std::vector<LiftedCycle> canon;
    for (const LiftedCycle& c : parts) canon.push_back(canonical_form(c));
    std::sort(canon.begin(), canon.end());
    std::ostringstream os;
    for (const auto& c : canon) {
        for (const Vertex& u : c) os << u.a << ',' << u.b << ' ';
        os << ';';
    }
    return os.str();
}

}  // namespace

TEST_CASE("check_base passes on the assembled instance") {
    CoverageReport rep = check_base(assembled_95());
    CHECK(rep.ok);
    CHECK(rep.missing.empty());
    CHECK(rep.duplicated.empty());
    CHECK(rep.transversality_failures.empty());
}

TEST_CASE("removing C' leaves every (i, 0) uncovered") {
    BaseCycleSet base = assembled_95();
    base.longs.pop_back();  // C' is the last long cycle
    CoverageReport rep = check_base(base);
    CHECK_FALSE(rep.ok);
    std::set<std::pair<int, int>> missing(rep.missing.begin(), rep.missing.end());
    for (int a = 1; a < 91; ++a) CHECK(missing.count({a, 0}) == 1);
}

TEST_CASE("duplicating a short cycle is reported") {
    BaseCycleSet base = assembled_95();
    base.shorts.push_back(base.shorts.front());
    CoverageReport rep = check_base(base);
    CHECK_FALSE(rep.ok);
    CHECK(!rep.duplicated.empty());
}

TEST_CASE("develop produces the advertised factor counts") {
    BaseCycleSet base = assembled_95();
    Factorization fact = develop(base);
    CHECK(fact.size() == 45 + 364);
    int shorts = 0, longs = 0;
    for (int i = 0; i < fact.size(); ++i)
        (fact.ref(i).type == FactorType::ShortCycles ? shorts : longs)++;
    CHECK(shorts == 45);
    CHECK(longs == 364);
}

TEST_CASE("a short cycle's factor is M disjoint ell-cycles") {
    BaseCycleSet base = assembled_95();
    Factorization fact = develop(base);
    int idx = -1;
    for (int i = 0; i < fact.size(); ++i)
        if (fact.ref(i).type == FactorType::ShortCycles) {
            idx = i;
            break;
        }
    REQUIRE(idx >= 0);
    auto parts = fact.factor(idx);
    CHECK(parts.size() == 91);
    std::set<long long> seen;
    for (const auto& c : parts) {
        CHECK(c.size() == 9);
        for (const Vertex& u : c) CHECK(seen.insert(crt_pack(u, base.params)).second);
    }
    CHECK(seen.size() == 819);
}

TEST_CASE("develop refuses a broken base set") {
    BaseCycleSet base = assembled_95();
    base.shorts.pop_back();
    CHECK_THROWS_AS(develop(base), DevelopBeforeCheck);
}

TEST_CASE("full factorization check on (9,5)") {
    BaseCycleSet base = assembled_95();
    Factorization fact = develop(base);
    CoverageReport rep = check_factorization(fact, base.params);
    CHECK(rep.ok);
    // 409 factors x 819 edges = C(819, 2)
    CHECK(409LL * 819 == 819LL * 818 / 2);
}

TEST_CASE("reversing a factor's cycles leaves the check green") {
    BaseCycleSet base = assembled_95();
    // reversing a base cycle reverses every factor derived from it
    std::reverse(base.shorts[0].begin(), base.shorts[0].end());
    std::reverse(base.longs[0].begin(), base.longs[0].end());
    Factorization fact = develop(base);
    CHECK(check_factorization(fact, base.params).ok);
}

TEST_CASE("a missing factor breaks the edge partition") {
    BaseCycleSet base = assembled_95();
    Factorization fact = develop(base);
    fact.refs().pop_back();
    CoverageReport rep = check_factorization(fact, base.params);
    CHECK_FALSE(rep.ok);
    CHECK(!rep.missing.empty());
    CHECK(!rep.transversality_failures.empty());  // factor count off
}

TEST_CASE("translate closure: any translate of a factor is a factor") {
    BaseCycleSet base = assembled_95();
    const Params& p = base.params;
    Factorization fact = develop(base);

    std::set<std::string> all;
    for (int i = 0; i < fact.size(); ++i) all.insert(factor_key(fact.factor(i)));
    CHECK(static_cast<int>(all.size()) == fact.size());

    // translate one factor of each type by every group element
    for (int pick : {0, fact.size() - 1}) {
        auto parts = fact.factor(pick);
        for (int da = 0; da < p.M; ++da) {
            for (int db = 0; db < p.ell; ++db) {
                std::vector<LiftedCycle> moved;
                for (const auto& c : parts) {
                    LiftedCycle t;
                    for (const Vertex& u : c) t.push_back(make_vertex(u.a + da, u.b + db, p));
                    moved.push_back(std::move(t));
                }
                CHECK(all.count(factor_key(moved)) == 1);
            }
        }
    }
}
