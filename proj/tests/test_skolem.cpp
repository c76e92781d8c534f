#include <doctest.h>

#include <functional>
#include <vector>

#include "hwp/skolem.hpp"

using namespace hwp;

namespace {

// independent oracle: all Skolem sequences of a small order by backtracking
std::vector<std::vector<int>> all_sequences(int n) {
    bool hooked = skolem_flavor_for(n) == SkolemFlavor::Hooked;
    int slots = 2 * n + (hooked ? 1 : 0);
    std::vector<char> used(slots + 2, 0);
    if (hooked) used[2 * n] = 1;
    std::vector<int> pos(n + 1, 0);
    std::vector<std::vector<int>> out;
    std::function<void(int)> rec = [&](int d) {
        if (d == 0) {
            out.emplace_back(pos.begin() + 1, pos.end());
            return;
        }
        for (int a = 1; a + d <= slots; ++a) {
            if (used[a] || used[a + d]) continue;
            used[a] = used[a + d] = 1;
            pos[d] = a;
            rec(d - 1);
            used[a] = used[a + d] = 0;
        }
    };
    rec(n);
    return out;
}

}  // namespace

TEST_CASE("order 1 is forced") {
    SkolemSeq s = generate_skolem(1);
    CHECK(s.entries == std::vector<int>{1});
    CHECK(s.flavor == SkolemFlavor::Ordinary);
    CHECK(validate_skolem(s));
}

TEST_CASE("order 2 is forced (hooked)") {
    // the oracle shows (1, 3) is the only hooked sequence of order 2
    auto all = all_sequences(2);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == std::vector<int>{1, 3});
    SkolemSeq s = generate_skolem(2);
    CHECK(s.flavor == SkolemFlavor::Hooked);
    CHECK(s.entries == std::vector<int>{1, 3});
}

TEST_CASE("small orders agree with the backtracking oracle") {
    for (int n = 1; n <= 8; ++n) {
        auto all = all_sequences(n);
        REQUIRE(!all.empty());
        SkolemSeq s = generate_skolem(n);
        CHECK(std::find(all.begin(), all.end(), s.entries) != all.end());
    }
    // the spec's order-4 witness is one of the oracle's solutions
    auto all4 = all_sequences(4);
    CHECK(std::find(all4.begin(), all4.end(), std::vector<int>{1, 4, 5, 3}) != all4.end());
    SkolemSeq fixture{4, {1, 4, 5, 3}, SkolemFlavor::Ordinary};
    CHECK(validate_skolem(fixture));
}

TEST_CASE("validate rejects bad sequences") {
    SkolemSeq bad{2, {2, 3}, SkolemFlavor::Hooked};  // {2,3} u {3,5} repeats 3
    CHECK_FALSE(validate_skolem(bad));
    SkolemSeq wrong_flavor{4, {1, 4, 5, 3}, SkolemFlavor::Hooked};
    CHECK_FALSE(validate_skolem(wrong_flavor));
}

TEST_CASE("generate then validate, flavors match order mod 4") {
    for (int n = 1; n <= 64; ++n) {
        SkolemSeq s = generate_skolem(n);
        CHECK(validate_skolem(s));
        bool hooked = n % 4 == 2 || n % 4 == 3;
        CHECK((s.flavor == SkolemFlavor::Hooked) == hooked);
    }
}

TEST_CASE("generation is deterministic") {
    for (int n : {3, 17, 40}) {
        CHECK(generate_skolem(n).entries == generate_skolem(n).entries);
    }
}
