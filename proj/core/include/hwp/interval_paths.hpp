#pragma once

#include <utility>
#include <vector>

namespace hwp {

// A request for a path of P([a,b], [c,d]) with prescribed end vertices.
// endpoint_case matches the three admissible shapes:
//   1: gamma1 = gamma2 + 1, ends (a+i, b-i), i in [0, gamma1] \ {gamma1/2}
//   2: gamma1 = gamma2,     ends (a+i, c+i), i in [0, gamma1]
//   3: gamma1 = gamma2 - 1, ends (c+i, d-i), i in [0, gamma2] \ {gamma2/2}
struct IntervalPathSpec {
    int a = 0, b = 0, c = 0, d = 0;
    int endpoint_case = 0;
    int i = 0;
};

// Vertex sequence of a path (not a cycle).
using IntervalPath = std::vector<int>;

// The end pair (w, w') demanded by the spec's case.
std::pair<int, int> interval_path_endpoints(const IntervalPathSpec& spec);

// Builds a member of P([a,b],[c,d]) with the prescribed ends, oriented to
// start at w.  Throws SpecViolation on malformed specs.
IntervalPath build_interval_path(const IntervalPathSpec& spec);

// Linear-time check of the two defining properties: every edge joins [a,b]
// to [c,d], and the differences are exactly [c-b, d-a] once per sign.
bool validate_interval_path(const IntervalPath& path, int a, int b, int c, int d);

// Exhaustive oracle; all members of P([a,b],[c,d]) up to reversal, each
// oriented with the smaller end first.  Throws TooLarge when
// (b-a) + (d-c) > 10.
std::vector<IntervalPath> enumerate_interval_paths(int a, int b, int c, int d);

}  // namespace hwp
