#include "hwp/sign_map.hpp"

namespace hwp {

int alternating_sum(const SignMap& sigma, int lo, int hi) {
    int s = 0;
    for (int i = lo; i <= hi; ++i) {
        int term = sigma.get(i);
        s += (i % 2 == 0) ? term : -term;
    }
    return s;
}

}  // namespace hwp
