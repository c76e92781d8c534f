#include "hwp/diff_multiset.hpp"

namespace hwp {

void DiffMultiset::add_cycle(const LiftedCycle& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
        const Vertex& u = c[i];
        const Vertex& w = c[(i + 1) % n];
        add(u.a - w.a, u.b - w.b);
        add(w.a - u.a, w.b - u.b);
    }
}

bool DiffMultiset::negation_symmetric() const {
    for (int a = 0; a < M_; ++a)
        for (int b = 0; b < ell_; ++b)
            if (count(a, b) != count(-a, -b)) return false;
    return true;
}

long long DiffMultiset::total() const {
    long long t = 0;
    for (int c : counts_) t += c;
    return t;
}

DiffMultiset differences(const LiftedCycle& c, const Params& p) {
    DiffMultiset d(p);
    d.add_cycle(c);
    return d;
}

}  // namespace hwp
