#pragma once

#include <cstdint>
#include <vector>

#include "hwp/cycles.hpp"
#include "hwp/errors.hpp"

namespace hwp {

// Odd-symmetric partial map from Z_M to {+-1, +-2}: setting x -> s also sets
// -x -> -s.  Domain membership is tracked with a 0 sentinel (values are
// never 0).
class SignMap {
public:
    SignMap() = default;
    explicit SignMap(int M) : M_(M), val_(M, 0) {}

    int M() const { return M_; }
    bool empty() const { return M_ == 0; }

    bool has(long long x) const { return val_[mod(x, M_)] != 0; }

    int get(long long x) const {
        int v = val_[mod(x, M_)];
        if (v == 0) throw DomainGap("sign map undefined at " + std::to_string(mod(x, M_)));
        return v;
    }

    void set(long long x, int s) {
        int xr = mod(x, M_);
        int xn = mod(-x, M_);
        if (xr == 0 || xr == xn) throw SpecViolation("sign map cannot be set at 0");
        if (val_[xr] != 0 && val_[xr] != s)
            throw DomainOverlap("conflicting sign at " + std::to_string(xr));
        val_[xr] = static_cast<std::int8_t>(s);
        val_[xn] = static_cast<std::int8_t>(-s);
    }

    // Number of x with defined value (counting both x and -x).
    int domain_size() const {
        int c = 0;
        for (int v : val_) c += (v != 0);
        return c;
    }

private:
    int M_ = 0;
    std::vector<std::int8_t> val_;
};

// sum_{i=lo}^{hi} (-1)^i sigma(i); every i in [lo, hi] must be in the domain.
int alternating_sum(const SignMap& sigma, int lo, int hi);

}  // namespace hwp
