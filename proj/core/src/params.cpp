#include "hwp/params.hpp"

#include <string>

#include "hwp/errors.hpp"

namespace hwp {

Params make_params(int ell, int n) {
    if (ell == 5)
        throw EllNotSupported("ell = 5 is covered by the earlier small-case construction; "
                              "this generator requires ell >= 9");
    if (ell < 9 || ell % 4 != 1)
        throw EllNotSupported("ell must be 1 (mod 4) and >= 9, got " + std::to_string(ell));
    const int k = (ell - 1) / 4;
    if (n < 2 * k)
        throw NTooSmall("n must be at least (ell-1)/2 = " + std::to_string(2 * k) +
                        ", got " + std::to_string(n));

    Params p;
    p.ell = ell;
    p.k = k;
    p.n = n;
    p.M = 2 * ell * n + 1;
    p.v = ell * p.M;
    p.r = ell * n;
    p.r_prime = (ell - 1) * p.M / 2;
    p.x = n;
    p.y = (ell - 1) / 2;

    // counting identity behind the factor split
    if (2LL * ell * p.x + 2LL * p.M * p.y != 1LL * ell * p.M - 1)
        throw Error("internal: counting identity failed");
    return p;
}

}  // namespace hwp
