#pragma once

#include <cstdint>

namespace hwp {

// Derived constants of one problem instance.  The vertex set of the complete
// graph is Z_v identified with Z_M x Z_ell via CRT (gcd(M, ell) = 1 since
// M = 2*ell*n + 1 is 1 mod ell).
struct Params {
    int ell = 0;      // short cycle length, ell = 4k+1
    int k = 0;        // (ell - 1) / 4
    int n = 0;        // number of short base cycles
    int M = 0;        // long cycle length, 2*ell*n + 1
    int v = 0;        // ell * M
    int r = 0;        // factors of type [ell^M]; equals ell * n
    int r_prime = 0;  // factors of type [M^ell]; equals (ell-1)*M/2
    int x = 0;        // n
    int y = 0;        // (ell - 1) / 2

    bool operator==(const Params&) const = default;
};

// Validates (ell, n) and fills in every derived field.
// Throws EllNotSupported unless ell = 1 (mod 4) and ell >= 9, and NTooSmall
// unless n >= (ell-1)/2.
Params make_params(int ell, int n);

}  // namespace hwp
