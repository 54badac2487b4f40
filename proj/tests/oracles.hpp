#pragma once

#include "divalg/arith.hpp"

namespace divalg::testing {

// Brute-force solubility oracle for z^2 = a x^2 + b y^2 over Q_2.
//
// a and b are first reduced within their square classes to 2-valuation 0
// or 1.  A primitive solution mod 32 then certifies a 2-adic zero: the
// gradient at an odd coordinate has valuation at most 2, so vanishing mod
// 2^5 Hensel-lifts.  Conversely an exact primitive zero survives reduction.
inline bool dyadic_solubility_oracle(Int a, Int b) {
    auto reduce = [](Int v) {
        while (v % 4 == 0) v /= 4;
        return v;
    };
    a = reduce(a);
    b = reduce(b);
    const long mod = 32;
    auto sq = [&](long v) { return ((v * v) % mod + mod) % mod; };
    const long am = static_cast<long>(mod_reduce(a, Int(mod)).get_si());
    const long bm = static_cast<long>(mod_reduce(b, Int(mod)).get_si());
    for (long x = 0; x < mod; ++x)
        for (long y = 0; y < mod; ++y)
            for (long z = 0; z < mod; ++z) {
                if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
                if ((am * sq(x) + bm * sq(y) - sq(z)) % mod == 0) return true;
            }
    return false;
}

}  // namespace divalg::testing
