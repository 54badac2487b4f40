#include <doctest.h>

#include <random>

#include "divalg/artin.hpp"
#include "oracles.hpp"

using namespace divalg;
using divalg::testing::dyadic_solubility_oracle;

TEST_SUITE("artin") {

TEST_CASE("unramified_invariant examples and additivity") {
    CHECK(unramified_invariant(Int(0), Int(6)).is_zero());
    CHECK(unramified_invariant(Int(1), Int(6)) == RationalModOne::fraction(Int(1), Int(6)));
    CHECK(unramified_invariant(Int(4), Int(6)) == RationalModOne::fraction(Int(2), Int(3)));
    CHECK(unramified_invariant(Int(7), Int(6)) == RationalModOne::fraction(Int(1), Int(6)));

    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> val(-50, 50);
    std::uniform_int_distribution<long> deg(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        const Int n(deg(rng));
        const Int v1(val(rng)), v2(val(rng));
        CHECK(unramified_invariant(v1 + v2, n) ==
              unramified_invariant(v1, n) + unramified_invariant(v2, n));
    }
}

TEST_CASE("cyclotomic_artin_exponent examples") {
    CHECK(cyclotomic_artin_exponent(Int(1), 5, 1) == 1);
    CHECK(cyclotomic_artin_exponent(Int(1), 7, 3) == 1);
    CHECK(cyclotomic_artin_exponent(Int(2), 5, 1) == 3);  // 2^-1 = 3 mod 5
    CHECK_THROWS_AS(cyclotomic_artin_exponent(Int(10), 5, 1), std::invalid_argument);

    // u of order p-1 maps to an exponent of order p-1 (a generator)
    for (long p : {5L, 7L, 11L})
        for (long alpha : {1L, 2L}) {
            const Int pa = pow_int(Int(p), static_cast<unsigned long>(alpha));
            for (Int u = 2; u < p; ++u) {
                if (mult_order(u, Int(p)) != p - 1) continue;
                const Int teich = pow_mod(u, pow_int(Int(p), static_cast<unsigned long>(alpha - 1)), pa);
                const Int s = cyclotomic_artin_exponent(teich, p, alpha);
                CHECK(mult_order(s, pa) == p - 1);
            }
        }
}

TEST_CASE("hilbert_symbol examples") {
    const LocalPlace inf = LocalPlace::infinite();
    const LocalPlace two = LocalPlace::finite(Int(2));
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long> nz(-40, 40);
    for (int trial = 0; trial < 50; ++trial) {
        long b = nz(rng);
        if (b == 0) continue;
        CHECK(hilbert_symbol(Rat(1), Rat(b), inf) == 1);  // z = x, y = 0
        CHECK(hilbert_symbol(Rat(1), Rat(b), two) == 1);
        CHECK(hilbert_symbol(Rat(1), Rat(b), LocalPlace::finite(Int(7))) == 1);
    }
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), inf) == -1);  // sums of two squares
    CHECK(dyadic_solubility_oracle(Int(-1), Int(-1)) == false);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), two) == -1);
}

TEST_CASE("hilbert_symbol at 2 agrees with the brute-force oracle, |a|,|b| <= 50") {
    const LocalPlace two = LocalPlace::finite(Int(2));
    for (long a = -50; a <= 50; ++a) {
        if (a == 0) continue;
        for (long b = -50; b <= 50; ++b) {
            if (b == 0) continue;
            const bool soluble = dyadic_solubility_oracle(Int(a), Int(b));
            CHECK((hilbert_symbol(Rat(a), Rat(b), two) == 1) == soluble);
        }
    }
}

TEST_CASE("hilbert product formula on 500 random pairs") {
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<long> nz(-10000, 10000);
    int done = 0;
    while (done < 500) {
        const long a = nz(rng), b = nz(rng);
        if (a == 0 || b == 0) continue;
        int prod = hilbert_symbol(Rat(a), Rat(b), LocalPlace::infinite());
        const Int support = Int(2) * Int(a) * Int(b);
        for (const auto& [p, e] : factorize(abs(support)))
            prod *= hilbert_symbol(Rat(a), Rat(b), LocalPlace::finite(p));
        CHECK(prod == 1);
        ++done;
    }
}

TEST_CASE("hilbert symbol is bimultiplicative and kills (a, -a)") {
    std::mt19937_64 rng(109);
    std::uniform_int_distribution<long> nz(-300, 300);
    const std::vector<LocalPlace> places{LocalPlace::infinite(), LocalPlace::finite(Int(2)),
                                         LocalPlace::finite(Int(3)), LocalPlace::finite(Int(5)),
                                         LocalPlace::finite(Int(7))};
    for (const LocalPlace& v : places) {
        int done = 0;
        while (done < 200) {
            const long a1 = nz(rng), a2 = nz(rng), b = nz(rng);
            if (a1 == 0 || a2 == 0 || b == 0) continue;
            CHECK(hilbert_symbol(Rat(a1) * Rat(a2), Rat(b), v) ==
                  hilbert_symbol(Rat(a1), Rat(b), v) * hilbert_symbol(Rat(a2), Rat(b), v));
            CHECK(hilbert_symbol(Rat(a1), Rat(-a1), v) == 1);
            ++done;
        }
    }
    // rational (non-integral) arguments reduce to their square class
    CHECK(hilbert_symbol(Rat(1, 2), Rat(-1), LocalPlace::finite(Int(2))) ==
          hilbert_symbol(Rat(2), Rat(-1), LocalPlace::finite(Int(2))));
}

TEST_CASE("norm_class examples") {
    const NormClassGroupDatum q2_i{LocalPlace::finite(Int(2)), Int(-1)};
    CHECK(norm_class(Rat(1), q2_i) == NormClass::trivial);
    // -1 = 3 mod 4 is not a norm from Q_2(i)
    CHECK(norm_class(Rat(-1), q2_i) == NormClass::nontrivial);
    // 2 = N(1 + i)
    CHECK(norm_class(Rat(2), q2_i) == NormClass::trivial);

    // norm_class is multiplicative in x
    std::mt19937_64 rng(113);
    std::uniform_int_distribution<long> nz(-200, 200);
    int done = 0;
    while (done < 200) {
        const long x = nz(rng), y = nz(rng);
        if (x == 0 || y == 0) continue;
        const int cx = norm_class(Rat(x), q2_i) == NormClass::trivial ? 1 : -1;
        const int cy = norm_class(Rat(y), q2_i) == NormClass::trivial ? 1 : -1;
        const int cxy = norm_class(Rat(x) * Rat(y), q2_i) == NormClass::trivial ? 1 : -1;
        CHECK(cxy == cx * cy);
        ++done;
    }
}

TEST_CASE("unit_norm_preimage examples and defining congruence") {
    CHECK(unit_norm_preimage(Int(2), 2, 2, Int(0)) == 0);
    CHECK(unit_norm_preimage(Int(2), 2, 2, Int(1)) == 2);  // 5e = 1 mod 3

    std::mt19937_64 rng(127);
    const std::vector<Int> primes{Int(2), Int(3), Int(5), Int(7)};
    std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<long> small_dim(1, 3);
    std::uniform_int_distribution<long> label(0, 100000);
    for (int trial = 0; trial < 1000; ++trial) {
        const Int ell = primes[pick(rng)];
        const long t = small_dim(rng);
        const long d = small_dim(rng);
        const Int big = pow_int(ell, static_cast<unsigned long>(d * t)) - 1;
        const Int small = pow_int(ell, static_cast<unsigned long>(t)) - 1;
        if (small == 1) continue;
        const Int Q = big / small;
        // a label of an actual root of unity: the exponent reduction of
        // some element zeta^(k Q) of mu_(ell^t - 1)
        const Int omega_exp = mod_reduce(Int(label(rng)) * Q, small);
        const Int e = unit_norm_preimage(ell, t, d, omega_exp);
        // raising beta = zeta^e to Q recovers the label
        CHECK(mod_reduce(e * Q, small) == omega_exp);
        CHECK(e >= 0);
        CHECK(e < big);
    }
}

TEST_CASE("local place validation") {
    CHECK_THROWS_AS(LocalPlace::finite(Int(6)), std::invalid_argument);
    CHECK(LocalPlace::infinite().str() == "oo");
    CHECK(LocalPlace::finite(Int(13)).str() == "13");
    CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(1), LocalPlace::infinite()), std::invalid_argument);
}

}  // TEST_SUITE
