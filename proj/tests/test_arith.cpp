#include <doctest.h>

#include <numeric>
#include <random>

#include "divalg/arith.hpp"

using namespace divalg;

namespace {

// Independent oracle: count coprime residues directly.
long phi_bruteforce(long n) {
    if (n == 1) return 1;
    long count = 0;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("euler_phi small values against the coprime count") {
    CHECK(euler_phi(Int(1)) == 1);
    CHECK(phi_bruteforce(4) == 2);
    CHECK(euler_phi(Int(4)) == 2);
    CHECK(phi_bruteforce(8) == 4);
    CHECK(euler_phi(Int(8)) == 4);
}

TEST_CASE("euler_phi equals brute force for all N <= 10^4") {
    for (long n = 1; n <= 10000; ++n) CHECK(euler_phi(Int(n)) == phi_bruteforce(n));
}

TEST_CASE("factorize recombines and certifies prime factors") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(2, 2000000);
    for (int trial = 0; trial < 200; ++trial) {
        const Int n(dist(rng));
        Int prod = 1;
        for (const auto& [p, e] : factorize(n)) {
            CHECK(is_probable_prime(p));
            prod *= pow_int(p, e);
        }
        CHECK(prod == n);
    }
    // The classifier-sized worst case: p^m - 1 near 10^12.
    const Int big = pow_int(Int(97), 6) - 1;
    Int prod = 1;
    for (const auto& [p, e] : factorize(big)) prod *= pow_int(p, e);
    CHECK(prod == big);
}

TEST_CASE("mult_order examples") {
    CHECK(mult_order(Int(1), Int(7)) == 1);
    CHECK(mult_order(Int(5), Int(4)) == 1);  // 5 = 1 mod 4
    CHECK(mult_order(Int(3), Int(8)) == 2);  // 3^2 = 9 = 1 mod 8
    CHECK_THROWS_AS(mult_order(Int(2), Int(8)), std::invalid_argument);
}

TEST_CASE("mult_order divides euler_phi") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(2, 5000);
    int done = 0;
    while (done < 300) {
        const long n = dist(rng);
        const long a = dist(rng) % n;
        if (a < 1 || std::gcd(a, n) != 1) continue;
        const Int order = mult_order(Int(a), Int(n));
        CHECK(euler_phi(Int(n)) % order == 0);
        CHECK(pow_mod(Int(a), order, Int(n)) == 1);
        // minimality against a direct scan for small orders
        if (order < 50)
            for (Int k = 1; k < order; ++k) CHECK(pow_mod(Int(a), k, Int(n)) != 1);
        ++done;
    }
}

TEST_CASE("crt_solve examples") {
    CHECK(crt_solve({{Int(0), Int(1)}}) == 0);
    // oracle: the unique residue mod 20 that is 1 mod 4 and 0 mod 5
    long expected = -1;
    for (long x = 0; x < 20; ++x)
        if (x % 4 == 1 && x % 5 == 0) expected = x;
    CHECK(expected == 5);
    CHECK(crt_solve({{Int(1), Int(4)}, {Int(0), Int(5)}}) == expected);
    // oracle: exhaustive search mod 6
    long expected6 = -1;
    for (long x = 0; x < 6; ++x)
        if (x % 2 == 1 && x % 3 == 2) expected6 = x;
    CHECK(expected6 == 5);
    CHECK(crt_solve({{Int(1), Int(2)}, {Int(2), Int(3)}}) == expected6);
}

TEST_CASE("crt_solve reduces to each congruence and rejects bad input") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(1, 40);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<Int, Int>> system;
        Int prod = 1;
        for (int i = 0; i < 3; ++i) {
            long mi = dist(rng);
            Int g;
            mpz_gcd(g.get_mpz_t(), prod.get_mpz_t(), Int(mi).get_mpz_t());
            if (g != 1) continue;
            system.push_back({Int(dist(rng)), Int(mi)});
            prod *= mi;
        }
        if (system.empty()) continue;
        const Int x = crt_solve(system);
        CHECK(x >= 0);
        CHECK(x < prod);
        for (const auto& [r, mi] : system) CHECK(mod_reduce(x, mi) == mod_reduce(r, mi));
    }
    CHECK_THROWS_AS(crt_solve({{Int(1), Int(4)}, {Int(2), Int(6)}}), std::invalid_argument);
    CHECK_THROWS_AS(crt_solve({}), std::invalid_argument);
}

TEST_CASE("RationalModOne reduction and group laws") {
    CHECK(RationalModOne::fraction(Int(5), Int(4)) == RationalModOne::fraction(Int(1), Int(4)));
    CHECK(RationalModOne::fraction(Int(-1), Int(4)) == RationalModOne::fraction(Int(3), Int(4)));
    CHECK(RationalModOne::fraction(Int(2), Int(4)).str() == "1/2");
    CHECK(RationalModOne().is_zero());
    CHECK(RationalModOne().str() == "0/1");

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        const auto q1 = RationalModOne::fraction(Int(num(rng)), Int(den(rng)));
        const auto q2 = RationalModOne::fraction(Int(num(rng)), Int(den(rng)));
        const auto q3 = RationalModOne::fraction(Int(num(rng)), Int(den(rng)));
        CHECK((q1 + q2) + q3 == q1 + (q2 + q3));
        CHECK(q1 + q2 == q2 + q1);
        CHECK(q1 + RationalModOne() == q1);
        // complement: q + (den-num)/den = 0
        const auto complement =
            RationalModOne::fraction(q1.denominator() - q1.numerator(), q1.denominator());
        CHECK((q1 + complement).is_zero());
        CHECK((q1 + (-q1)).is_zero());
    }
}

TEST_CASE("unit group enumeration") {
    const UnitGroupData u8 = UnitGroupData::enumerate(Int(8));
    CHECK(u8.elements == std::vector<Int>{Int(1), Int(3), Int(5), Int(7)});
    CHECK(u8.elements.size() == euler_phi(Int(8)).get_ui());
    // closed under multiplication
    for (const Int& a : u8.elements)
        for (const Int& b : u8.elements) CHECK(u8.contains(a * b));
    CHECK(u8.order_of(Int(3)) == 2);
    CHECK(u8.cyclic_subgroup(Int(3)) == std::vector<Int>{Int(1), Int(3)});

    for (long n : {2L, 7L, 12L, 45L, 100L}) {
        const UnitGroupData u = UnitGroupData::enumerate(Int(n));
        CHECK(Int(static_cast<long>(u.elements.size())) == euler_phi(Int(n)));
    }
}

TEST_CASE("subgroup_cosets examples") {
    const SubgroupCosets c4 = subgroup_cosets(Int(4), {Int(1)});
    CHECK(c4.subgroup == std::vector<Int>{Int(1)});
    CHECK(c4.coset_reps == std::vector<Int>{Int(1), Int(3)});

    const SubgroupCosets c8 = subgroup_cosets(Int(8), {Int(3), Int(5), Int(7)});
    CHECK(c8.subgroup == std::vector<Int>{Int(1), Int(3), Int(5), Int(7)});
    CHECK(c8.coset_reps == std::vector<Int>{Int(1)});

    const SubgroupCosets c2 = subgroup_cosets(Int(2), {Int(1)});
    CHECK(c2.subgroup == std::vector<Int>{Int(1)});
    CHECK(c2.coset_reps == std::vector<Int>{Int(1)});
}

TEST_CASE("coset representatives are minimal and cover the unit group") {
    const SubgroupCosets c = subgroup_cosets(Int(24), {Int(5)});
    CHECK(c.coset_reps.front() == 1);
    size_t covered = 0;
    for (const Int& rep : c.coset_reps) {
        for (const Int& h : c.subgroup) {
            const Int y = mod_reduce(rep * h, Int(24));
            CHECK(y >= rep);  // rep is minimal in its coset
            ++covered;
        }
    }
    CHECK(covered == euler_phi(Int(24)).get_ui());
}

}  // TEST_SUITE
