#include <doctest.h>

#include <random>

#include "divalg/cyclotomic.hpp"

using namespace divalg;

namespace {

// Oracle: long division of x^n - 1 by a monic divisor, over Z.
std::vector<Int> divide_oracle(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (size_t k = num.size() - 1;; --k) {
        if (num[k] != 0 && k >= den.size() - 1) {
            const Int c = num[k];
            quot[k - (den.size() - 1)] = c;
            for (size_t j = 0; j < den.size(); ++j) num[k - (den.size() - 1) + j] -= c * den[j];
        }
        if (k == 0) break;
    }
    for (const Int& c : num) REQUIRE(c == 0);
    return quot;
}

CycloNumber random_cyclo(long N, std::mt19937_64& rng) {
    const size_t d = CycloContext::get(N)->degree();
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rat> coeffs(d);
    for (Rat& q : coeffs) {
        q = Rat(num(rng), den(rng));
        q.canonicalize();
    }
    return CycloNumber::from_coeffs(N, std::move(coeffs));
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials: examples and oracle division") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{Int(-1), Int(1)});  // x - 1

    // oracle for Phi_4: factor x^4 - 1 by Phi_1 * Phi_2 = x^2 - 1
    std::vector<Int> x4m1{Int(-1), Int(0), Int(0), Int(0), Int(1)};
    const auto phi4_oracle = divide_oracle(x4m1, {Int(-1), Int(0), Int(1)});
    CHECK(phi4_oracle == std::vector<Int>{Int(1), Int(0), Int(1)});  // x^2 + 1
    CHECK(cyclotomic_polynomial(4) == phi4_oracle);

    // oracle for Phi_5: (x^5 - 1)/(x - 1)
    std::vector<Int> x5m1{Int(-1), Int(0), Int(0), Int(0), Int(0), Int(1)};
    const auto phi5_oracle = divide_oracle(x5m1, {Int(-1), Int(1)});
    CHECK(phi5_oracle == std::vector<Int>{Int(1), Int(1), Int(1), Int(1), Int(1)});
    CHECK(cyclotomic_polynomial(5) == phi5_oracle);

    // degree phi(N), monic, for a spread of conductors
    for (long n : {2L, 3L, 6L, 8L, 12L, 15L, 20L, 24L, 42L, 100L, 105L}) {
        const auto poly = cyclotomic_polynomial(n);
        CHECK(Int(static_cast<long>(poly.size()) - 1) == euler_phi(Int(n)));
        CHECK(poly.back() == 1);
    }
}

TEST_CASE("zeta arithmetic basics") {
    const CycloNumber z = CycloNumber::zeta_power(5, 1);
    CycloNumber acc = CycloNumber::one(5);
    for (int k = 0; k < 5; ++k) acc = acc * z;
    CHECK(acc == CycloNumber::one(5));  // zeta^5 = 1 after reduction
    // zeta_4^2 = -1
    CHECK(CycloNumber::zeta_power(4, 1) * CycloNumber::zeta_power(4, 1) ==
          CycloNumber::from_rational(4, Rat(-1)));
    CHECK_THROWS_AS(CycloNumber::one(4) + CycloNumber::one(5), std::invalid_argument);
}

TEST_CASE("galois_apply examples") {
    const CycloNumber z4 = CycloNumber::zeta_power(4, 1);
    CHECK(GaloisElement(4, Int(1)).apply(z4) == z4);
    CHECK(GaloisElement(4, Int(-1)).apply(z4) == -z4);  // zeta_4^-1 = -zeta_4
    const CycloNumber z5 = CycloNumber::zeta_power(5, 1);
    CHECK(GaloisElement(5, Int(2)).apply(z5) == CycloNumber::zeta_power(5, 2));
}

TEST_CASE("galois_apply is a ring homomorphism (random)") {
    std::mt19937_64 rng(23);
    for (long N : {8L, 12L, 15L, 20L, 24L}) {
        const UnitGroupData units = UnitGroupData::enumerate(Int(N));
        std::uniform_int_distribution<size_t> pick(0, units.elements.size() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const GaloisElement g(N, units.elements[pick(rng)]);
            const CycloNumber x = random_cyclo(N, rng);
            const CycloNumber y = random_cyclo(N, rng);
            CHECK(g.apply(x * y) == g.apply(x) * g.apply(y));
            CHECK(g.apply(x + y) == g.apply(x) + g.apply(y));
        }
    }
}

TEST_CASE("conjugation is an involution") {
    std::mt19937_64 rng(29);
    for (long N : {8L, 12L, 15L, 20L, 24L}) {
        for (int trial = 0; trial < 10; ++trial) {
            const CycloNumber x = random_cyclo(N, rng);
            CHECK(conjugate(conjugate(x)) == x);
        }
    }
}

TEST_CASE("galois composition matches exponent multiplication") {
    const long N = 20;
    const UnitGroupData units = UnitGroupData::enumerate(Int(N));
    std::mt19937_64 rng(31);
    const CycloNumber x = random_cyclo(N, rng);
    for (const Int& s : units.elements)
        for (const Int& t : units.elements) {
            const GaloisElement g(N, s), h(N, t);
            CHECK(g.apply(h.apply(x)) == g.compose(h).apply(x));
        }
}

TEST_CASE("rel_norm examples") {
    std::mt19937_64 rng(37);
    const CycloNumber x = random_cyclo(12, rng);
    CHECK(rel_norm(x, SubfieldDatum(12, {Int(1)})) == x);  // trivial subgroup

    // N(1 - zeta_5) over Q: oracle is the product of the four conjugates.
    const CycloNumber one5 = CycloNumber::one(5);
    const CycloNumber arg = one5 - CycloNumber::zeta_power(5, 1);
    CycloNumber oracle = CycloNumber::one(5);
    for (long s = 1; s <= 4; ++s)
        oracle = oracle * (one5 - CycloNumber::zeta_power(5, s));
    CHECK(oracle == CycloNumber::from_rational(5, Rat(5)));
    const SubfieldDatum full5(5, {Int(2)});  // <2> = all of (Z/5)^x
    CHECK(full5.subgroup_order() == 4);
    CHECK(rel_norm(arg, full5) == oracle);

    CHECK(rel_norm(CycloNumber::zeta_power(5, 1), full5) == one5);  // zeta*zeta^2*zeta^3*zeta^4
}

TEST_CASE("rel_trace examples") {
    std::mt19937_64 rng(41);
    const CycloNumber x = random_cyclo(12, rng);
    CHECK(rel_trace(x, SubfieldDatum(12, {Int(1)})) == x);

    const SubfieldDatum full5(5, {Int(2)});
    CHECK(rel_trace(CycloNumber::zeta_power(5, 1), full5) ==
          CycloNumber::from_rational(5, Rat(-1)));  // sum of primitive 5th roots
    CHECK(rel_trace(CycloNumber::one(5), full5) == CycloNumber::from_rational(5, Rat(4)));

    const SubfieldDatum h2(20, {Int(9)});  // order-2 subgroup of (Z/20)^x
    CHECK(h2.subgroup_order() == 2);
    CHECK(rel_trace(CycloNumber::one(20), h2) == CycloNumber::from_rational(20, Rat(2)));
}

TEST_CASE("norm is multiplicative and trace is additive") {
    std::mt19937_64 rng(43);
    const SubfieldDatum sub(20, {Int(3)});
    for (int trial = 0; trial < 15; ++trial) {
        const CycloNumber x = random_cyclo(20, rng);
        const CycloNumber y = random_cyclo(20, rng);
        CHECK(rel_norm(x * y, sub) == rel_norm(x, sub) * rel_norm(y, sub));
        CHECK(rel_trace(x + y, sub) == rel_trace(x, sub) + rel_trace(y, sub));
        // results are invariant under the subgroup
        CHECK(sub.contains(rel_norm(x, sub)));
        CHECK(sub.contains(rel_trace(x, sub)));
    }
}

TEST_CASE("subfield membership and degrees") {
    const SubfieldDatum gauss(20, {Int(9), Int(13), Int(17)});  // residues = 1 mod 4
    CHECK(gauss.subgroup_order() == 4);
    CHECK(gauss.degree() == 2);  // Q(i)
    const CycloNumber i20 = CycloNumber::zeta_power(20, 5);
    CHECK(gauss.contains(i20));
    CHECK(!gauss.contains(CycloNumber::zeta_power(20, 1)));
    CHECK(gauss.coset_reps().size() == 2);
    CHECK(gauss.coset_reps().front() == 1);
}

TEST_CASE("cyclo inverse") {
    std::mt19937_64 rng(47);
    for (long N : {5L, 8L, 12L, 20L}) {
        for (int trial = 0; trial < 8; ++trial) {
            CycloNumber x = random_cyclo(N, rng);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == CycloNumber::one(N));
        }
    }
    CHECK_THROWS(CycloNumber::zero(5).inverse());
}

TEST_CASE("complex_embed examples") {
    // the constant 1 evaluates to 1 under any embedding
    const auto one = complex_embed(CycloNumber::one(12), Int(1), 50);
    CHECK(abs(one.re - 1) <= one.radius);
    CHECK(abs(one.im) <= one.radius);

    // zeta_4 at s = 1 is i, within far better than 1e-30
    const auto i_val = complex_embed(CycloNumber::zeta_power(4, 1), Int(1), 50);
    CHECK(abs(i_val.re) < BigFloat("1e-30"));
    CHECK(abs(i_val.im - 1) < BigFloat("1e-30"));

    // zeta_5 + zeta_5^-1 = 2 cos(2 pi / 5) = (sqrt(5) - 1)/2: independent
    // high-precision oracle via sqrt.
    const CycloNumber arg =
        CycloNumber::zeta_power(5, 1) + CycloNumber::zeta_power(5, 4);
    const auto val = complex_embed(arg, Int(1), 50);
    BigFloat::default_precision(80);
    const BigFloat oracle = (sqrt(BigFloat(5)) - 1) / 2;
    CHECK(abs(val.re - oracle) < BigFloat("1e-45"));
    CHECK(abs(val.im) <= val.radius);
}

TEST_CASE("complex_embed commutes with field operations within the bound") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const CycloNumber x = random_cyclo(15, rng);
        const CycloNumber y = random_cyclo(15, rng);
        const auto ex = complex_embed(x, Int(2), 40);
        const auto ey = complex_embed(y, Int(2), 40);
        const auto exy = complex_embed(x * y, Int(2), 40);
        const BigFloat re_prod = ex.re * ey.re - ex.im * ey.im;
        const BigFloat im_prod = ex.re * ey.im + ex.im * ey.re;
        const BigFloat slack = (ex.radius + ey.radius + exy.radius + BigFloat("1e-35")) *
                               (1 + abs(ex.re) + abs(ex.im) + abs(ey.re) + abs(ey.im));
        CHECK(abs(exy.re - re_prod) <= slack);
        CHECK(abs(exy.im - im_prod) <= slack);

        const auto es = complex_embed(x + y, Int(2), 40);
        CHECK(abs(es.re - (ex.re + ey.re)) <= slack);
        CHECK(abs(es.im - (ex.im + ey.im)) <= slack);
    }
}

}  // TEST_SUITE
