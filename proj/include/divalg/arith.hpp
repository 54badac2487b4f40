#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace divalg {

// All integer arithmetic in the library is arbitrary precision: invariant
// denominators and group orders grow like p^alpha * (p^m - 1).
using Int = mpz_class;
using Rat = mpq_class;

/// b^e for e >= 0.
Int pow_int(const Int& base, unsigned long exp);

/// b^e mod m, m >= 1.
Int pow_mod(const Int& base, const Int& exp, const Int& modulus);

/// Least non-negative residue of a mod m, m >= 1.
Int mod_reduce(const Int& a, const Int& modulus);

/// Inverse of a mod m; throws std::invalid_argument if gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& modulus);

/// Miller-Rabin (via GMP); composite inputs essentially never pass.
bool is_probable_prime(const Int& n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
/// Trial division by primes up to 10^6 with a probable-prime shortcut for
/// the remaining cofactor; complete for n < 10^12 and for any n whose
/// second-largest prime factor is below 10^6.  Throws std::domain_error
/// when a cofactor cannot be resolved.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

/// Euler's phi function.  phi(1) = 1.
Int euler_phi(const Int& n);

/// Smallest k >= 1 with a^k = 1 mod n.  Requires gcd(a, n) = 1.
Int mult_order(const Int& a, const Int& modulus);

/// Solves x = r_i mod m_i for pairwise coprime moduli; returns the minimal
/// non-negative solution mod prod(m_i).  Throws std::invalid_argument on
/// non-coprime moduli or an empty system.
Int crt_solve(const std::vector<std::pair<Int, Int>>& congruences);

/// A Brauer-group invariant: a reduced rational in [0, 1) with addition
/// mod 1.  Zero is represented as 0/1.
class RationalModOne {
public:
    RationalModOne() : value_(0, 1) {}
    explicit RationalModOne(const Rat& q);
    static RationalModOne fraction(const Int& num, const Int& den);

    const Int numerator() const { return value_.get_num(); }
    const Int denominator() const { return value_.get_den(); }
    const Rat& as_rational() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    RationalModOne operator+(const RationalModOne& o) const;
    RationalModOne operator-() const;
    RationalModOne operator-(const RationalModOne& o) const { return *this + (-o); }
    bool operator==(const RationalModOne& o) const { return value_ == o.value_; }
    bool operator!=(const RationalModOne& o) const { return value_ != o.value_; }

    /// "num/den", e.g. "1/4"; zero prints "0/1".
    std::string str() const;

private:
    Rat value_;  // canonical, 0 <= value_ < 1
};

/// The unit group (Z/N)^x, fully enumerated.
struct UnitGroupData {
    Int modulus;
    std::vector<Int> elements;  // sorted residues coprime to N; size phi(N)

    static UnitGroupData enumerate(const Int& modulus);

    bool contains(const Int& a) const;
    /// Cyclic subgroup generated by a residue, as a sorted vector.
    std::vector<Int> cyclic_subgroup(const Int& gen) const;
    Int order_of(const Int& a) const;
};

struct SubgroupCosets {
    std::vector<Int> subgroup;    // sorted; contains 1
    std::vector<Int> coset_reps;  // minimal positive representative per coset,
                                  // ascending, so 1 labels the identity coset
};

/// Subgroup of (Z/N)^x generated by gens, plus coset representatives.
SubgroupCosets subgroup_cosets(const Int& modulus, const std::vector<Int>& gens);

/// Closure of gens under multiplication mod N (gens coprime to N).
std::vector<Int> subgroup_closure(const Int& modulus, const std::vector<Int>& gens);

}  // namespace divalg
