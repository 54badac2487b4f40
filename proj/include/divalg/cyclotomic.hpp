#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <memory>
#include <string>
#include <vector>

#include "divalg/arith.hpp"

namespace divalg {

/// The N-th cyclotomic polynomial, monic of degree phi(N), coefficients
/// low-to-high.
std::vector<Int> cyclotomic_polynomial(long conductor);

/// Shared per-conductor data: Phi_N and the reductions of zeta^k for
/// 0 <= k < N in the power basis {zeta^j : 0 <= j < phi(N)}.
class CycloContext {
public:
    static std::shared_ptr<const CycloContext> get(long conductor);

    long conductor() const { return conductor_; }
    size_t degree() const { return degree_; }  // phi(N)
    const std::vector<Int>& minimal_polynomial() const { return phi_poly_; }
    /// zeta^k reduced mod Phi_N; k is taken mod N.
    const std::vector<Int>& zeta_power(long k) const;

private:
    explicit CycloContext(long conductor);
    long conductor_;
    size_t degree_;
    std::vector<Int> phi_poly_;
    std::vector<std::vector<Int>> zeta_pow_;
};

/// Exact element of Q(zeta_N), canonically reduced mod Phi_N, so equality
/// is coefficient-wise.
class CycloNumber {
public:
    CycloNumber() = default;
    explicit CycloNumber(std::shared_ptr<const CycloContext> ctx);  // zero
    static CycloNumber zero(long conductor);
    static CycloNumber one(long conductor);
    static CycloNumber from_rational(long conductor, const Rat& value);
    static CycloNumber zeta_power(long conductor, long k);
    static CycloNumber from_coeffs(long conductor, std::vector<Rat> coeffs);

    long conductor() const { return ctx_->conductor(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const std::shared_ptr<const CycloContext>& context() const { return ctx_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// The rational value; throws if not rational.
    Rat rational_value() const;

    CycloNumber operator+(const CycloNumber&) const;
    CycloNumber operator-(const CycloNumber&) const;
    CycloNumber operator*(const CycloNumber&) const;
    CycloNumber operator-() const;
    CycloNumber operator*(const Rat& scalar) const;
    bool operator==(const CycloNumber&) const;
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    /// Multiplicative inverse via the product of all conjugates; throws
    /// ZeroDivisorError on zero.
    CycloNumber inverse() const;

    /// Total order for use in sets/maps (conductor, then coefficients).
    static int compare(const CycloNumber& a, const CycloNumber& b);

    std::string str() const;

private:
    std::shared_ptr<const CycloContext> ctx_;
    std::vector<Rat> c_;  // size phi(N)

    void check_same(const CycloNumber& o) const;
};

/// Galois automorphism zeta_N -> zeta_N^s, s coprime to N.  Composition
/// multiplies exponents mod N; [-1] is complex conjugation.
class GaloisElement {
public:
    GaloisElement(long conductor, const Int& exponent);

    long conductor() const { return conductor_; }
    const Int& exponent() const { return exponent_; }

    CycloNumber operator()(const CycloNumber& x) const { return apply(x); }
    CycloNumber apply(const CycloNumber& x) const;

    GaloisElement compose(const GaloisElement& o) const;
    GaloisElement inverse() const;
    bool operator==(const GaloisElement& o) const {
        return conductor_ == o.conductor_ && exponent_ == o.exponent_;
    }

private:
    long conductor_;
    Int exponent_;  // least positive residue mod N, coprime to N
};

CycloNumber galois_apply(const GaloisElement& g, const CycloNumber& x);
/// Complex conjugation [-1].
CycloNumber conjugate(const CycloNumber& x);

/// A subfield of Q(zeta_N), represented by its fixing subgroup
/// H <= (Z/N)^x.  The fixed field has degree phi(N)/|H| over Q.
class SubfieldDatum {
public:
    SubfieldDatum(long conductor, const std::vector<Int>& subgroup_gens);

    long conductor() const { return conductor_; }
    const std::vector<Int>& subgroup() const { return subgroup_; }
    size_t subgroup_order() const { return subgroup_.size(); }
    /// Degree of the fixed field over Q.
    size_t degree() const;
    bool subgroup_contains(const Int& s) const;

    /// Membership: x is invariant under every element of H.
    bool contains(const CycloNumber& x) const;

    /// One representative per coset of H in (Z/N)^x (the complex
    /// embeddings of the fixed field), minimal and ascending.
    std::vector<Int> coset_reps() const;

private:
    long conductor_;
    std::vector<Int> subgroup_;  // sorted closure
};

/// prod_{h in H} h(x); the relative norm onto the fixed field of H.
CycloNumber rel_norm(const CycloNumber& x, const SubfieldDatum& sub);
/// sum_{h in H} h(x).
CycloNumber rel_trace(const CycloNumber& x, const SubfieldDatum& sub);

using BigFloat = boost::multiprecision::mpfr_float;

/// Numeric value of a cyclotomic number under zeta_N -> exp(2*pi*i*s/N),
/// with a heuristic error radius both components stay within.
struct ComplexEnclosure {
    BigFloat re;
    BigFloat im;
    BigFloat radius;
    int digits = 0;

    bool definitely_positive_real() const { return re - radius > 0 && abs(im) <= radius; }
    bool definitely_negative_real() const { return re + radius < 0 && abs(im) <= radius; }
    bool contains_zero_on_real_axis() const {
        return !definitely_positive_real() && !definitely_negative_real();
    }

    std::string re_str() const;
    std::string im_str() const;
    std::string radius_str() const;
};

/// Evaluate x at the embedding zeta_N = exp(2*pi*i*s/N) with the given
/// number of decimal digits.  Requires gcd(s, N) = 1.
ComplexEnclosure complex_embed(const CycloNumber& x, const Int& s, int digits = 50);

}  // namespace divalg
