#pragma once

#include <string>
#include <vector>

#include "divalg/cyclotomic.hpp"

namespace divalg {

/// Cyclic Galois setup for a crossed product: subfields K c M of Q(zeta_N)
/// cut out by fixing subgroups H_K >= H_M, a generator sigma of the cyclic
/// quotient H_K/H_M of order n, and the lift chi~ of the character chi
/// with chi~(sigma^i) = i/n in [0, 1).
class CyclicGaloisDatum {
public:
    CyclicGaloisDatum(long conductor, const std::vector<Int>& base_fix_gens,
                      const std::vector<Int>& top_fix_gens, const Int& sigma_exponent);

    long conductor() const { return conductor_; }
    const SubfieldDatum& base() const { return base_; }  // K (fixing subgroup H_K)
    const SubfieldDatum& top() const { return top_; }    // M (fixing subgroup H_M)
    size_t n() const { return n_; }                      // [M : K]
    const Int& sigma_exponent() const { return sigma_; }

    /// The exponent of sigma^i as a residue mod N (i taken mod n).
    const Int& sigma_power_exponent(size_t i) const;
    GaloisElement sigma_power(size_t i) const;
    CycloNumber apply_sigma_power(size_t i, const CycloNumber& x) const;

    /// chi~ of sigma^i, the rational i/n with 0 <= i < n.
    Rat chi_tilde(size_t i) const;
    /// The power index of an element of H_K: the unique i with
    /// h*H_M = sigma^i*H_M.  Throws if h is not in H_K.
    size_t chi_index(const Int& h) const;

private:
    long conductor_;
    SubfieldDatum base_;
    SubfieldDatum top_;
    Int sigma_;
    size_t n_;
    std::vector<Int> sigma_pow_;  // sigma^i mod N for i < n
};

/// Normalized 2-cocycle from the lifted character:
///   phi(sigma^i, sigma^j) = chi~(sigma^j) - chi~(sigma^(i+j)) + chi~(sigma^i),
/// an integer equal to 0 or 1.
int cocycle_phi(size_t i, size_t j, const CyclicGaloisDatum& datum);

/// The cyclic algebra B_[a] = M<S>/(S^n = a, S x = sigma(x) S).
class CrossedProductAlgebra {
public:
    CrossedProductAlgebra(CyclicGaloisDatum datum, CycloNumber a);

    const CyclicGaloisDatum& datum() const { return datum_; }
    const CycloNumber& a() const { return a_; }
    size_t n() const { return datum_.n(); }
    long conductor() const { return datum_.conductor(); }

private:
    CyclicGaloisDatum datum_;
    CycloNumber a_;
};

/// Element sum_{i<n} x_i S^i, as its coefficient vector over M.  The
/// coefficients must lie in the top subfield M (invariant under H_M);
/// operations assume it and do not re-validate.
struct CrossedElement {
    std::vector<CycloNumber> coeffs;

    bool operator==(const CrossedElement& o) const { return coeffs == o.coeffs; }
    bool operator!=(const CrossedElement& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_one() const;
};

/// Strict ordering for sets/maps.
struct CrossedElementLess {
    bool operator()(const CrossedElement& a, const CrossedElement& b) const;
};

CrossedElement crossed_zero(const CrossedProductAlgebra& B);
CrossedElement crossed_one(const CrossedProductAlgebra& B);
/// x * S^k for x in M.
CrossedElement crossed_monomial(const CrossedProductAlgebra& B, const CycloNumber& x, size_t k);
CrossedElement crossed_scalar(const CrossedProductAlgebra& B, const CycloNumber& x);
/// The generator S.
CrossedElement crossed_s(const CrossedProductAlgebra& B);

CrossedElement add(const CrossedElement& x, const CrossedElement& y,
                   const CrossedProductAlgebra& B);
CrossedElement subtract(const CrossedElement& x, const CrossedElement& y,
                        const CrossedProductAlgebra& B);
CrossedElement multiply(const CrossedElement& x, const CrossedElement& y,
                        const CrossedProductAlgebra& B);
CrossedElement power(const CrossedElement& x, const Int& k, const CrossedProductAlgebra& B);

/// Smallest k >= 1 with x^k = 1; throws CapExceeded past `cap`.
Int crossed_element_order(const CrossedElement& x, const CrossedProductAlgebra& B,
                          size_t cap = 100000);

/// Inverse by solving the n x n linear system over M given by the regular
/// representation.  A singular system signals a zero divisor.
CrossedElement inverse(const CrossedElement& y, const CrossedProductAlgebra& B);

/// Element (x, sigma^g) of the extension group E_a = M^x x Gal(M/K) with
/// the cocycle-twisted multiplication.
struct ExtensionElement {
    CycloNumber x;
    size_t g = 0;

    bool operator==(const ExtensionElement& o) const { return g == o.g && x == o.x; }
    bool operator!=(const ExtensionElement& o) const { return !(*this == o); }
};

struct ExtensionElementLess {
    bool operator()(const ExtensionElement& a, const ExtensionElement& b) const;
};

ExtensionElement extension_identity(const CrossedProductAlgebra& B);
/// (x1, g1)(x2, g2) = (x1 * g1(x2) * a^phi(g1, g2), g1 g2).
ExtensionElement extension_multiply(const ExtensionElement& e1, const ExtensionElement& e2,
                                    const CrossedProductAlgebra& B);
ExtensionElement extension_power(const ExtensionElement& e, const Int& k,
                                 const CrossedProductAlgebra& B);
/// A monomial x S^g as a CrossedElement.
CrossedElement extension_to_crossed(const ExtensionElement& e, const CrossedProductAlgebra& B);

/// Matrix of right multiplication z -> z*y in the basis {S^i}: entry
/// (k, i) is sigma^i(y_(k-i mod n)), weighted by a when the power wraps
/// (i.e. when k < i), so that regular_rep(y) * coeffs(z) = coeffs(z*y).
std::vector<std::vector<CycloNumber>> regular_rep(const CrossedElement& y,
                                                  const CrossedProductAlgebra& B);

/// Trace of the regular representation matrix (sum of the diagonal).
CycloNumber regular_rep_trace(const CrossedElement& y, const CrossedProductAlgebra& B);

/// The induced presentation of M_k(B): tuples M^k with the twisted-shift
/// action sigma'(m_1, ..., m_k) = (m_2, ..., m_k, sigma(m_1)), realized
/// concretely as k x k matrices over B with S |-> the block companion
/// matrix (identity superdiagonal, S_B in the lower-left corner).
class InducedPresentation {
public:
    using Tuple = std::vector<CycloNumber>;
    using BMatrix = std::vector<std::vector<CrossedElement>>;

    InducedPresentation(const CrossedProductAlgebra& B, size_t k);

    size_t k() const { return k_; }
    size_t nk() const { return k_ * B_->n(); }
    const CrossedProductAlgebra& base_algebra() const { return *B_; }

    Tuple twisted_shift(const Tuple& tuple) const;

    BMatrix s_matrix() const;
    BMatrix diagonal_embed(const Tuple& tuple) const;
    BMatrix matrix_multiply(const BMatrix& x, const BMatrix& y) const;
    BMatrix matrix_power(const BMatrix& x, size_t e) const;

    /// Checks S*diag(t) = diag(sigma'(t))*S on generating tuples and
    /// S^(nk) = diag(a, ..., a).
    bool verify_relations(std::string* detail = nullptr) const;

    /// (nk)^2: the dimension of M_k(B) over the base field K.
    Int dimension_over_base() const;

private:
    const CrossedProductAlgebra* B_;
    size_t k_;
};

InducedPresentation matrix_induction(const CrossedProductAlgebra& B, size_t k);

}  // namespace divalg
