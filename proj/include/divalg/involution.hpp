#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divalg/artin.hpp"
#include "divalg/crossed.hpp"

namespace divalg {

/// A crossed product D' = M<T>/(T^n = a, ...) carrying the involution of
/// the second kind determined by x -> conj(x) on M and T -> a^-1 T^(n-1)
/// (= T^-1).  Requires conj(a) * a = 1 and a fixed by sigma.
class InvolutedAlgebra {
public:
    explicit InvolutedAlgebra(CrossedProductAlgebra algebra);

    const CrossedProductAlgebra& algebra() const { return algebra_; }
    size_t n() const { return algebra_.n(); }
    const CycloNumber& a_inverse() const { return a_inverse_; }

private:
    CrossedProductAlgebra algebra_;
    CycloNumber a_inverse_;
};

/// The involution: monomials reverse, M-coefficients conjugate, and each
/// S^-i folds to a^-1 S^(n-i).
CrossedElement dagger(const CrossedElement& x, const InvolutedAlgebra& A);

/// Tr(y) = sum of sigma^i(y_0): the trace of right multiplication by y as
/// an M-linear map, an element of the base field L.
CycloNumber reduced_trace(const CrossedElement& y, const InvolutedAlgebra& A);

enum class PositivityVerdict { positive, inconclusive, not_positive };

const char* to_string(PositivityVerdict v);

struct PositivityReport {
    bool symbolic_identity = false;  // Tr(x x^dag) = Tr_quadratic(sum x_i conj(x_i)) exactly
    struct EmbeddingValue {
        Int embedding;  // exponent s of the embedding of L
        ComplexEnclosure value;
        PositivityVerdict local = PositivityVerdict::inconclusive;
    };
    std::vector<EmbeddingValue> values;
    PositivityVerdict verdict = PositivityVerdict::inconclusive;
};

/// Two-tier positivity of Tr(x x^dag): the exact algebraic identity plus
/// interval evaluation at every complex embedding of L.  An interval
/// containing zero yields an inconclusive verdict, never a boolean.
PositivityReport positivity_report(const CrossedElement& x, const InvolutedAlgebra& A,
                                   int digits = 50);

/// g^dag g = 1, exactly.  Throws ZeroDivisorError for non-invertible g.
bool is_unitary(const CrossedElement& g, const InvolutedAlgebra& A);

/// Diagonal hermitian form bookkeeping over F = Q(sqrt(d0)).
struct HermitianFormDatum {
    long dimension = 0;
    std::vector<Rat> diagonal;
    Int d0;                            // F = Q(sqrt(d0))
    long signature_plus = 0;           // archimedean signature (r, s)
    long signature_minus = 0;
    std::optional<Rat> alternating_scale;  // the 2*delta scalar of the
                                           // associated alternating form

    static HermitianFormDatum reference_form(long dimension, const Int& d0);

    Rat discriminant() const;  // product of the diagonal
    NormClass disc_class_at(const LocalPlace& place) const;
};

/// Per-place discriminant classes and Witt indices of the reference form
/// diag(1, -1, ..., -1) for the configuration at p (degree n = (p-1)p^(r-1)).
struct GUReferenceInvariants {
    long p = 0;
    long r = 1;
    Int n;   // form dimension
    Int d0;  // quadratic field
    Rat disc;  // (-1)^(n-1)
    struct PlaceRow {
        Int ell;
        bool ramified = false;
        NormClass disc_class = NormClass::trivial;
        Int witt_index;
    };
    std::vector<PlaceRow> rows;  // the ramified prime and sampled inert primes
};

/// Witt index rule for even dimension d: index d/2 when disc matches
/// (-1)^(d/2) in the local norm-class group, d/2 - 1 otherwise.
Int witt_index_from_disc(const Rat& disc, const Int& dimension, const NormClassGroupDatum& datum);

GUReferenceInvariants gu_reference_invariants(long p, long r = 1);

struct NormXiResult {
    Rat norm;              // exact value of N_(M/F)((1+i)zeta_5 + (1-i)zeta_5^-1)
    NormClass class_at_2;  // its class mod norms from Q_2(i)
};

/// The p = 5 determinant computation: the relative norm from Q(zeta_20)
/// down to Q(i) of (1+i)zeta_5 + (1-i)zeta_5^-1, expected -4.
NormXiResult norm_xi_check();

/// m x m block companion matrix over a formal symbol sigma subject to
/// sigma^n = 1, with the transpose rule sigma^T = sigma^-1.  Entries are
/// monomials sigma^k or zero.
class FormalSigmaMatrix {
public:
    FormalSigmaMatrix(long n, size_t dim);  // zero matrix

    static FormalSigmaMatrix identity(long n, size_t dim);
    static FormalSigmaMatrix companion(long n, size_t dim);  // the S matrix

    size_t dim() const { return dim_; }
    long sigma_order() const { return n_; }
    const std::optional<long>& entry(size_t i, size_t j) const { return e_[i][j]; }
    void set_entry(size_t i, size_t j, std::optional<long> exp) { e_[i][j] = std::move(exp); }

    FormalSigmaMatrix multiply(const FormalSigmaMatrix& o) const;
    FormalSigmaMatrix power(size_t k) const;
    FormalSigmaMatrix transpose() const;  // entrywise sigma^e -> sigma^-e
    /// Equality with exponents compared mod n.
    bool equals(const FormalSigmaMatrix& o) const;

private:
    long n_;
    size_t dim_;
    std::vector<std::vector<std::optional<long>>> e_;  // exponent of sigma, or empty for 0
};

struct BlockMatrixModel {
    long n = 0;
    long m = 0;
    FormalSigmaMatrix s;
    bool transpose_identity = false;  // transpose(S) == S^(nm-1)
    std::vector<long> s_to_the_m_diagonal;   // exponents on the diagonal of S^m
    std::vector<long> s_to_the_nm_diagonal;  // raw exponents on the diagonal of S^(nm)
};

/// Lemma-style combinatorial model of the block matrix for S, with the
/// two formal identities checked.
BlockMatrixModel block_matrix_model(long n, long m);

}  // namespace divalg
