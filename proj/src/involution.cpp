#include "divalg/involution.hpp"

#include <sstream>
#include <stdexcept>

#include "divalg/error.hpp"

namespace divalg {

InvolutedAlgebra::InvolutedAlgebra(CrossedProductAlgebra algebra) : algebra_(std::move(algebra)) {
    const CycloNumber& a = algebra_.a();
    if (!(conjugate(a) * a).is_one())
        throw std::invalid_argument("InvolutedAlgebra: a must satisfy conj(a) * a = 1");
    a_inverse_ = conjugate(a);
}

CrossedElement dagger(const CrossedElement& x, const InvolutedAlgebra& A) {
    const CrossedProductAlgebra& B = A.algebra();
    const size_t n = B.n();
    if (x.coeffs.size() != n) throw std::invalid_argument("dagger: algebra mismatch");
    // (x_i S^i)^dag = S^-i conj(x_i), and S^-i = a^-1 S^(n-i) for i >= 1,
    // so slot n-i receives a^-1 sigma^(n-i)(conj(x_i)).
    CrossedElement out = crossed_zero(B);
    out.coeffs[0] = conjugate(x.coeffs[0]);
    for (size_t i = 1; i < n; ++i) {
        if (x.coeffs[i].is_zero()) continue;
        const size_t k = n - i;
        out.coeffs[k] = A.a_inverse() * B.datum().apply_sigma_power(k, conjugate(x.coeffs[i]));
    }
    return out;
}

CycloNumber reduced_trace(const CrossedElement& y, const InvolutedAlgebra& A) {
    const CrossedProductAlgebra& B = A.algebra();
    if (y.coeffs.size() != B.n()) throw std::invalid_argument("reduced_trace: algebra mismatch");
    CycloNumber tr = CycloNumber::zero(B.conductor());
    for (size_t i = 0; i < B.n(); ++i) tr = tr + B.datum().apply_sigma_power(i, y.coeffs[0]);
    return tr;
}

const char* to_string(PositivityVerdict v) {
    switch (v) {
        case PositivityVerdict::positive: return "positive";
        case PositivityVerdict::inconclusive: return "inconclusive";
        case PositivityVerdict::not_positive: return "not_positive";
    }
    return "?";
}

PositivityReport positivity_report(const CrossedElement& x, const InvolutedAlgebra& A,
                                   int digits) {
    const CrossedProductAlgebra& B = A.algebra();
    if (x.is_zero()) throw std::invalid_argument("positivity_report: x must be nonzero");

    PositivityReport report;

    // Exact identity: Tr(x x^dag) equals the sigma-trace of sum x_i conj(x_i).
    const CycloNumber lhs = reduced_trace(multiply(x, dagger(x, A), B), A);
    CycloNumber quad = CycloNumber::zero(B.conductor());
    for (const CycloNumber& xi : x.coeffs) quad = quad + xi * conjugate(xi);
    CycloNumber rhs = CycloNumber::zero(B.conductor());
    for (size_t i = 0; i < B.n(); ++i) rhs = rhs + B.datum().apply_sigma_power(i, quad);
    report.symbolic_identity = (lhs == rhs);

    // Interval evaluation at every complex embedding of the base field L.
    bool all_positive = true;
    bool any_inconclusive = false;
    for (const Int& s : B.datum().base().coset_reps()) {
        PositivityReport::EmbeddingValue ev;
        ev.embedding = s;
        ev.value = complex_embed(lhs, s, digits);
        if (ev.value.definitely_positive_real())
            ev.local = PositivityVerdict::positive;
        else if (ev.value.definitely_negative_real())
            ev.local = PositivityVerdict::not_positive;
        else
            ev.local = PositivityVerdict::inconclusive;
        all_positive = all_positive && ev.local == PositivityVerdict::positive;
        any_inconclusive = any_inconclusive || ev.local == PositivityVerdict::inconclusive;
        report.values.push_back(std::move(ev));
    }
    if (!report.symbolic_identity)
        report.verdict = PositivityVerdict::not_positive;
    else if (all_positive)
        report.verdict = PositivityVerdict::positive;
    else if (any_inconclusive)
        report.verdict = PositivityVerdict::inconclusive;
    else
        report.verdict = PositivityVerdict::not_positive;
    return report;
}

bool is_unitary(const CrossedElement& g, const InvolutedAlgebra& A) {
    const CrossedProductAlgebra& B = A.algebra();
    if (multiply(dagger(g, A), g, B).is_one()) return true;
    // Not unitary; the contract still requires g to be a unit.
    (void)inverse(g, B);  // throws ZeroDivisorError when g is not invertible
    return false;
}

HermitianFormDatum HermitianFormDatum::reference_form(long dimension, const Int& d0) {
    if (dimension < 1) throw std::invalid_argument("reference_form: dimension must be >= 1");
    HermitianFormDatum f;
    f.dimension = dimension;
    f.d0 = d0;
    f.diagonal.assign(static_cast<size_t>(dimension), Rat(-1));
    f.diagonal[0] = Rat(1);
    f.signature_plus = 1;
    f.signature_minus = dimension - 1;
    return f;
}

Rat HermitianFormDatum::discriminant() const {
    Rat d(1);
    for (const Rat& q : diagonal) d *= q;
    return d;
}

NormClass HermitianFormDatum::disc_class_at(const LocalPlace& place) const {
    return norm_class(discriminant(), NormClassGroupDatum{place, d0});
}

Int witt_index_from_disc(const Rat& disc, const Int& dimension, const NormClassGroupDatum& datum) {
    if (dimension <= 0 || mod_reduce(dimension, Int(2)) != 0)
        throw std::invalid_argument("witt_index_from_disc: even dimension required");
    const Int half = dimension / 2;
    const Rat sign_half = mpz_odd_p(half.get_mpz_t()) ? Rat(-1) : Rat(1);
    // disc == (-1)^(d/2) in the norm-class group <=> Witt index d/2.
    const NormClass cls = norm_class(disc * sign_half, datum);
    return cls == NormClass::trivial ? half : half - 1;
}

GUReferenceInvariants gu_reference_invariants(long p, long r) {
    if (p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("gu_reference_invariants: p must be 3, 5, or 7");
    if (r < 1 || r > 8) throw std::invalid_argument("gu_reference_invariants: r out of range");
    GUReferenceInvariants out;
    out.p = p;
    out.r = r;
    out.n = Int(p - 1) * pow_int(Int(p), static_cast<unsigned long>(r - 1));
    out.d0 = p == 3 ? Int(-2) : (p == 5 ? Int(-1) : Int(-3));
    out.disc = mpz_odd_p(Int(out.n - 1).get_mpz_t()) ? Rat(-1) : Rat(1);

    const Int ramified = (p == 7) ? Int(3) : Int(2);
    std::vector<Int> places{ramified};
    // Sampled inert primes: d0 a non-square mod ell.
    for (Int ell = 2; places.size() < 6; ++ell) {
        if (!is_probable_prime(ell) || ell == ramified) continue;
        if (ell == 2) {
            // 2 is inert iff d0 = 5 mod 8.
            if (mod_reduce(out.d0, Int(8)) != 5) continue;
        } else {
            if (mpz_legendre(out.d0.get_mpz_t(), ell.get_mpz_t()) != -1) continue;
        }
        places.push_back(ell);
    }
    for (const Int& ell : places) {
        GUReferenceInvariants::PlaceRow row;
        row.ell = ell;
        row.ramified = (ell == ramified);
        const NormClassGroupDatum datum{LocalPlace::finite(ell), out.d0};
        row.disc_class = norm_class(out.disc, datum);
        row.witt_index = witt_index_from_disc(out.disc, out.n, datum);
        out.rows.push_back(row);
    }
    return out;
}

NormXiResult norm_xi_check() {
    // F = Q(i) inside Q(zeta_20): fixed by the residues = 1 mod 4.
    const long N = 20;
    const CycloNumber i = CycloNumber::zeta_power(N, 5);
    const CycloNumber zeta5 = CycloNumber::zeta_power(N, 4);
    const CycloNumber zeta5_inv = CycloNumber::zeta_power(N, 16);
    const CycloNumber one = CycloNumber::one(N);
    const CycloNumber xi = (one + i) * zeta5 + (one - i) * zeta5_inv;
    const SubfieldDatum f_datum(N, {Int(9), Int(13), Int(17)});
    const CycloNumber norm = rel_norm(xi, f_datum);
    if (!norm.is_rational())
        throw std::logic_error("norm_xi_check: relative norm did not land in Q");
    NormXiResult res;
    res.norm = norm.rational_value();
    res.class_at_2 = norm_class(res.norm, NormClassGroupDatum{LocalPlace::finite(Int(2)), Int(-1)});
    return res;
}

FormalSigmaMatrix::FormalSigmaMatrix(long n, size_t dim)
    : n_(n), dim_(dim), e_(dim, std::vector<std::optional<long>>(dim)) {
    if (n < 1 || dim < 1) throw std::invalid_argument("FormalSigmaMatrix: bad shape");
}

FormalSigmaMatrix FormalSigmaMatrix::identity(long n, size_t dim) {
    FormalSigmaMatrix m(n, dim);
    for (size_t i = 0; i < dim; ++i) m.e_[i][i] = 0;
    return m;
}

FormalSigmaMatrix FormalSigmaMatrix::companion(long n, size_t dim) {
    FormalSigmaMatrix m(n, dim);
    for (size_t i = 0; i + 1 < dim; ++i) m.e_[i][i + 1] = 0;  // identity blocks
    m.e_[dim - 1][0] = 1;                                     // sigma in the corner
    return m;
}

FormalSigmaMatrix FormalSigmaMatrix::multiply(const FormalSigmaMatrix& o) const {
    if (dim_ != o.dim_ || n_ != o.n_)
        throw std::invalid_argument("FormalSigmaMatrix: shape mismatch");
    FormalSigmaMatrix out(n_, dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            std::optional<long> acc;
            for (size_t k = 0; k < dim_; ++k) {
                if (!e_[i][k] || !o.e_[k][j]) continue;
                const long exp = *e_[i][k] + *o.e_[k][j];
                if (acc)
                    throw std::logic_error(
                        "FormalSigmaMatrix: sum of monomials is not a monomial");
                acc = exp;
            }
            out.e_[i][j] = acc;
        }
    return out;
}

FormalSigmaMatrix FormalSigmaMatrix::power(size_t k) const {
    FormalSigmaMatrix acc = identity(n_, dim_);
    for (size_t c = 0; c < k; ++c) acc = acc.multiply(*this);
    return acc;
}

FormalSigmaMatrix FormalSigmaMatrix::transpose() const {
    FormalSigmaMatrix out(n_, dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
            if (e_[i][j]) out.e_[j][i] = -*e_[i][j];
    return out;
}

bool FormalSigmaMatrix::equals(const FormalSigmaMatrix& o) const {
    if (dim_ != o.dim_ || n_ != o.n_) return false;
    auto norm_exp = [this](long e) { return ((e % n_) + n_) % n_; };
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            if (e_[i][j].has_value() != o.e_[i][j].has_value()) return false;
            if (e_[i][j] && norm_exp(*e_[i][j]) != norm_exp(*o.e_[i][j])) return false;
        }
    return true;
}

BlockMatrixModel block_matrix_model(long n, long m) {
    if (n < 1 || m < 1) throw std::invalid_argument("block_matrix_model: n, m must be >= 1");
    BlockMatrixModel model{n, m, FormalSigmaMatrix::companion(n, static_cast<size_t>(m)), false,
                           {}, {}};
    const size_t nm = static_cast<size_t>(n) * static_cast<size_t>(m);
    model.transpose_identity = model.s.transpose().equals(model.s.power(nm - 1));
    const FormalSigmaMatrix s_m = model.s.power(static_cast<size_t>(m));
    const FormalSigmaMatrix s_nm = model.s.power(nm);
    for (size_t i = 0; i < static_cast<size_t>(m); ++i) {
        if (!s_m.entry(i, i) || !s_nm.entry(i, i))
            throw std::logic_error("block_matrix_model: power lost diagonal support");
        model.s_to_the_m_diagonal.push_back(*s_m.entry(i, i));
        model.s_to_the_nm_diagonal.push_back(*s_nm.entry(i, i));
    }
    return model;
}

}  // namespace divalg
