#include "divalg/crossed.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "divalg/error.hpp"

namespace divalg {

CyclicGaloisDatum::CyclicGaloisDatum(long conductor, const std::vector<Int>& base_fix_gens,
                                     const std::vector<Int>& top_fix_gens,
                                     const Int& sigma_exponent)
    : conductor_(conductor),
      base_(conductor, base_fix_gens),
      top_(conductor, top_fix_gens),
      sigma_(mod_reduce(sigma_exponent, Int(conductor))) {
    for (const Int& h : top_.subgroup())
        if (!base_.subgroup_contains(h))
            throw std::invalid_argument("CyclicGaloisDatum: H_M must be contained in H_K");
    if (!base_.subgroup_contains(sigma_))
        throw std::invalid_argument("CyclicGaloisDatum: sigma must lie in H_K");
    n_ = base_.subgroup_order() / top_.subgroup_order();

    // Walk sigma^i until the class returns to H_M; the walk must close
    // after exactly n steps or sigma does not generate the quotient.
    sigma_pow_.reserve(n_);
    Int cur(1);
    for (size_t i = 0; i < n_; ++i) {
        sigma_pow_.push_back(cur);
        if (i > 0 && top_.subgroup_contains(cur))
            throw std::invalid_argument("CyclicGaloisDatum: sigma does not generate H_K/H_M");
        cur = mod_reduce(cur * sigma_, Int(conductor_));
    }
    if (!top_.subgroup_contains(cur))
        throw std::invalid_argument("CyclicGaloisDatum: sigma^n is not trivial on M");
}

const Int& CyclicGaloisDatum::sigma_power_exponent(size_t i) const {
    return sigma_pow_[i % n_];
}

GaloisElement CyclicGaloisDatum::sigma_power(size_t i) const {
    return GaloisElement(conductor_, sigma_pow_[i % n_]);
}

CycloNumber CyclicGaloisDatum::apply_sigma_power(size_t i, const CycloNumber& x) const {
    return sigma_power(i).apply(x);
}

Rat CyclicGaloisDatum::chi_tilde(size_t i) const {
    Rat q(Int(i % n_), Int(n_));
    q.canonicalize();
    return q;
}

size_t CyclicGaloisDatum::chi_index(const Int& h) const {
    const Int hr = mod_reduce(h, Int(conductor_));
    if (!base_.subgroup_contains(hr))
        throw std::invalid_argument("chi_index: element not in H_K");
    for (size_t i = 0; i < n_; ++i) {
        // h in sigma^i H_M  <=>  h * sigma^-i in H_M
        const Int inv = conductor_ == 1 ? Int(0) : mod_inverse(sigma_pow_[i], Int(conductor_));
        if (top_.subgroup_contains(mod_reduce(hr * inv, Int(conductor_)))) return i;
    }
    throw std::logic_error("chi_index: coset decomposition failed");
}

int cocycle_phi(size_t i, size_t j, const CyclicGaloisDatum& datum) {
    const size_t n = datum.n();
    const Rat value =
        datum.chi_tilde(j % n) - datum.chi_tilde((i + j) % n) + datum.chi_tilde(i % n);
    if (value.get_den() != 1) throw std::logic_error("cocycle_phi: non-integral value");
    const Int num = value.get_num();
    if (num != 0 && num != 1) throw std::logic_error("cocycle_phi: value outside {0, 1}");
    return static_cast<int>(num.get_si());
}

CrossedProductAlgebra::CrossedProductAlgebra(CyclicGaloisDatum datum, CycloNumber a)
    : datum_(std::move(datum)), a_(std::move(a)) {
    if (a_.conductor() != datum_.conductor())
        throw std::invalid_argument("CrossedProductAlgebra: a has the wrong conductor");
    if (a_.is_zero()) throw std::invalid_argument("CrossedProductAlgebra: a must be nonzero");
    if (!datum_.base().contains(a_))
        throw std::invalid_argument("CrossedProductAlgebra: a must lie in the base field K");
}

bool CrossedElement::is_zero() const {
    for (const CycloNumber& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool CrossedElement::is_one() const {
    if (coeffs.empty() || !coeffs[0].is_one()) return false;
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) return false;
    return true;
}

bool CrossedElementLess::operator()(const CrossedElement& a, const CrossedElement& b) const {
    if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        int c = CycloNumber::compare(a.coeffs[i], b.coeffs[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

CrossedElement crossed_zero(const CrossedProductAlgebra& B) {
    CrossedElement e;
    e.coeffs.assign(B.n(), CycloNumber::zero(B.conductor()));
    return e;
}

CrossedElement crossed_one(const CrossedProductAlgebra& B) {
    CrossedElement e = crossed_zero(B);
    e.coeffs[0] = CycloNumber::one(B.conductor());
    return e;
}

CrossedElement crossed_monomial(const CrossedProductAlgebra& B, const CycloNumber& x, size_t k) {
    if (k >= B.n()) throw std::invalid_argument("crossed_monomial: power out of range");
    CrossedElement e = crossed_zero(B);
    e.coeffs[k] = x;
    return e;
}

CrossedElement crossed_scalar(const CrossedProductAlgebra& B, const CycloNumber& x) {
    return crossed_monomial(B, x, 0);
}

CrossedElement crossed_s(const CrossedProductAlgebra& B) {
    if (B.n() == 1) return crossed_scalar(B, CycloNumber::one(B.conductor()));
    return crossed_monomial(B, CycloNumber::one(B.conductor()), 1);
}

namespace {

void check_element(const CrossedElement& x, const CrossedProductAlgebra& B, const char* who) {
    if (x.coeffs.size() != B.n()) throw std::invalid_argument(std::string(who) + ": algebra mismatch");
    for (const CycloNumber& c : x.coeffs)
        if (c.conductor() != B.conductor())
            throw std::invalid_argument(std::string(who) + ": algebra mismatch");
}

}  // namespace

CrossedElement add(const CrossedElement& x, const CrossedElement& y,
                   const CrossedProductAlgebra& B) {
    check_element(x, B, "add");
    check_element(y, B, "add");
    CrossedElement r = crossed_zero(B);
    for (size_t i = 0; i < B.n(); ++i) r.coeffs[i] = x.coeffs[i] + y.coeffs[i];
    return r;
}

CrossedElement subtract(const CrossedElement& x, const CrossedElement& y,
                        const CrossedProductAlgebra& B) {
    check_element(x, B, "subtract");
    check_element(y, B, "subtract");
    CrossedElement r = crossed_zero(B);
    for (size_t i = 0; i < B.n(); ++i) r.coeffs[i] = x.coeffs[i] - y.coeffs[i];
    return r;
}

CrossedElement multiply(const CrossedElement& x, const CrossedElement& y,
                        const CrossedProductAlgebra& B) {
    check_element(x, B, "multiply");
    check_element(y, B, "multiply");
    const size_t n = B.n();
    // (x_i S^i)(y_j S^j) = x_i sigma^i(y_j) S^(i+j), and S^(i+j) folds to
    // a * S^(i+j-n) past the top.  Wrapped contributions are collected
    // separately and multiplied by a once.
    CrossedElement plain = crossed_zero(B);
    CrossedElement wrapped = crossed_zero(B);
    for (size_t i = 0; i < n; ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y.coeffs[j].is_zero()) continue;
            const CycloNumber term = x.coeffs[i] * B.datum().apply_sigma_power(i, y.coeffs[j]);
            if (i + j < n)
                plain.coeffs[i + j] = plain.coeffs[i + j] + term;
            else
                wrapped.coeffs[i + j - n] = wrapped.coeffs[i + j - n] + term;
        }
    }
    CrossedElement r = crossed_zero(B);
    for (size_t k = 0; k < n; ++k) {
        r.coeffs[k] = plain.coeffs[k];
        if (!wrapped.coeffs[k].is_zero()) r.coeffs[k] = r.coeffs[k] + wrapped.coeffs[k] * B.a();
    }
    return r;
}

CrossedElement power(const CrossedElement& x, const Int& k, const CrossedProductAlgebra& B) {
    if (k < 0) return power(inverse(x, B), -k, B);
    Int e = k;
    CrossedElement acc = crossed_one(B);
    CrossedElement base = x;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = multiply(acc, base, B);
        e >>= 1;
        if (e > 0) base = multiply(base, base, B);
    }
    return acc;
}

Int crossed_element_order(const CrossedElement& x, const CrossedProductAlgebra& B, size_t cap) {
    CrossedElement acc = x;
    Int k = 1;
    while (!acc.is_one()) {
        acc = multiply(acc, x, B);
        ++k;
        if (k > static_cast<long>(cap))
            throw CapExceeded("crossed_element_order: cap exceeded (element may have infinite order)");
    }
    return k;
}

std::vector<std::vector<CycloNumber>> regular_rep(const CrossedElement& y,
                                                  const CrossedProductAlgebra& B) {
    check_element(y, B, "regular_rep");
    const size_t n = B.n();
    std::vector<std::vector<CycloNumber>> mat(n,
                                              std::vector<CycloNumber>(n, CycloNumber::zero(B.conductor())));
    for (size_t col = 0; col < n; ++col) {
        // Column col is S^col * y expressed in the basis {S^k}.
        for (size_t j = 0; j < n; ++j) {
            if (y.coeffs[j].is_zero()) continue;
            const size_t k = (col + j) % n;
            CycloNumber entry = B.datum().apply_sigma_power(col, y.coeffs[j]);
            if (col + j >= n) entry = entry * B.a();
            mat[k][col] = entry;
        }
    }
    return mat;
}

CycloNumber regular_rep_trace(const CrossedElement& y, const CrossedProductAlgebra& B) {
    const auto mat = regular_rep(y, B);
    CycloNumber tr = CycloNumber::zero(B.conductor());
    for (size_t k = 0; k < mat.size(); ++k) tr = tr + mat[k][k];
    return tr;
}

CrossedElement inverse(const CrossedElement& y, const CrossedProductAlgebra& B) {
    check_element(y, B, "inverse");
    if (y.is_zero()) throw ZeroDivisorError("inverse: zero element");
    const size_t n = B.n();
    // Solve regular_rep(y) * c = e_0 over M by Gaussian elimination; z
    // with coefficients c then satisfies z*y = 1.
    auto mat = regular_rep(y, B);
    std::vector<CycloNumber> rhs(n, CycloNumber::zero(B.conductor()));
    rhs[0] = CycloNumber::one(B.conductor());
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && mat[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw ZeroDivisorError("inverse: singular regular representation (zero divisor)");
        std::swap(mat[pivot], mat[col]);
        std::swap(rhs[pivot], rhs[col]);
        const CycloNumber inv_pivot = mat[col][col].inverse();
        for (size_t j = col; j < n; ++j) mat[col][j] = mat[col][j] * inv_pivot;
        rhs[col] = rhs[col] * inv_pivot;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || mat[row][col].is_zero()) continue;
            const CycloNumber factor = mat[row][col];
            for (size_t j = col; j < n; ++j)
                mat[row][j] = mat[row][j] - factor * mat[col][j];
            rhs[row] = rhs[row] - factor * rhs[col];
        }
    }
    CrossedElement z;
    z.coeffs = std::move(rhs);
    // Left inverse of a unit in a finite-dimensional algebra is two-sided.
    if (!multiply(y, z, B).is_one())
        throw ZeroDivisorError("inverse: one-sided inverse only (zero divisor)");
    return z;
}

bool ExtensionElementLess::operator()(const ExtensionElement& a, const ExtensionElement& b) const {
    if (a.g != b.g) return a.g < b.g;
    return CycloNumber::compare(a.x, b.x) < 0;
}

ExtensionElement extension_identity(const CrossedProductAlgebra& B) {
    return ExtensionElement{CycloNumber::one(B.conductor()), 0};
}

ExtensionElement extension_multiply(const ExtensionElement& e1, const ExtensionElement& e2,
                                    const CrossedProductAlgebra& B) {
    if (e1.x.is_zero() || e2.x.is_zero())
        throw std::invalid_argument("extension_multiply: elements of E_a have nonzero M-part");
    ExtensionElement r;
    r.x = e1.x * B.datum().apply_sigma_power(e1.g, e2.x);
    if (cocycle_phi(e1.g, e2.g, B.datum()) == 1) r.x = r.x * B.a();
    r.g = (e1.g + e2.g) % B.n();
    return r;
}

ExtensionElement extension_power(const ExtensionElement& e, const Int& k,
                                 const CrossedProductAlgebra& B) {
    if (k < 0) throw std::invalid_argument("extension_power: negative exponent unsupported");
    Int c = k;
    ExtensionElement acc = extension_identity(B);
    ExtensionElement base = e;
    while (c > 0) {
        if (mpz_odd_p(c.get_mpz_t())) acc = extension_multiply(acc, base, B);
        c >>= 1;
        if (c > 0) base = extension_multiply(base, base, B);
    }
    return acc;
}

CrossedElement extension_to_crossed(const ExtensionElement& e, const CrossedProductAlgebra& B) {
    return crossed_monomial(B, e.x, e.g % B.n());
}

InducedPresentation::InducedPresentation(const CrossedProductAlgebra& B, size_t k)
    : B_(&B), k_(k) {
    if (k < 1) throw std::invalid_argument("matrix_induction: k must be >= 1");
}

InducedPresentation::Tuple InducedPresentation::twisted_shift(const Tuple& tuple) const {
    if (tuple.size() != k_) throw std::invalid_argument("twisted_shift: tuple size mismatch");
    Tuple out;
    out.reserve(k_);
    for (size_t i = 1; i < k_; ++i) out.push_back(tuple[i]);
    out.push_back(B_->datum().apply_sigma_power(1, tuple[0]));
    return out;
}

InducedPresentation::BMatrix InducedPresentation::s_matrix() const {
    BMatrix mat(k_, std::vector<CrossedElement>(k_, crossed_zero(*B_)));
    for (size_t i = 0; i + 1 < k_; ++i) mat[i][i + 1] = crossed_one(*B_);
    mat[k_ - 1][0] = crossed_s(*B_);
    return mat;
}

InducedPresentation::BMatrix InducedPresentation::diagonal_embed(const Tuple& tuple) const {
    if (tuple.size() != k_) throw std::invalid_argument("diagonal_embed: tuple size mismatch");
    BMatrix mat(k_, std::vector<CrossedElement>(k_, crossed_zero(*B_)));
    for (size_t i = 0; i < k_; ++i) mat[i][i] = crossed_scalar(*B_, tuple[i]);
    return mat;
}

InducedPresentation::BMatrix InducedPresentation::matrix_multiply(const BMatrix& x,
                                                                  const BMatrix& y) const {
    BMatrix out(k_, std::vector<CrossedElement>(k_, crossed_zero(*B_)));
    for (size_t i = 0; i < k_; ++i)
        for (size_t l = 0; l < k_; ++l) {
            if (x[i][l].is_zero()) continue;
            for (size_t j = 0; j < k_; ++j) {
                if (y[l][j].is_zero()) continue;
                out[i][j] = add(out[i][j], multiply(x[i][l], y[l][j], *B_), *B_);
            }
        }
    return out;
}

InducedPresentation::BMatrix InducedPresentation::matrix_power(const BMatrix& x, size_t e) const {
    BMatrix acc(k_, std::vector<CrossedElement>(k_, crossed_zero(*B_)));
    for (size_t i = 0; i < k_; ++i) acc[i][i] = crossed_one(*B_);
    for (size_t c = 0; c < e; ++c) acc = matrix_multiply(acc, x);
    return acc;
}

bool InducedPresentation::verify_relations(std::string* detail) const {
    const BMatrix S = s_matrix();
    // Twist relation on generating tuples: zeta in each slot, and the
    // all-ones tuple.
    std::vector<Tuple> probes;
    Tuple ones(k_, CycloNumber::one(B_->conductor()));
    probes.push_back(ones);
    for (size_t slot = 0; slot < k_; ++slot) {
        Tuple t(k_, CycloNumber::one(B_->conductor()));
        t[slot] = CycloNumber::zeta_power(B_->conductor(), 1);
        probes.push_back(t);
    }
    for (const Tuple& t : probes) {
        const BMatrix lhs = matrix_multiply(S, diagonal_embed(t));
        const BMatrix rhs = matrix_multiply(diagonal_embed(twisted_shift(t)), S);
        if (lhs != rhs) {
            if (detail) *detail = "twisted-shift relation failed";
            return false;
        }
    }
    const BMatrix Snk = matrix_power(S, nk());
    const CrossedElement a_scalar = crossed_scalar(*B_, B_->a());
    for (size_t i = 0; i < k_; ++i)
        for (size_t j = 0; j < k_; ++j) {
            const CrossedElement& want = (i == j) ? a_scalar : crossed_zero(*B_);
            if (Snk[i][j] != want) {
                if (detail) *detail = "S^(nk) != diag(a, ..., a)";
                return false;
            }
        }
    return true;
}

Int InducedPresentation::dimension_over_base() const {
    const Int d(static_cast<long>(nk()));
    return d * d;
}

InducedPresentation matrix_induction(const CrossedProductAlgebra& B, size_t k) {
    return InducedPresentation(B, k);
}

}  // namespace divalg
