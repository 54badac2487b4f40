#include "divalg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "divalg/error.hpp"

namespace divalg {

namespace {

// Exact division of integer polynomials, divisor monic.  Coefficients
// low-to-high; remainder must vanish.
std::vector<Int> poly_divide_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    if (den.empty() || den.back() != 1)
        throw std::logic_error("poly_divide_exact: divisor must be monic");
    const size_t dd = den.size() - 1;
    if (rem.size() < den.size()) throw std::logic_error("poly_divide_exact: degree underflow");
    std::vector<Int> quot(rem.size() - dd, Int(0));
    for (size_t k = rem.size() - 1;; --k) {
        const Int c = rem[k];
        if (c != 0) {
            quot[k - dd] = c;
            for (size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den[j];
        }
        if (k == dd) break;
    }
    for (const Int& r : rem)
        if (r != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

std::map<long, std::vector<Int>>& cyclo_poly_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}
std::mutex cyclo_poly_mutex;

}  // namespace

std::vector<Int> cyclotomic_polynomial(long conductor) {
    if (conductor < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be >= 1");
    std::lock_guard<std::mutex> lock(cyclo_poly_mutex);
    auto it = cyclo_poly_cache().find(conductor);
    if (it != cyclo_poly_cache().end()) return it->second;
    // Divisors are resolved iteratively so the cache mutex is held once.
    std::vector<long> todo{conductor};
    while (!todo.empty()) {
        long n = todo.back();
        if (cyclo_poly_cache().count(n)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (long d = 1; d < n; ++d)
            if (n % d == 0 && !cyclo_poly_cache().count(d)) {
                todo.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        todo.pop_back();
        if (n == 1) {
            cyclo_poly_cache()[1] = {Int(-1), Int(1)};
            continue;
        }
        std::vector<Int> poly(static_cast<size_t>(n) + 1, Int(0));
        poly[0] = -1;
        poly[static_cast<size_t>(n)] = 1;
        for (long d = 1; d < n; ++d)
            if (n % d == 0) poly = poly_divide_exact(poly, cyclo_poly_cache()[d]);
        cyclo_poly_cache()[n] = std::move(poly);
    }
    return cyclo_poly_cache()[conductor];
}

CycloContext::CycloContext(long conductor) : conductor_(conductor) {
    phi_poly_ = cyclotomic_polynomial(conductor);
    degree_ = phi_poly_.size() - 1;
    // zeta^k mod Phi_N for 0 <= k < N, by repeated shift-and-reduce.
    zeta_pow_.reserve(static_cast<size_t>(conductor));
    std::vector<Int> cur(degree_, Int(0));
    cur[0] = 1;
    zeta_pow_.push_back(cur);
    for (long k = 1; k < conductor; ++k) {
        std::vector<Int> next(degree_, Int(0));
        const Int top = cur[degree_ - 1];
        for (size_t j = degree_ - 1; j > 0; --j) next[j] = cur[j - 1];
        next[0] = 0;
        if (top != 0)
            for (size_t j = 0; j < degree_; ++j) next[j] -= top * phi_poly_[j];
        zeta_pow_.push_back(next);
        cur = std::move(next);
    }
}

std::shared_ptr<const CycloContext> CycloContext::get(long conductor) {
    if (conductor < 1) throw std::invalid_argument("CycloContext: conductor must be >= 1");
    if (conductor > 20000) throw std::invalid_argument("CycloContext: conductor too large");
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const CycloContext>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(conductor);
    if (it != registry.end()) return it->second;
    auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(conductor));
    registry[conductor] = ctx;
    return ctx;
}

const std::vector<Int>& CycloContext::zeta_power(long k) const {
    long r = k % conductor_;
    if (r < 0) r += conductor_;
    return zeta_pow_[static_cast<size_t>(r)];
}

CycloNumber::CycloNumber(std::shared_ptr<const CycloContext> ctx)
    : ctx_(std::move(ctx)), c_(ctx_->degree(), Rat(0)) {}

CycloNumber CycloNumber::zero(long conductor) {
    return CycloNumber(CycloContext::get(conductor));
}

CycloNumber CycloNumber::one(long conductor) {
    CycloNumber x(CycloContext::get(conductor));
    x.c_[0] = 1;
    return x;
}

CycloNumber CycloNumber::from_rational(long conductor, const Rat& value) {
    CycloNumber x(CycloContext::get(conductor));
    x.c_[0] = value;
    x.c_[0].canonicalize();
    return x;
}

CycloNumber CycloNumber::zeta_power(long conductor, long k) {
    CycloNumber x(CycloContext::get(conductor));
    const std::vector<Int>& rep = x.ctx_->zeta_power(k);
    for (size_t j = 0; j < rep.size(); ++j) x.c_[j] = Rat(rep[j]);
    return x;
}

CycloNumber CycloNumber::from_coeffs(long conductor, std::vector<Rat> coeffs) {
    CycloNumber x(CycloContext::get(conductor));
    if (coeffs.size() != x.ctx_->degree())
        throw std::invalid_argument("CycloNumber: coefficient vector must have length phi(N)");
    for (Rat& q : coeffs) q.canonicalize();
    x.c_ = std::move(coeffs);
    return x;
}

bool CycloNumber::is_zero() const {
    for (const Rat& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycloNumber::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Rat CycloNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycloNumber: not rational");
    return c_[0];
}

void CycloNumber::check_same(const CycloNumber& o) const {
    if (!ctx_ || !o.ctx_) throw std::invalid_argument("CycloNumber: uninitialized operand");
    if (ctx_->conductor() != o.ctx_->conductor())
        throw std::invalid_argument("CycloNumber: conductor mismatch");
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    check_same(o);
    CycloNumber r(ctx_);
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] + o.c_[j];
    return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    check_same(o);
    CycloNumber r(ctx_);
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] - o.c_[j];
    return r;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r(ctx_);
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = -c_[j];
    return r;
}

CycloNumber CycloNumber::operator*(const Rat& scalar) const {
    CycloNumber r(ctx_);
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] * scalar;
    return r;
}

namespace {

// Clears denominators: out_i = num(c_i) * (den_lcm / den(c_i)).
Int scale_to_integers(const std::vector<Rat>& c, std::vector<Int>& out) {
    Int den(1);
    for (const Rat& q : c)
        if (q != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    out.assign(c.size(), Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out[i] = c[i].get_num() * (den / c[i].get_den());
    return den;
}

}  // namespace

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    check_same(o);
    const size_t d = ctx_->degree();
    // Integer convolution over a common denominator, then the upper half
    // reduced through the zeta power table; one rational division at the
    // end keeps mpq canonicalization out of the inner loops.
    std::vector<Int> x, y;
    const Int dx = scale_to_integers(c_, x);
    const Int dy = scale_to_integers(o.c_, y);
    std::vector<Int> prod(2 * d - 1, Int(0));
    for (size_t i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (y[j] == 0) continue;
            prod[i + j] += x[i] * y[j];
        }
    }
    for (size_t k = d; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        const std::vector<Int>& rep = ctx_->zeta_power(static_cast<long>(k));
        for (size_t j = 0; j < d; ++j)
            if (rep[j] != 0) prod[j] += prod[k] * rep[j];
    }
    const Int den = dx * dy;
    CycloNumber r(ctx_);
    for (size_t j = 0; j < d; ++j) {
        if (prod[j] == 0) continue;
        r.c_[j] = Rat(prod[j], den);
        r.c_[j].canonicalize();
    }
    return r;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
    check_same(o);
    return c_ == o.c_;
}

int CycloNumber::compare(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
    for (size_t j = 0; j < a.c_.size(); ++j) {
        int c = cmp(a.c_[j], b.c_[j]);
        if (c != 0) return c;
    }
    return 0;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw ZeroDivisorError("CycloNumber: inverse of zero");
    if (is_rational()) {
        Rat recip(c_[0].get_den(), c_[0].get_num());
        recip.canonicalize();
        return from_rational(conductor(), recip);
    }
    // 1/x = (product of the other conjugates) / Norm(x).
    const long n = conductor();
    CycloNumber prod = CycloNumber::one(n);
    for (Int s = 2; s < n; ++s) {
        Int g;
        Int N(n);
        mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), N.get_mpz_t());
        if (g != 1) continue;
        prod = prod * GaloisElement(n, s).apply(*this);
    }
    CycloNumber norm = prod * (*this);
    if (!norm.is_rational() || norm.c_[0] == 0)
        throw std::logic_error("CycloNumber: norm computation failed");
    Rat recip(norm.c_[0].get_den(), norm.c_[0].get_num());
    recip.canonicalize();
    return prod * recip;
}

std::string CycloNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        os << c_[j].get_str();
        if (j > 0) os << "*z^" << j;
        first = false;
    }
    if (first) os << "0";
    os << " (z = zeta_" << conductor() << ")";
    return os.str();
}

GaloisElement::GaloisElement(long conductor, const Int& exponent) : conductor_(conductor) {
    if (conductor < 1) throw std::invalid_argument("GaloisElement: conductor must be >= 1");
    exponent_ = mod_reduce(exponent, Int(conductor));
    if (conductor == 1) {
        exponent_ = 0;
        return;
    }
    Int g;
    Int N(conductor);
    mpz_gcd(g.get_mpz_t(), exponent_.get_mpz_t(), N.get_mpz_t());
    if (g != 1) throw std::invalid_argument("GaloisElement: exponent not coprime to conductor");
}

CycloNumber GaloisElement::apply(const CycloNumber& x) const {
    if (x.conductor() != conductor_)
        throw std::invalid_argument("GaloisElement: conductor mismatch");
    const auto& ctx = x.context();
    const size_t d = ctx->degree();
    const long s = static_cast<long>(exponent_.get_si());
    // Integer accumulation over the common denominator of the input.
    Int den(1);
    for (const Rat& q : x.coeffs())
        if (q != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> acc(d, Int(0));
    for (size_t j = 0; j < d; ++j) {
        const Rat& q = x.coeffs()[j];
        if (q == 0) continue;
        const Int scaled = q.get_num() * (den / q.get_den());
        const long e = static_cast<long>((static_cast<long long>(j) * s) % conductor_);
        const std::vector<Int>& rep = ctx->zeta_power(e);
        for (size_t i = 0; i < d; ++i)
            if (rep[i] != 0) acc[i] += scaled * rep[i];
    }
    std::vector<Rat> out(d, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (acc[i] == 0) continue;
        out[i] = Rat(acc[i], den);
        out[i].canonicalize();
    }
    return CycloNumber::from_coeffs(conductor_, std::move(out));
}

GaloisElement GaloisElement::compose(const GaloisElement& o) const {
    if (conductor_ != o.conductor_)
        throw std::invalid_argument("GaloisElement: conductor mismatch");
    return GaloisElement(conductor_, exponent_ * o.exponent_);
}

GaloisElement GaloisElement::inverse() const {
    if (conductor_ == 1) return *this;
    return GaloisElement(conductor_, mod_inverse(exponent_, Int(conductor_)));
}

CycloNumber galois_apply(const GaloisElement& g, const CycloNumber& x) {
    return g.apply(x);
}

CycloNumber conjugate(const CycloNumber& x) {
    return GaloisElement(x.conductor(), Int(-1)).apply(x);
}

SubfieldDatum::SubfieldDatum(long conductor, const std::vector<Int>& subgroup_gens)
    : conductor_(conductor) {
    subgroup_ = subgroup_closure(Int(conductor), subgroup_gens);
}

size_t SubfieldDatum::degree() const {
    const Int phi = euler_phi(Int(conductor_));
    return static_cast<size_t>(phi.get_ui()) / subgroup_.size();
}

bool SubfieldDatum::subgroup_contains(const Int& s) const {
    const Int r = mod_reduce(s, Int(conductor_));
    return std::binary_search(subgroup_.begin(), subgroup_.end(), r);
}

bool SubfieldDatum::contains(const CycloNumber& x) const {
    if (x.conductor() != conductor_) return false;
    for (const Int& h : subgroup_) {
        if (h == 1) continue;
        if (GaloisElement(conductor_, h).apply(x) != x) return false;
    }
    return true;
}

std::vector<Int> SubfieldDatum::coset_reps() const {
    std::vector<Int> gens = subgroup_;
    return subgroup_cosets(Int(conductor_), gens).coset_reps;
}

CycloNumber rel_norm(const CycloNumber& x, const SubfieldDatum& sub) {
    if (x.conductor() != sub.conductor())
        throw std::invalid_argument("rel_norm: conductor mismatch");
    CycloNumber prod = CycloNumber::one(x.conductor());
    for (const Int& h : sub.subgroup()) prod = prod * GaloisElement(sub.conductor(), h).apply(x);
    return prod;
}

CycloNumber rel_trace(const CycloNumber& x, const SubfieldDatum& sub) {
    if (x.conductor() != sub.conductor())
        throw std::invalid_argument("rel_trace: conductor mismatch");
    CycloNumber sum = CycloNumber::zero(x.conductor());
    for (const Int& h : sub.subgroup()) sum = sum + GaloisElement(sub.conductor(), h).apply(x);
    return sum;
}

namespace {

std::string float_to_string(const BigFloat& v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

}  // namespace

std::string ComplexEnclosure::re_str() const { return float_to_string(re, digits + 5); }
std::string ComplexEnclosure::im_str() const { return float_to_string(im, digits + 5); }
std::string ComplexEnclosure::radius_str() const { return float_to_string(radius, 5); }

ComplexEnclosure complex_embed(const CycloNumber& x, const Int& s, int digits) {
    if (digits < 1 || digits > 10000)
        throw std::invalid_argument("complex_embed: digits out of range");
    const long N = x.conductor();
    if (N > 1) {
        Int g;
        Int NN(N);
        mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), NN.get_mpz_t());
        if (g != 1) throw std::invalid_argument("complex_embed: s not coprime to N");
    }
    const unsigned old_prec = BigFloat::default_precision();
    BigFloat::default_precision(static_cast<unsigned>(digits) + 20);
    ComplexEnclosure out;
    out.digits = digits;
    try {
        const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
        BigFloat re(0), im(0), abs_sum(0);
        const long ss = static_cast<long>(mod_reduce(s, Int(N)).get_si());
        for (size_t j = 0; j < x.coeffs().size(); ++j) {
            const Rat& q = x.coeffs()[j];
            if (q == 0) continue;
            BigFloat coeff(q.get_mpq_t());
            const long e = static_cast<long>((static_cast<long long>(j) * ss) % N);
            BigFloat angle = two_pi * e / N;
            re += coeff * cos(angle);
            im += coeff * sin(angle);
            abs_sum += abs(coeff);
        }
        // Heuristic error bound: the working precision carries ~20 decimal
        // guard digits past the requested accuracy.
        BigFloat radius = (abs_sum + 1) * pow(BigFloat(10), -(digits + 5));
        out.re = re;
        out.im = im;
        out.radius = radius;
    } catch (...) {
        BigFloat::default_precision(old_prec);
        throw;
    }
    BigFloat::default_precision(old_prec);
    return out;
}

}  // namespace divalg
