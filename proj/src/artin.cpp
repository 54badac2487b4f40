#include "divalg/artin.hpp"

#include <stdexcept>

namespace divalg {

LocalPlace LocalPlace::finite(const Int& prime) {
    if (prime < 2 || !is_probable_prime(prime))
        throw std::invalid_argument("LocalPlace: finite tag must be prime");
    return LocalPlace{false, prime};
}

LocalPlace LocalPlace::infinite() { return LocalPlace{true, Int(0)}; }

std::string LocalPlace::str() const { return archimedean ? "oo" : ell.get_str(); }

RationalModOne unramified_invariant(const Int& valuation, const Int& degree) {
    if (degree < 1) throw std::invalid_argument("unramified_invariant: degree must be >= 1");
    return RationalModOne::fraction(valuation, degree);
}

Int cyclotomic_artin_exponent(const Int& u, long p, long alpha) {
    if (p < 2 || alpha < 1) throw std::invalid_argument("cyclotomic_artin_exponent: bad p, alpha");
    if (mod_reduce(u, Int(p)) == 0)
        throw std::invalid_argument("cyclotomic_artin_exponent: u divisible by p");
    const Int modulus = pow_int(Int(p), static_cast<unsigned long>(alpha));
    return mod_inverse(mod_reduce(u, modulus), modulus);
}

namespace {

// a as an integer in the same square class: num * den.
Int square_class_rep(const Rat& a) {
    Rat q = a;
    q.canonicalize();
    return q.get_num() * q.get_den();
}

// (value, unit) with value = v_ell(a), a = ell^value * unit.
std::pair<long, Int> split_valuation(const Int& a, const Int& ell) {
    long v = 0;
    Int u = a;
    while (mpz_divisible_p(u.get_mpz_t(), ell.get_mpz_t())) {
        u /= ell;
        ++v;
    }
    return {v, u};
}

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// (u - 1)/2 mod 2 for odd u.
int eps2(const Int& u) {
    return mod_reduce((u - 1) / 2, Int(2)).get_si() == 1 ? 1 : 0;
}

// (u^2 - 1)/8 mod 2 for odd u.
int omega2(const Int& u) {
    return mod_reduce((u * u - 1) / 8, Int(2)).get_si() == 1 ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const LocalPlace& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    const Int A = square_class_rep(a);
    const Int B = square_class_rep(b);
    if (v.archimedean) return (A < 0 && B < 0) ? -1 : 1;
    const Int& ell = v.ell;
    const auto [alpha, u] = split_valuation(A, ell);
    const auto [beta, w] = split_valuation(B, ell);
    if (ell == 2) {
        int e = (eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u)) % 2;
        return e == 0 ? 1 : -1;
    }
    // (a, b)_ell = (-1)^(alpha beta eps(ell)) (u|ell)^beta (w|ell)^alpha
    int sign = 1;
    const int eps_ell = mod_reduce((ell - 1) / 2, Int(2)).get_si() == 1 ? 1 : 0;
    if ((alpha % 2) && (beta % 2) && eps_ell) sign = -sign;
    if (beta % 2) sign *= legendre(u, ell);
    if (alpha % 2) sign *= legendre(w, ell);
    return sign;
}

NormClass norm_class(const Rat& x, const NormClassGroupDatum& datum) {
    if (x == 0) throw std::invalid_argument("norm_class: x must be nonzero");
    return hilbert_symbol(x, Rat(datum.d), datum.place) == 1 ? NormClass::trivial
                                                             : NormClass::nontrivial;
}

Int unit_norm_preimage(const Int& ell, long t, long d, const Int& omega_exp) {
    if (ell < 2 || !is_probable_prime(ell))
        throw std::invalid_argument("unit_norm_preimage: ell must be prime");
    if (t < 1 || d < 1) throw std::invalid_argument("unit_norm_preimage: t, d must be >= 1");
    const Int big = pow_int(ell, static_cast<unsigned long>(d) * static_cast<unsigned long>(t)) - 1;
    const Int small = pow_int(ell, static_cast<unsigned long>(t)) - 1;
    const Int Q = big / small;  // exact: the norm exponent on roots of unity
    if (small == 1) return Int(0);
    const Int w = mod_reduce(omega_exp, small);
    const Int q = mod_reduce(Q, small);
    Int g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), small.get_mpz_t());
    if (mod_reduce(w, g) != 0)
        throw std::invalid_argument(
            "unit_norm_preimage: omega_exp does not label a root of unity of mu_(ell^t-1)");
    const Int reduced_mod = small / g;
    const Int e = mod_reduce((w / g) * mod_inverse(q / g, reduced_mod), reduced_mod);
    return e;
}

}  // namespace divalg
