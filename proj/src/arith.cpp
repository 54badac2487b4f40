#include "divalg/arith.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace divalg {

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int pow_mod(const Int& base, const Int& exp, const Int& modulus) {
    if (modulus < 1) throw std::invalid_argument("pow_mod: modulus must be >= 1");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int mod_reduce(const Int& a, const Int& modulus) {
    if (modulus < 1) throw std::invalid_argument("mod_reduce: modulus must be >= 1");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& modulus) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not invertible mod " + modulus.get_str());
    return r;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Primes below 10^6, sieved once.
const std::vector<unsigned long>& small_primes() {
    static std::once_flag flag;
    static std::vector<unsigned long> primes;
    std::call_once(flag, [] {
        const unsigned long limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        for (unsigned long p = 2; p * p <= limit; ++p)
            if (!composite[p])
                for (unsigned long q = p * p; q <= limit; q += p) composite[q] = true;
        for (unsigned long p = 2; p <= limit; ++p)
            if (!composite[p]) primes.push_back(p);
    });
    return primes;
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<Int, unsigned>> factors;
    Int rest = n;
    if (rest > 1 && !is_probable_prime(rest)) {
        for (unsigned long p : small_primes()) {
            if (Int(p) * p > rest) break;
            if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                rest /= p;
                ++e;
            }
            factors.emplace_back(Int(p), e);
            if (rest == 1 || is_probable_prime(rest)) break;
        }
    }
    if (rest > 1) {
        if (!is_probable_prime(rest))
            throw std::domain_error("factorize: composite cofactor beyond trial-division range: " +
                                    rest.get_str());
        factors.emplace_back(rest, 1u);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

Int euler_phi(const Int& n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    Int phi = 1;
    for (const auto& [p, e] : factorize(n)) phi *= pow_int(p, e - 1) * (p - 1);
    return phi;
}

Int mult_order(const Int& a, const Int& modulus) {
    if (modulus < 1) throw std::invalid_argument("mult_order: modulus must be >= 1");
    if (modulus == 1) return 1;
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) throw std::invalid_argument("mult_order: gcd(a, N) != 1");
    Int order = euler_phi(modulus);
    for (const auto& [q, e] : factorize(order)) {
        (void)e;
        while (order % q == 0 && pow_mod(a, order / q, modulus) == 1) order /= q;
    }
    return order;
}

Int crt_solve(const std::vector<std::pair<Int, Int>>& congruences) {
    if (congruences.empty()) throw std::invalid_argument("crt_solve: empty system");
    Int x = mod_reduce(congruences[0].first, congruences[0].second);
    Int m = congruences[0].second;
    for (size_t i = 1; i < congruences.size(); ++i) {
        const Int& r = congruences[i].first;
        const Int& mi = congruences[i].second;
        if (mi < 1) throw std::invalid_argument("crt_solve: modulus must be >= 1");
        Int g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
        if (g != 1) throw std::invalid_argument("crt_solve: moduli not pairwise coprime");
        // x + m*k = r mod mi
        Int k = mod_reduce((r - x) * mod_inverse(m, mi), mi);
        x += m * k;
        m *= mi;
        x = mod_reduce(x, m);
    }
    return x;
}

RationalModOne::RationalModOne(const Rat& q) : value_(q) {
    value_.canonicalize();
    Int num = value_.get_num();
    const Int den = value_.get_den();
    num = mod_reduce(num, den);
    value_ = Rat(num, den);
    value_.canonicalize();
}

RationalModOne RationalModOne::fraction(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("RationalModOne: zero denominator");
    return RationalModOne(Rat(num, den));
}

RationalModOne RationalModOne::operator+(const RationalModOne& o) const {
    return RationalModOne(value_ + o.value_);
}

RationalModOne RationalModOne::operator-() const {
    return RationalModOne(-value_);
}

std::string RationalModOne::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

UnitGroupData UnitGroupData::enumerate(const Int& modulus) {
    if (modulus < 1) throw std::invalid_argument("UnitGroupData: modulus must be >= 1");
    UnitGroupData u;
    u.modulus = modulus;
    if (modulus == 1) {
        u.elements = {Int(0)};
        return u;
    }
    for (Int a = 1; a < modulus; ++a) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
        if (g == 1) u.elements.push_back(a);
    }
    return u;
}

bool UnitGroupData::contains(const Int& a) const {
    const Int r = mod_reduce(a, modulus);
    return std::binary_search(elements.begin(), elements.end(), r);
}

std::vector<Int> UnitGroupData::cyclic_subgroup(const Int& gen) const {
    return subgroup_closure(modulus, {gen});
}

Int UnitGroupData::order_of(const Int& a) const {
    if (modulus == 1) return 1;
    return mult_order(a, modulus);
}

std::vector<Int> subgroup_closure(const Int& modulus, const std::vector<Int>& gens) {
    if (modulus == 1) return {Int(0)};
    std::set<Int> closure{Int(1)};
    std::vector<Int> work{Int(1)};
    for (const Int& g : gens) {
        Int gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), modulus.get_mpz_t());
        if (gg != 1) throw std::invalid_argument("subgroup_closure: generator not coprime to N");
    }
    while (!work.empty()) {
        Int x = work.back();
        work.pop_back();
        for (const Int& g : gens) {
            Int y = mod_reduce(x * g, modulus);
            if (closure.insert(y).second) work.push_back(y);
        }
    }
    return {closure.begin(), closure.end()};
}

SubgroupCosets subgroup_cosets(const Int& modulus, const std::vector<Int>& gens) {
    SubgroupCosets out;
    out.subgroup = subgroup_closure(modulus, gens);
    if (modulus == 1) {
        out.coset_reps = {Int(0)};
        return out;
    }
    const UnitGroupData units = UnitGroupData::enumerate(modulus);
    std::set<Int> seen;
    for (const Int& a : units.elements) {
        if (seen.count(a)) continue;
        out.coset_reps.push_back(a);  // minimal: elements are visited ascending
        for (const Int& h : out.subgroup) seen.insert(mod_reduce(a * h, modulus));
    }
    return out;
}

}  // namespace divalg
