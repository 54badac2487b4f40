#pragma once

#include <string>

#include "divalg/arith.hpp"

namespace divalg {

/// A place of Q: a finite prime or the archimedean place.
struct LocalPlace {
    bool archimedean = false;
    Int ell;  // defined when finite

    static LocalPlace finite(const Int& prime);
    static LocalPlace infinite();

    bool operator==(const LocalPlace& o) const {
        return archimedean == o.archimedean && (archimedean || ell == o.ell);
    }
    std::string str() const;
};

/// Invariant of the unramified cyclic algebra of degree n whose parameter
/// has the given valuation: valuation/n in Q/Z.  The normalization sends
/// a uniformizer to Frobenius.
RationalModOne unramified_invariant(const Int& valuation, const Int& degree);

/// Action exponent of a unit u on p-power roots of unity under the local
/// reciprocity map, with the convention Art(u): zeta -> zeta^(u^-1) (and
/// Art(p) = Frobenius).  Requires gcd(u, p) = 1.
Int cyclotomic_artin_exponent(const Int& u, long p, long alpha);

/// Hilbert symbol (a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over the completion at v.  Classical formulas,
/// including the dyadic case.
int hilbert_symbol(const Rat& a, const Rat& b, const LocalPlace& v);

enum class NormClass { trivial, nontrivial };

inline const char* to_string(NormClass c) {
    return c == NormClass::trivial ? "trivial" : "nontrivial";
}

/// The quadratic extension Q_ell(sqrt(d))/Q_ell whose norm classes are
/// being computed.
struct NormClassGroupDatum {
    LocalPlace place;
    Int d;  // squarefree
};

/// trivial iff x is a norm from Q_ell(sqrt(d)); computed as
/// hilbert_symbol(x, d, ell) = +1.
NormClass norm_class(const Rat& x, const NormClassGroupDatum& datum);

/// Root-of-unity norm preimage in the unramified tower: an exponent e
/// with e * (ell^(dt)-1)/(ell^t-1) = omega_exp mod (ell^t - 1), so the
/// root of unity zeta^e in the degree-d extension norms down to the
/// prescribed root of unity.  omega_exp must label an actual element of
/// mu_(ell^t-1) (i.e. lie in the image of the exponent-reduction map);
/// labels of actual roots of unity always do.
Int unit_norm_preimage(const Int& ell, long t, long d, const Int& omega_exp);

}  // namespace divalg
