#pragma once

#include <random>

#include "divalg/crossed.hpp"

namespace divalg::testing {

// A cyclic datum with base K = Q: conductor a prime P = 1 mod n, H_K the
// full unit group, H_M its index-n subgroup, sigma a primitive root.
inline CrossedProductAlgebra rational_base_algebra(size_t n, const Rat& a_value) {
    static const std::map<size_t, long> conductor_for_n{{1, 3},  {2, 5},  {3, 7},  {4, 5},
                                                        {5, 11}, {6, 7},  {7, 29}, {8, 17},
                                                        {9, 19}, {10, 11}, {11, 23}, {12, 13}};
    const long P = conductor_for_n.at(n);
    Int g = 0;
    for (Int cand = 2; cand < P; ++cand)
        if (mult_order(cand, Int(P)) == P - 1) {
            g = cand;
            break;
        }
    const Int h = pow_mod(g, Int(static_cast<long>(n)), Int(P));
    const UnitGroupData units = UnitGroupData::enumerate(Int(P));
    CyclicGaloisDatum datum(P, units.elements, {h}, g);
    return CrossedProductAlgebra(datum, CycloNumber::from_rational(P, a_value));
}

// A cyclic datum with full top field M = Q(zeta_P): H_M trivial, H_K the
// order-n subgroup of (Z/P)^x, K its fixed field, a a Gauss period in K.
inline CrossedProductAlgebra full_top_algebra(size_t n) {
    static const std::map<size_t, long> conductor_for_n{{1, 3}, {2, 3},  {3, 7}, {4, 5},
                                                        {5, 11}, {6, 7}, {8, 17}, {10, 11},
                                                        {12, 13}};
    const long P = conductor_for_n.at(n);
    Int g = 0;
    for (Int cand = 2; cand < P; ++cand)
        if (mult_order(cand, Int(P)) == P - 1) {
            g = cand;
            break;
        }
    const Int sigma = pow_mod(g, Int((P - 1) / static_cast<long>(n)), Int(P));
    CyclicGaloisDatum datum(P, {sigma}, {Int(1)}, sigma);
    // Gauss period: the H_K-trace of zeta, always nonzero.
    CycloNumber period = CycloNumber::zero(P);
    for (const Int& h : datum.base().subgroup())
        period = period + CycloNumber::zeta_power(P, static_cast<long>(h.get_si()));
    return CrossedProductAlgebra(datum, period);
}

inline CycloNumber random_m_element(const CrossedProductAlgebra& B, std::mt19937_64& rng,
                                    bool allow_zero = false) {
    const long N = B.conductor();
    const size_t d = CycloContext::get(N)->degree();
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        std::vector<Rat> coeffs(d);
        for (Rat& q : coeffs) {
            q = Rat(num(rng), den(rng));
            q.canonicalize();
        }
        CycloNumber raw = CycloNumber::from_coeffs(N, std::move(coeffs));
        CycloNumber sym = CycloNumber::zero(N);
        for (const Int& h : B.datum().top().subgroup())
            sym = sym + GaloisElement(N, h).apply(raw);
        if (allow_zero || !sym.is_zero()) return sym;
    }
}

inline CrossedElement random_crossed_element(const CrossedProductAlgebra& B, std::mt19937_64& rng,
                                             bool dense = true) {
    CrossedElement x = crossed_zero(B);
    for (size_t i = 0; i < B.n(); ++i) x.coeffs[i] = random_m_element(B, rng, !dense);
    return x;
}

}  // namespace divalg::testing
