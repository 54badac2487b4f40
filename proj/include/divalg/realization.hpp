#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divalg/arith.hpp"
#include "divalg/crossed.hpp"
#include "divalg/groups.hpp"

namespace divalg {

/// The numeric degree condition phi(p^m - 1) in {m, 2m}.
bool realizability_condition(long p, long m);

struct ClassifierRow {
    long p = 0;
    long m = 0;
    long alpha = 0;
    bool condition_holds = false;
    bool paper_verdict = false;  // the classification's realizable list
    bool discrepancy = false;
    std::string note;
};

/// One row per (p, m, alpha) for odd primes p <= p_max, plus p = 2 rows
/// indexed by r = alpha (realizable for r > 2).  Rows where the numeric
/// condition and the verdict disagree carry a discrepancy note.
std::vector<ClassifierRow> classify(long p_max, long m_max, long alpha_max);

struct CosetData {
    Int modulus;                      // p^m - 1
    std::vector<Int> subgroup;        // <p> mod p^m - 1
    size_t pair_count = 0;            // k
    std::vector<Int> t_list;          // representatives, t_1 = 1 first
    std::vector<Int> conjugate_reps;  // representative of each paired coset
    bool cm_check = true;             // -1 not in <p>
};

/// Cosets of <p> <= (Z/(p^m-1))^x grouped into conjugate pairs under [-1].
/// Requires p odd and p^m - 1 > 2 (the p = 3, m = 1 case is degenerate and
/// handled by its callers); throws std::domain_error when -1 lies in <p>.
CosetData coset_data(long p, long m);

struct InvariantProfile {
    long p = 0;
    long m = 0;
    long alpha = 0;
    Int n;  // (p-1) p^(alpha-1) m
    struct Place {
        Int t;
        bool conjugate = false;
        RationalModOne inv;
    };
    std::vector<Place> places;

    RationalModOne total() const;
};

/// Local invariants t_i/n at y_i and -t_i/n at the conjugate place.
InvariantProfile invariant_profile(long p, long m, long alpha);

/// The concrete division algebra D' = M<T>/(T^(p-1) = omega, Tx = sigma(x)T)
/// over L, together with the field tower and the embedded generators.
struct DPrime {
    long p = 0;
    long m = 0;
    long alpha = 0;
    long conductor = 0;

    CrossedProductAlgebra algebra;  // base K = L, top M, sigma, a = omega
    SubfieldDatum field_f;          // F
    CycloNumber omega;
    CycloNumber zeta;
    Int artin_exponent;  // the action of sigma on zeta_(p^alpha)
    Int t_canonical;     // CRT of the Artin exponent with 1 mod (p^m - 1)

    CrossedElement a_embedded;  // omega * zeta
    CrossedElement b_embedded;  // T
};

/// Builds D'.  For p = 3, m = 1, F = Q(sqrt(-2)), omega = -1 and the
/// conductor is lcm(8, 3^alpha).  sigma is computed from the reciprocity
/// convention for m = 1; an override (an exponent of order p-1 modulo
/// p^alpha) demonstrates generator independence.
DPrime build_dprime(long p, long m, long alpha,
                    const std::optional<Int>& sigma_override_mod_palpha = std::nullopt);

struct EmbeddingCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EmbeddingReport {
    long p = 0;
    long m = 0;
    long alpha = 0;
    Int expected_order;
    size_t subgroup_order = 0;
    std::vector<EmbeddingCheck> checks;
    bool all_pass = false;
    std::vector<CrossedElement> subgroup;  // the embedded G_alpha, when closed
};

/// Runs the five embedding checks: order of a, the conjugation relation,
/// the power relation b^(p-1) = a^(p^alpha) (exact for m = 1), the closure
/// cardinality, and brute-force isomorphism with the abstract presentation.
/// Failures are reported structurally, not thrown.
EmbeddingReport verify_embedding(const DPrime& dprime, size_t closure_cap = 100000);
EmbeddingReport verify_embedding(long p, long m, long alpha, size_t closure_cap = 100000);

}  // namespace divalg
