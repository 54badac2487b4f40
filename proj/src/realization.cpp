#include "divalg/realization.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "divalg/artin.hpp"
#include "divalg/error.hpp"

namespace divalg {

bool realizability_condition(long p, long m) {
    if (p < 3 || !is_probable_prime(Int(p)))
        throw std::invalid_argument("realizability_condition: p must be an odd prime");
    if (m < 1 || m % p == 0)
        throw std::invalid_argument("realizability_condition: need gcd(m, p) = 1");
    const Int phi = euler_phi(pow_int(Int(p), static_cast<unsigned long>(m)) - 1);
    return phi == m || phi == 2 * m;
}

std::vector<ClassifierRow> classify(long p_max, long m_max, long alpha_max) {
    if (p_max < 2 || m_max < 1 || alpha_max < 1)
        throw std::invalid_argument("classify: bounds must be >= 1");
    if (p_max > 1000 || m_max > 16 || alpha_max > 16)
        throw std::invalid_argument("classify: bounds beyond supported caps");
    std::vector<ClassifierRow> rows;
    // p = 2: the maximal finite subgroup at n = 2^(r-1) is cyclic of order
    // 2^r, realizable for r > 2.
    if (p_max >= 2) {
        for (long r = 1; r <= alpha_max; ++r) {
            ClassifierRow row;
            row.p = 2;
            row.m = 1;
            row.alpha = r;
            row.condition_holds = r > 2;
            row.paper_verdict = r > 2;
            row.note = r > 2 ? "realizable: cyclic mu_(2^r) at n = 2^(r-1)"
                             : "classical low-height case, outside this construction";
            rows.push_back(row);
        }
    }
    for (long p = 3; p <= p_max; ++p) {
        if (!is_probable_prime(Int(p))) continue;
        for (long m = 1; m <= m_max; ++m) {
            if (m % p == 0) continue;
            const bool cond = realizability_condition(p, m);
            const bool verdict = (p == 3 || p == 5 || p == 7) && m == 1;
            for (long alpha = 1; alpha <= alpha_max; ++alpha) {
                ClassifierRow row;
                row.p = p;
                row.m = m;
                row.alpha = alpha;
                row.condition_holds = cond;
                row.paper_verdict = verdict;
                row.discrepancy = cond != verdict;
                if (row.discrepancy)
                    row.note = "degree condition phi(p^m-1) in {m, 2m} holds but the case is "
                               "excluded from the realizable list";
                rows.push_back(row);
            }
        }
    }
    return rows;
}

CosetData coset_data(long p, long m) {
    if (p < 3 || !is_probable_prime(Int(p)))
        throw std::invalid_argument("coset_data: p must be an odd prime");
    if (m < 1 || m % p == 0) throw std::invalid_argument("coset_data: need gcd(m, p) = 1");
    const Int N = pow_int(Int(p), static_cast<unsigned long>(m)) - 1;
    if (N <= 2)
        throw std::invalid_argument("coset_data: p^m - 1 <= 2 is degenerate (p = 3, m = 1)");
    if (N > 1000000) throw std::invalid_argument("coset_data: p^m - 1 beyond enumeration cap");

    CosetData out;
    out.modulus = N;
    out.subgroup = subgroup_closure(N, {mod_reduce(Int(p), N)});
    const Int minus_one = N - 1;
    if (std::binary_search(out.subgroup.begin(), out.subgroup.end(), minus_one)) {
        out.cm_check = false;
        throw std::domain_error("coset_data: -1 lies in <p>; the fixed field is not CM");
    }
    out.cm_check = true;

    const SubgroupCosets cosets = subgroup_cosets(N, {mod_reduce(Int(p), N)});
    // Minimal representative of the coset containing x.
    auto coset_rep = [&](const Int& x) {
        Int best = -1;
        for (const Int& h : out.subgroup) {
            const Int y = mod_reduce(x * h, N);
            if (best < 0 || y < best) best = y;
        }
        return best;
    };
    std::set<Int> used;
    for (const Int& rep : cosets.coset_reps) {
        if (used.count(rep)) continue;
        const Int conj = coset_rep(mod_reduce(rep * minus_one, N));
        used.insert(rep);
        used.insert(conj);
        out.t_list.push_back(rep);
        out.conjugate_reps.push_back(conj);
    }
    out.pair_count = out.t_list.size();
    return out;
}

RationalModOne InvariantProfile::total() const {
    RationalModOne sum;
    for (const Place& pl : places) sum = sum + pl.inv;
    return sum;
}

InvariantProfile invariant_profile(long p, long m, long alpha) {
    if (alpha < 1) throw std::invalid_argument("invariant_profile: alpha must be >= 1");
    InvariantProfile profile;
    profile.p = p;
    profile.m = m;
    profile.alpha = alpha;
    profile.n = Int(p - 1) * pow_int(Int(p), static_cast<unsigned long>(alpha - 1)) * m;

    std::vector<Int> t_list;
    if (p == 3 && m == 1) {
        // Degenerate coset lattice: one split pair of places over p.
        t_list = {Int(1)};
    } else {
        t_list = coset_data(p, m).t_list;
    }
    for (const Int& t : t_list) {
        InvariantProfile::Place place;
        place.t = t;
        place.conjugate = false;
        place.inv = RationalModOne::fraction(t, profile.n);
        profile.places.push_back(place);
        InvariantProfile::Place conj;
        conj.t = t;
        conj.conjugate = true;
        conj.inv = RationalModOne::fraction(-t, profile.n);
        profile.places.push_back(conj);
    }
    return profile;
}

namespace {

// Residues mod A*B with s = x mod A (x ranging over xs) and s in ys mod B.
std::vector<Int> crt_filter(long A, const std::vector<Int>& xs, long B,
                            const std::vector<Int>& ys) {
    std::vector<Int> out;
    for (const Int& x : xs)
        for (const Int& y : ys) out.push_back(crt_solve({{x, Int(A)}, {y, Int(B)}}));
    std::sort(out.begin(), out.end());
    return out;
}

// The subgroup of (Z/p^alpha)^x of order p-1 (Teichmueller lifts).
std::vector<Int> teichmueller_subgroup(long p, long alpha) {
    const Int pa = pow_int(Int(p), static_cast<unsigned long>(alpha));
    if (pa > 100000) throw std::invalid_argument("build_dprime: p^alpha beyond enumeration cap");
    std::vector<Int> out;
    for (Int x = 1; x < pa; ++x) {
        if (mod_reduce(x, Int(p)) == 0) continue;
        if (pow_mod(x, Int(p - 1), pa) == 1) out.push_back(x);
    }
    return out;
}

}  // namespace

DPrime build_dprime(long p, long m, long alpha, const std::optional<Int>& sigma_override) {
    if (p < 3 || !is_probable_prime(Int(p)))
        throw std::invalid_argument("build_dprime: p must be an odd prime");
    if (m < 1 || m % p == 0) throw std::invalid_argument("build_dprime: need gcd(m, p) = 1");
    if (alpha < 1) throw std::invalid_argument("build_dprime: alpha must be >= 1");

    const bool special = (p == 3 && m == 1);
    const Int pa_int = pow_int(Int(p), static_cast<unsigned long>(alpha));
    const Int pm1_int = pow_int(Int(p), static_cast<unsigned long>(m)) - 1;
    const long pa = static_cast<long>(pa_int.get_si());
    const long pm1 = static_cast<long>(pm1_int.get_si());
    const long base_part = special ? 8 : pm1;  // conductor of the omega-field
    const long N = base_part * pa;

    // Fixing subgroups inside (Z/N)^x via CRT coordinates (mod p^alpha,
    // mod base_part).
    std::vector<Int> base_units;   // all residues mod base_part coprime to it
    std::vector<Int> omega_fixers; // residues mod base_part fixing the omega-field
    {
        const UnitGroupData u = UnitGroupData::enumerate(Int(base_part));
        base_units = u.elements;
        if (special) {
            omega_fixers = {Int(1), Int(3)};  // Gal(Q(zeta_8)/Q(sqrt(-2)))
        } else {
            omega_fixers = {Int(1)};
        }
    }
    std::vector<Int> pa_units;  // all residues mod p^alpha coprime to p
    {
        const UnitGroupData u = UnitGroupData::enumerate(pa_int);
        pa_units = u.elements;
    }

    const std::vector<Int> teich = teichmueller_subgroup(p, alpha);
    const std::vector<Int> h_m = crt_filter(pa, {Int(1)}, base_part, omega_fixers);
    const std::vector<Int> h_l = crt_filter(pa, teich, base_part, omega_fixers);

    // F: the fixed field of <p> acting on the omega-part (everything on the
    // p^alpha-part).  In the special case F = Q(sqrt(-2)) directly.
    std::vector<Int> f_omega_part;
    if (special) {
        f_omega_part = {Int(1), Int(3)};
    } else {
        f_omega_part = subgroup_closure(Int(base_part), {mod_reduce(Int(p), Int(base_part))});
    }
    const std::vector<Int> h_f = crt_filter(pa, pa_units, base_part, f_omega_part);

    // sigma: reciprocity exponent on the p-power part.  The root of unity
    // omega norms down to a (p-1)st root of unity whose residue acts on
    // zeta_(p^alpha) through inversion of its Teichmueller lift.
    Int s;
    if (sigma_override) {
        s = mod_reduce(*sigma_override, pa_int);
        if (mult_order(s, pa_int) != p - 1)
            throw std::invalid_argument("build_dprime: sigma override must have order p-1");
    } else if (special) {
        s = pa_int - 1;  // the residue of omega = -1; self-inverse
    } else if (m == 1) {
        Int u0 = 0;
        for (Int cand = 2; cand < p; ++cand)
            if (mult_order(cand, Int(p)) == p - 1) {
                u0 = cand;
                break;
            }
        if (u0 == 0) throw std::logic_error("build_dprime: no residue of order p-1 mod p");
        const Int u = pow_mod(u0, pow_int(Int(p), static_cast<unsigned long>(alpha - 1)), pa_int);
        s = cyclotomic_artin_exponent(u, p, alpha);
    } else {
        // m > 1: the reciprocity value needs residue arithmetic in F_(p^m);
        // any generator of the order-(p-1) quotient gives the same
        // outcomes, so take the minimal one.
        s = 0;
        for (const Int& cand : teich)
            if (cand != 1 && mult_order(cand, pa_int) == p - 1) {
                s = cand;
                break;
            }
        if (s == 0) throw std::logic_error("build_dprime: no generator of order p-1");
    }
    if (mult_order(s, pa_int) != p - 1)
        throw std::domain_error("build_dprime: computed sigma does not generate a cyclic "
                                "quotient of order p-1");

    const Int sigma_exp = crt_solve({{s, pa_int}, {Int(1), Int(base_part)}});
    CyclicGaloisDatum datum(N, h_l, h_m, sigma_exp);
    if (datum.n() != static_cast<size_t>(p - 1))
        throw std::domain_error("build_dprime: [M : L] != p - 1");

    CycloNumber omega = special ? CycloNumber::from_rational(N, Rat(-1))
                                : CycloNumber::zeta_power(N, N / pm1);
    CycloNumber zeta = CycloNumber::zeta_power(N, N / pa);

    CrossedProductAlgebra algebra(datum, omega);

    DPrime d{p,
             m,
             alpha,
             N,
             std::move(algebra),
             SubfieldDatum(N, h_f),
             omega,
             zeta,
             s,
             crt_solve({{s, pa_int}, {Int(1), pm1_int}}),
             CrossedElement{},
             CrossedElement{}};
    d.a_embedded = crossed_scalar(d.algebra, omega * zeta);
    d.b_embedded = crossed_s(d.algebra);
    return d;
}

namespace {

EmbeddingCheck run_check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    EmbeddingCheck check;
    check.name = name;
    try {
        auto [ok, detail] = body();
        check.pass = ok;
        check.detail = detail;
    } catch (const std::exception& e) {
        check.pass = false;
        check.detail = std::string("exception: ") + e.what();
    }
    return check;
}

}  // namespace

EmbeddingReport verify_embedding(const DPrime& d, size_t closure_cap) {
    EmbeddingReport report;
    report.p = d.p;
    report.m = d.m;
    report.alpha = d.alpha;
    const Int order_a = pow_int(Int(d.p), static_cast<unsigned long>(d.alpha)) *
                        (pow_int(Int(d.p), static_cast<unsigned long>(d.m)) - 1);
    report.expected_order = order_a * (d.p - 1);

    const CrossedProductAlgebra& B = d.algebra;
    const CrossedElement& a = d.a_embedded;
    const CrossedElement& b = d.b_embedded;

    report.checks.push_back(run_check("order_of_a", [&]() -> std::pair<bool, std::string> {
        const Int got = crossed_element_order(a, B);
        return {got == order_a, "order(omega*zeta) = " + got.get_str() + ", expected " +
                                    order_a.get_str()};
    }));

    report.checks.push_back(run_check("conjugation_relation", [&]() -> std::pair<bool, std::string> {
        const CrossedElement lhs = multiply(multiply(b, a, B), inverse(b, B), B);
        const CrossedElement rhs = power(a, d.t_canonical, B);
        return {lhs == rhs, "b a b^-1 vs a^t with t = " + d.t_canonical.get_str()};
    }));

    report.checks.push_back(run_check("power_relation", [&]() -> std::pair<bool, std::string> {
        const Int pa = pow_int(Int(d.p), static_cast<unsigned long>(d.alpha));
        const Int pm1 = pow_int(Int(d.p), static_cast<unsigned long>(d.m)) - 1;
        const Int k = crt_solve({{Int(0), pa}, {Int(1), pm1}});
        const CrossedElement lhs = power(b, Int(d.p - 1), B);
        const CrossedElement rhs = power(a, k, B);
        if (lhs != rhs) return {false, "b^(p-1) != a^k for k = " + k.get_str()};
        if (d.m == 1 && k != pa)
            return {false, "m = 1 but CRT exponent " + k.get_str() + " != p^alpha"};
        return {true, d.m == 1 ? "b^(p-1) = a^(p^alpha) exactly (k = " + k.get_str() + ")"
                               : "b^(p-1) = a^k with k = " + k.get_str()};
    }));

    std::vector<CrossedElement> closure;
    report.checks.push_back(run_check("subgroup_order", [&]() -> std::pair<bool, std::string> {
        closure = generated_subgroup<CrossedElement>(
            {a, b}, crossed_one(B),
            [&B](const CrossedElement& x, const CrossedElement& y) { return multiply(x, y, B); },
            closure_cap, CrossedElementLess{});
        report.subgroup_order = closure.size();
        return {Int(static_cast<long>(closure.size())) == report.expected_order,
                "closure has " + std::to_string(closure.size()) + " elements, expected " +
                    report.expected_order.get_str()};
    }));

    report.checks.push_back(run_check("isomorphism_with_abstract", [&]() -> std::pair<bool, std::string> {
        if (closure.empty()) return {false, "no closure available"};
        if (closure.size() > 5000) return {false, "closure above isomorphism cap"};
        const MetacyclicGroup abstract = make_hewett_group(d.p, d.m, d.alpha);
        const MulTable table_abstract = group_multiplication_table(abstract);
        const MulTable table_concrete = make_multiplication_table(
            closure, crossed_one(B),
            [&B](const CrossedElement& x, const CrossedElement& y) { return multiply(x, y, B); },
            CrossedElementLess{});
        const IsoResult iso = isomorphic(table_abstract, table_concrete);
        return {iso.isomorphic,
                iso.isomorphic ? "isomorphic (abstract t = " + abstract.t.get_str() +
                                     ", concrete t = " + d.t_canonical.get_str() + ")"
                               : "not isomorphic: " + iso.certificate};
    }));

    report.all_pass = true;
    for (const EmbeddingCheck& c : report.checks) report.all_pass = report.all_pass && c.pass;
    if (report.all_pass) report.subgroup = std::move(closure);
    return report;
}

EmbeddingReport verify_embedding(long p, long m, long alpha, size_t closure_cap) {
    return verify_embedding(build_dprime(p, m, alpha), closure_cap);
}

}  // namespace divalg
