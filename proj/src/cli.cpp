#include "divalg/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "divalg/error.hpp"

namespace divalg {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct CheckList {
    Json checks = Json::array();
    bool any_fail = false;
    bool any_inconclusive = false;

    void add(const std::string& name, CheckStatus status, const std::string& detail) {
        checks.push_back(Json{{"name", name}, {"status", to_string(status)}, {"detail", detail}});
        if (status == CheckStatus::fail) any_fail = true;
        if (status == CheckStatus::inconclusive) any_inconclusive = true;
    }
    void add_bool(const std::string& name, bool pass, const std::string& detail) {
        add(name, pass ? CheckStatus::pass : CheckStatus::fail, detail);
    }
    int exit_code() const { return any_fail ? 1 : (any_inconclusive ? 3 : 0); }
};

Envelope finish(const std::string& command, Json parameters, Json results, const CheckList& checks,
                const CliOptions& options, const std::string& text) {
    Envelope env;
    env.doc = Json{{"schema", 1},
                   {"command", command},
                   {"parameters", std::move(parameters)},
                   {"results", std::move(results)},
                   {"checks", checks.checks}};
    env.exit_code = checks.exit_code();
    env.rendered = options.format == "text" ? text : env.doc.dump(2) + "\n";
    return env;
}

// A random nonzero element of M (coefficients symmetrized over H_M).
CycloNumber random_m_element(const CrossedProductAlgebra& B, std::mt19937_64& rng) {
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
        if (!sym.is_zero()) return sym;
    }
}

CrossedElement random_crossed_element(const CrossedProductAlgebra& B, std::mt19937_64& rng) {
    CrossedElement x = crossed_zero(B);
    for (size_t i = 0; i < B.n(); ++i) x.coeffs[i] = random_m_element(B, rng);
    return x;
}

std::string format_profile_text(const InvariantProfile& profile) {
    std::ostringstream os;
    os << "invariant profile p=" << profile.p << " m=" << profile.m << " alpha=" << profile.alpha
       << " n=" << profile.n.get_str() << "\n";
    for (const auto& pl : profile.places)
        os << "  " << (pl.conjugate ? "conj(y_" : "y_") << pl.t.get_str()
           << (pl.conjugate ? ")" : "") << "  inv = " << pl.inv.str() << "\n";
    return os.str();
}

}  // namespace

Envelope run_classify(long p_max, long m_max, long alpha_max, const CliOptions& options) {
    const std::vector<ClassifierRow> rows = classify(p_max, m_max, alpha_max);
    CheckList checks;
    long discrepancies = 0;
    for (const ClassifierRow& row : rows)
        if (row.discrepancy) ++discrepancies;
    if (discrepancies > 0)
        checks.add("condition_verdict_consistency", CheckStatus::inconclusive,
                   std::to_string(discrepancies) + " row(s) where the numeric condition and the "
                                                   "realizability verdict disagree");
    else
        checks.add("condition_verdict_consistency", CheckStatus::pass, "no discrepancies");

    std::ostringstream text;
    text << "  p  m  alpha  condition  verdict  note\n";
    for (const ClassifierRow& row : rows) {
        text << "  " << row.p << "  " << row.m << "  " << row.alpha << "  "
             << (row.condition_holds ? "yes" : "no") << "  " << (row.paper_verdict ? "yes" : "no")
             << "  " << row.note << "\n";
    }
    return finish("classify",
                  Json{{"p_max", p_max}, {"m_max", m_max}, {"alpha_max", alpha_max}},
                  classifier_to_json(rows), checks, options, text.str());
}

Envelope run_profile(long p, long m, long alpha, const CliOptions& options) {
    const InvariantProfile profile = invariant_profile(p, m, alpha);
    CheckList checks;
    checks.add_bool("invariants_sum_to_zero", profile.total().is_zero(),
                    "sum = " + profile.total().str());
    return finish("profile", Json{{"p", p}, {"m", m}, {"alpha", alpha}}, to_json(profile), checks,
                  options, format_profile_text(profile));
}

Envelope run_verify(long p, long m, long alpha, const CliOptions& options) {
    CheckList checks;
    Json results;
    std::ostringstream text;
    std::mt19937_64 rng(options.seed);

    // Realizability verdict is contextual information, not a check.
    try {
        const bool condition = realizability_condition(p, m);
        const bool verdict = (p == 3 || p == 5 || p == 7) && m == 1;
        results["realizability"] = Json{{"condition", condition}, {"verdict", verdict}};
    } catch (const std::exception& e) {
        results["realizability"] = Json{{"error", e.what()}};
    }

    try {
        const DPrime d = build_dprime(p, m, alpha);
        results["algebra"] = to_json(d.algebra);
        results["t_canonical"] = d.t_canonical.get_str();
        checks.add("build_dprime", CheckStatus::pass,
                   "conductor " + std::to_string(d.conductor) + ", [M:L] = " +
                       std::to_string(d.algebra.n()));

        const EmbeddingReport report = verify_embedding(d);
        results["embedding"] = to_json(report);
        for (const EmbeddingCheck& c : report.checks) checks.add_bool(c.name, c.pass, c.detail);
        if (options.emit_tables && report.all_pass) {
            results["abstract_table"] =
                to_json(group_multiplication_table(make_hewett_group(p, m, alpha)));
            results["subgroup_table"] = to_json(make_multiplication_table(
                report.subgroup, crossed_one(d.algebra),
                [&d](const CrossedElement& x, const CrossedElement& y) {
                    return multiply(x, y, d.algebra);
                },
                CrossedElementLess{}));
        }

        const InvolutedAlgebra inv(d.algebra);
        const CrossedProductAlgebra& B = d.algebra;

        bool axioms = true;
        for (int trial = 0; trial < options.samples && axioms; ++trial) {
            const CrossedElement x = random_crossed_element(B, rng);
            const CrossedElement y = random_crossed_element(B, rng);
            axioms = axioms && dagger(dagger(x, inv), inv) == x;
            axioms = axioms && dagger(add(x, y, B), inv) == add(dagger(x, inv), dagger(y, inv), B);
            axioms = axioms &&
                     dagger(multiply(x, y, B), inv) == multiply(dagger(y, inv), dagger(x, inv), B);
        }
        checks.add_bool("involution_axioms", axioms,
                        std::to_string(options.samples) + " random pairs");

        if (report.all_pass) {
            bool unitary = true;
            for (const CrossedElement& g : report.subgroup)
                unitary = unitary && is_unitary(g, inv);
            checks.add_bool("subgroup_unitary", unitary,
                            "all " + std::to_string(report.subgroup.size()) +
                                " subgroup elements satisfy g^dag g = 1");
        } else {
            checks.add("subgroup_unitary", CheckStatus::fail, "embedding unavailable");
        }

        int positive = 0, inconclusive = 0;
        for (int trial = 0; trial < options.samples; ++trial) {
            const PositivityReport pr =
                positivity_report(random_crossed_element(B, rng), inv, options.precision);
            if (pr.verdict == PositivityVerdict::positive)
                ++positive;
            else if (pr.verdict == PositivityVerdict::inconclusive)
                ++inconclusive;
        }
        const std::string detail = std::to_string(positive) + "/" +
                                   std::to_string(options.samples) + " positive, " +
                                   std::to_string(inconclusive) + " inconclusive at " +
                                   std::to_string(options.precision) + " digits";
        if (positive == options.samples)
            checks.add("positivity_sample", CheckStatus::pass, detail);
        else if (positive + inconclusive == options.samples)
            checks.add("positivity_sample", CheckStatus::inconclusive, detail);
        else
            checks.add("positivity_sample", CheckStatus::fail, detail);
    } catch (const std::exception& e) {
        checks.add("build_dprime", CheckStatus::fail, e.what());
    }

    text << "verify p=" << p << " m=" << m << " alpha=" << alpha << "\n";
    for (const auto& c : checks.checks)
        text << "  [" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>()
             << ": " << c["detail"].get<std::string>() << "\n";
    return finish("verify", Json{{"p", p}, {"m", m}, {"alpha", alpha}}, results, checks, options,
                  text.str());
}

Envelope run_hermitian(long p, const CliOptions& options) {
    CheckList checks;
    Json results;
    const GUReferenceInvariants inv = gu_reference_invariants(p);
    results["gu_reference"] = to_json(inv);
    const Int half = inv.n / 2;
    for (const auto& row : inv.rows) {
        const bool exceptional = (p == 5 && row.ell == 2);
        const Int expected = exceptional ? half - 1 : half;
        checks.add_bool("witt_index_at_" + row.ell.get_str(), row.witt_index == expected,
                        "witt index " + row.witt_index.get_str() + ", expected " +
                            expected.get_str());
    }
    if (p == 5) {
        const NormXiResult xi = norm_xi_check();
        results["norm_xi"] = Json{{"norm", to_json(xi.norm)},
                                  {"class_at_2", to_string(xi.class_at_2)}};
        checks.add_bool("norm_xi_value", xi.norm == Rat(-4),
                        "N(xi) = " + xi.norm.get_num().get_str() + "/" +
                            xi.norm.get_den().get_str());
        checks.add_bool("norm_xi_class", xi.class_at_2 == NormClass::nontrivial,
                        to_string(xi.class_at_2));
    }
    std::ostringstream text;
    text << "hermitian bookkeeping p=" << p << " (n=" << inv.n.get_str() << ", d0="
         << inv.d0.get_str() << ")\n";
    for (const auto& row : inv.rows)
        text << "  ell=" << row.ell.get_str() << (row.ramified ? " (ramified)" : " (inert)")
             << "  disc " << to_string(row.disc_class) << "  witt " << row.witt_index.get_str()
             << "\n";
    return finish("hermitian", Json{{"p", p}}, results, checks, options, text.str());
}

}  // namespace divalg
