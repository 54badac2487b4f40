#include "divalg/json_io.hpp"

namespace divalg {

Json to_json(const Rat& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Json to_json(const RationalModOne& q) { return q.str(); }

Json to_json(const CycloNumber& x) {
    Json coeffs = Json::array();
    for (const Rat& c : x.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

Json to_json(const CrossedElement& x) {
    Json arr = Json::array();
    for (const CycloNumber& c : x.coeffs) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const CrossedProductAlgebra& B) {
    Json hk = Json::array();
    for (const Int& h : B.datum().base().subgroup()) hk.push_back(h.get_str());
    Json hm = Json::array();
    for (const Int& h : B.datum().top().subgroup()) hm.push_back(h.get_str());
    return Json{{"conductor", B.conductor()},
                {"h_k_gens", hk},
                {"h_m_gens", hm},
                {"sigma", B.datum().sigma_exponent().get_str()},
                {"a", to_json(B.a())}};
}

Json to_json(const MulTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.t) {
        Json r = Json::array();
        for (int v : row) r.push_back(v);
        rows.push_back(r);
    }
    return Json{{"order", t.size()}, {"identity", t.identity}, {"table", rows}};
}

Json to_json(const ClassifierRow& row) {
    return Json{{"p", row.p},        {"m", row.m},
                {"alpha", row.alpha}, {"condition", row.condition_holds},
                {"verdict", row.paper_verdict}, {"note", row.note}};
}

Json classifier_to_json(const std::vector<ClassifierRow>& rows) {
    Json arr = Json::array();
    for (const ClassifierRow& row : rows) arr.push_back(to_json(row));
    return Json{{"rows", arr}};
}

Json to_json(const InvariantProfile& profile) {
    Json places = Json::array();
    for (const auto& pl : profile.places)
        places.push_back(Json{{"t", pl.t.get_str()},
                              {"conjugate", pl.conjugate},
                              {"inv", to_json(pl.inv)}});
    return Json{{"p", profile.p},
                {"m", profile.m},
                {"alpha", profile.alpha},
                {"n", profile.n.get_str()},
                {"places", places}};
}

Json to_json(const EmbeddingReport& report) {
    Json checks = Json::array();
    for (const EmbeddingCheck& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"p", report.p},
                {"m", report.m},
                {"alpha", report.alpha},
                {"expected_order", report.expected_order.get_str()},
                {"subgroup_order", report.subgroup_order},
                {"all_pass", report.all_pass},
                {"checks", checks}};
}

Json to_json(const PositivityReport& report) {
    Json values = Json::array();
    for (const auto& v : report.values)
        values.push_back(Json{{"embedding", v.embedding.get_str()},
                              {"re", v.value.re_str()},
                              {"im", v.value.im_str()},
                              {"radius", v.value.radius_str()},
                              {"verdict", to_string(v.local)}});
    return Json{{"symbolic_identity", report.symbolic_identity},
                {"values", values},
                {"verdict", to_string(report.verdict)}};
}

Json to_json(const GUReferenceInvariants& inv) {
    Json rows = Json::array();
    for (const auto& row : inv.rows)
        rows.push_back(Json{{"ell", row.ell.get_str()},
                            {"ramified", row.ramified},
                            {"disc_class", to_string(row.disc_class)},
                            {"witt_index", row.witt_index.get_str()}});
    return Json{{"p", inv.p},
                {"r", inv.r},
                {"n", inv.n.get_str()},
                {"d0", inv.d0.get_str()},
                {"disc", to_json(inv.disc)},
                {"places", rows}};
}

}  // namespace divalg
