#pragma once

#include <json.hpp>

#include "divalg/crossed.hpp"
#include "divalg/groups.hpp"
#include "divalg/involution.hpp"
#include "divalg/realization.hpp"

namespace divalg {

using Json = nlohmann::json;

Json to_json(const Rat& q);  // "num/den"
Json to_json(const RationalModOne& q);
Json to_json(const CycloNumber& x);        // {conductor, coeffs}
Json to_json(const CrossedElement& x);     // list of CycloNumber payloads
Json to_json(const CrossedProductAlgebra& B);  // {conductor, h_k_gens, h_m_gens, sigma, a}
Json to_json(const MulTable& t);
Json to_json(const ClassifierRow& row);
Json classifier_to_json(const std::vector<ClassifierRow>& rows);
Json to_json(const InvariantProfile& profile);
Json to_json(const EmbeddingReport& report);
Json to_json(const PositivityReport& report);
Json to_json(const GUReferenceInvariants& inv);

}  // namespace divalg
