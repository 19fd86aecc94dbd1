#pragma once

#include <string>

#include <json.hpp>

#include "defex/complexes.hpp"
#include "defex/conflation.hpp"

namespace defex {

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

/// Row-major array of arrays; empty shapes carry explicit rows/cols.
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// {"generators": g, "relations": [[...]]}
nlohmann::json group_to_json(const PresentedGroup& g);
PresentedGroup group_from_json(const nlohmann::json& j);

/// {"source": ..., "target": ..., "matrix": ...}
nlohmann::json morphism_to_json(const GroupMorphism& f);
GroupMorphism morphism_from_json(const nlohmann::json& j);

/// {"window": [a, b] | {"period": T}, "objects": {...}, "differentials": {...}}
nlohmann::json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const nlohmann::json& j);

nlohmann::json conflation_to_json(const Conflation& c);
Conflation conflation_from_json(const nlohmann::json& j);

nlohmann::json axiom_report_to_json(const AxiomReport& r);

/// Accepts inline JSON, or shorthand like "0", "Z", "Z/4", "Z^2+Z/2".
PresentedGroup parse_group_spec(const std::string& text);

}  // namespace defex
