#pragma once

// Stable text and JSON forms for elements, tables, and reports.  JSON output
// is deterministic: object keys keep insertion order and numbers that can
// exceed 64 bits travel as strings.

#include "mirabolic/verifier.hpp"

#include <string>

namespace mirabolic {

// text grammar: "0", or terms joined by " + ", each "label" or
// "(coeff)*label" with label like "[[1,0];[0,1]]{(1,1)}"
std::string serialize_element(const ModuleElement& x, bool as_json);
ModuleElement parse_element_text(const std::string& s, Context ctx);
ModuleElement parse_element_json(const std::string& s);

Laurent parse_laurent(const std::string& s);
DecoratedMatrix parse_matrix(const std::string& s, int n, int m);

std::string basis_json(Context ctx);
std::string element_json(const ModuleElement& x);
std::string orbit_table_json(const OrbitTable& t);
std::string oracle_action_json(Context ctx, int q, const GeneratorToken& t,
                               bool left_side, const DecoratedMatrix& z,
                               const std::map<DecoratedMatrix,
                                              SpecializedValue>& values);
std::string relation_reports_json(const std::string& kind, Context ctx,
                                  const std::vector<RelationReport>& v);
std::string calibration_json(const CalibrationReport& r);
std::string agreement_json(const AgreementReport& r);
std::string dimension_json(const DimensionReport& r);
std::string centralizer_json(const CentralizerReport& r);
std::string criteria_json(const std::vector<CriterionResult>& v);

}  // namespace mirabolic
