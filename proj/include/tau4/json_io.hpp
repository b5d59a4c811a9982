#pragma once

#include <string>

#include <json.hpp>

#include "tau4/cyclo.hpp"
#include "tau4/enhanced.hpp"
#include "tau4/intmatrix.hpp"
#include "tau4/invariants.hpp"
#include "tau4/link.hpp"
#include "tau4/sat.hpp"

namespace tau4::io {

using json = nlohmann::ordered_json;

// Reads and parses a JSON file; syntax errors become ValidationError with line and column.
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

json to_json(const CycloInt& v);
json to_json(const IntMatrix& m);
json to_json(const EnhancedSpace& s);
json to_json(const PDLink& link);
json to_json(const LinkInvariantModel& m);
json to_json(const CubicForm& c);
json to_json(const GF2Poly& p);
json to_json(const QuadSystem& q);
json to_json(const BrownValue& b);

SymIntMatrix matrix_from_json(const json& j, const std::string& field);
EnhancedSpace space_from_json(const json& j);
// Accepts the PD form or the braid form.
PDLink link_from_json(const json& j);
LinkInvariantModel model_from_json(const json& j);
CubicForm form_from_json(const json& j);
ImmersionData immersion_from_json(const json& j);

}  // namespace tau4::io
