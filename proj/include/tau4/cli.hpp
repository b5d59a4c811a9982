#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "tau4/enhanced.hpp"
#include "tau4/intmatrix.hpp"
#include "tau4/invariants.hpp"
#include "tau4/link.hpp"
#include "tau4/sat.hpp"

namespace tau4::cli {

enum Exit : int { ok = 0, mismatch = 1, invalid = 2, refused = 3 };

// Linking matrix given without a diagram.
struct MatrixInput {
    SymIntMatrix lk;
};

using Input = std::variant<EnhancedSpace, PDLink, LinkInvariantModel, CubicForm, MatrixInput, ImmersionData, CNF3>;

// Detects the input kind from the file contents; DIMACS text or one of the JSON schemas.
Input validate_input(const std::string& path);
std::string input_kind(const Input& in);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tau4::cli
