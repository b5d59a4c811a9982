#pragma once

namespace tau4::limits {

// Defaults, overridable through the environment:
//   TAU4_MAX_ENHANCED_DIM, TAU4_MAX_COMPONENTS, TAU4_MAX_CROSSINGS, TAU4_MAX_COUNT_VARS
int enhanced_dim();
int components();
int crossings();
int count_vars();

}  // namespace tau4::limits
