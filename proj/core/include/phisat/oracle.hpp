#pragma once

#include "phisat/formula.hpp"

namespace phisat {

struct OracleResult {
  Weight optimum = 0;
  Assignment witness;  // lexicographically least optimum, false before true
};

/// Ground truth by exhaustive enumeration of all 2^n assignments. Refuses
/// formulas with more variables than the budget allows; callers must not
/// silently degrade. Deterministic: variables ascending, false before true,
/// first optimum kept.
OracleResult max_sat_exact(const Formula& f, int budget = 24);

}  // namespace phisat
