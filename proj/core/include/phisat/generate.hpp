#pragma once

#include <cstdint>

#include "phisat/formula.hpp"

namespace phisat {

enum class Family {
  Compact,        // positive units for all variables plus negative 2-clauses
  Ucf,            // random clauses, unit polarities kept conflict free
  General,        // unrestricted random clauses (sizes 1..3)
  Tight,          // the pair family (x_i), (y_i), (!x_i v !y_i), all weight 1
  TriangleBatch,  // disjoint closed triangles, uniform weight
};

struct GeneratorConfig {
  Family family = Family::General;
  int variable_count = 0;       // n; ignored by Tight
  int clause_count = 0;         // m; Compact/Ucf/General only
  long max_weight = 1;
  std::uint64_t seed = 0;
  int pair_count = 0;           // l; Tight only
};

/// Deterministic seeded instance generation (mt19937_64 with modulo
/// reduction; the stream is fixed for a given build of the tool). The
/// produced formula always satisfies its family's predicate; infeasible
/// configurations are rejected.
Formula generate(const GeneratorConfig& config);

}  // namespace phisat
