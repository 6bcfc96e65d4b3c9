#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "phisat/formula.hpp"

namespace phisat {

using ClauseKey = std::vector<Lit>;

struct ClauseKeyLess {
  bool operator()(const ClauseKey& a, const ClauseKey& b) const {
    return clause_key_less(a, b);
  }
};

/// Records how a compact formula was derived: which variables had their
/// polarity inverted, and which original clauses each compact clause
/// descends from (with the weight carried over). Traced weights sum to the
/// original total weight.
struct LiftMap {
  std::set<int> flipped;
  std::vector<int> variables;  // shared by original and compact formula
  std::map<ClauseKey, std::vector<std::pair<ClauseKey, Weight>>, ClauseKeyLess>
      clause_trace;
};

/// Transforms an expanding UCF formula into a compact formula of equal total
/// weight over the same variable set. Every compact clause is a literal
/// subset of a (polarity-adjusted) original clause, so an assignment for the
/// compact formula lifts back without losing weight.
std::pair<Formula, LiftMap> compactify(const Formula& f);

/// Pulls an assignment of the compact formula back to the original one by
/// undoing the polarity flips: guarantees
/// evaluate(original, lifted) >= evaluate(compact, assignment).
Assignment lift_assignment(const LiftMap& lift, const Assignment& compact_assignment);

}  // namespace phisat
