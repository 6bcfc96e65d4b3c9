#include "phisat/compactify.hpp"

#include <algorithm>
#include <stdexcept>

#include "phisat/autarky.hpp"
#include "phisat/matching.hpp"

namespace phisat {

namespace {

struct WorkClause {
  std::vector<Lit> literals;
  Weight weight;
  ClauseKey origin;
};

}  // namespace

std::pair<Formula, LiftMap> compactify(const Formula& f) {
  if (!is_ucf(f))
    throw std::invalid_argument("compactify: input is not unit-conflict free");

  const IncidenceGraph g = build_incidence(f);
  const CapacityMatching matching = capacity_matching(g, f);
  if (matching.size != f.variable_count())
    throw std::invalid_argument("compactify: input is not expanding");

  // Unit polarity per variable in the input; UCF means at most one.
  std::map<int, bool> unit_polarity;
  for (const Clause& c : f.clauses())
    if (c.is_unit())
      unit_polarity.emplace(c.literals.front().variable(),
                            c.literals.front().positive());

  std::vector<WorkClause> work;
  work.reserve(f.clause_count());
  for (const Clause& c : f.clauses())
    work.push_back(WorkClause{c.literals, c.weight, c.literals});

  // A variable without a unit clause turns one occurrence of its matched
  // clause into a unit of its own literal: the clause stands for weight many
  // copies and the matching assigned the variable one of them.
  for (std::size_t vi = 0; vi < g.variable_count(); ++vi) {
    const int var = g.variables[vi];
    if (unit_polarity.count(var)) continue;
    const int ci = matching.variable_to_clause[vi];
    if (ci < 0) throw std::logic_error("compactify: covering matching has a hole");
    const Lit mine = *f.clauses()[ci].literal_of(var);
    if (work[ci].weight < 1)
      throw std::logic_error("compactify: matched clause weight exhausted");
    work[ci].weight -= 1;
    WorkClause split{{mine}, Weight(1), work[ci].origin};
    work.push_back(std::move(split));
    unit_polarity.emplace(var, mine.positive());
  }
  std::erase_if(work, [](const WorkClause& w) {
    return w.weight == 0 && w.literals.size() > 1;
  });

  // Variables whose unit is negative get their polarity inverted throughout.
  LiftMap lift;
  lift.variables = f.variables();
  for (const auto& [var, positive] : unit_polarity)
    if (!positive) lift.flipped.insert(var);
  if (!lift.flipped.empty()) {
    for (WorkClause& w : work)
      for (Lit& l : w.literals)
        if (lift.flipped.count(l.variable())) l = l.negation();
  }

  // Shrink every clause into compact shape: a clause with a positive
  // literal keeps only the lowest such literal; an all-negative clause
  // keeps its two lowest variables.
  for (WorkClause& w : work) {
    if (w.literals.size() < 2) continue;
    const auto positive = std::find_if(w.literals.begin(), w.literals.end(),
                                       [](const Lit& l) { return l.positive(); });
    if (positive != w.literals.end())
      w.literals = {*positive};  // literals are sorted, first hit is lowest
    else if (w.literals.size() > 2)
      w.literals = {w.literals[0], w.literals[1]};
  }

  std::vector<Clause> compact_clauses;
  compact_clauses.reserve(work.size());
  for (WorkClause& w : work) {
    std::sort(w.literals.begin(), w.literals.end());
    compact_clauses.push_back(Clause{w.literals, w.weight});
    lift.clause_trace[w.literals].emplace_back(std::move(w.origin), w.weight);
  }
  Formula compact = Formula::from_clauses(std::move(compact_clauses));

  if (compact.total_weight() != f.total_weight())
    throw std::logic_error("compactify: total weight not conserved");
  if (compact.variables() != f.variables())
    throw std::logic_error("compactify: variable set not conserved");
  if (!is_compact(compact))
    throw std::logic_error("compactify: output fails the compactness check");
  return {std::move(compact), std::move(lift)};
}

Assignment lift_assignment(const LiftMap& lift, const Assignment& compact_assignment) {
  Assignment lifted;
  for (int var : lift.variables) {
    const auto value = compact_assignment.value(var);
    if (!value)
      throw std::invalid_argument(
          "lift_assignment: assignment not total on the compact formula");
    lifted.set(var, lift.flipped.count(var) ? !*value : *value);
  }
  return lifted;
}

}  // namespace phisat
