#include "phisat/autarky.hpp"

#include <cstdint>
#include <queue>
#include <stdexcept>

namespace phisat {

bool is_expanding(const Formula& f) {
  if (f.variable_count() == 0) return true;
  const IncidenceGraph g = build_incidence(f);
  const CapacityMatching m = capacity_matching(g, f);
  return m.size == f.variable_count();
}

bool verify_autarky(const Formula& f, const Assignment& beta) {
  for (const Clause& c : f.clauses()) {
    bool touched = false, satisfied = false;
    for (const Lit& l : c.literals) {
      const auto v = beta.value(l.variable());
      if (!v) continue;
      touched = true;
      if (*v == l.positive()) {
        satisfied = true;
        break;
      }
    }
    if (touched && !satisfied) return false;
  }
  return true;
}

namespace {

bool enumerate_check(const Formula& f, bool strict) {
  const auto& vars = f.variables();
  const std::size_t n = vars.size();
  if (n > 25) throw std::invalid_argument("expansion enumeration: too many variables");
  std::vector<std::uint32_t> clause_mask(f.clause_count(), 0);
  std::vector<const Weight*> clause_weight(f.clause_count());
  for (std::size_t ci = 0; ci < f.clause_count(); ++ci) {
    const Clause& c = f.clauses()[ci];
    for (const Lit& l : c.literals) {
      const auto it = std::lower_bound(vars.begin(), vars.end(), l.variable());
      clause_mask[ci] |= std::uint32_t{1} << (it - vars.begin());
    }
    clause_weight[ci] = &c.weight;
  }
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const long need = static_cast<long>(__builtin_popcount(mask)) + (strict ? 1 : 0);
    Weight touched = 0;
    bool reached = false;
    for (std::size_t ci = 0; ci < f.clause_count(); ++ci) {
      if (clause_mask[ci] & mask) {
        touched += *clause_weight[ci];
        if (touched >= need) {
          reached = true;
          break;
        }
      }
    }
    if (!reached && touched < need) return false;
  }
  return true;
}

}  // namespace

bool expanding_by_enumeration(const Formula& f) { return enumerate_check(f, false); }

bool strictly_expanding_by_enumeration(const Formula& f) {
  return enumerate_check(f, true);
}

AutarkyDecomposition matching_autarky(const Formula& f) {
  const IncidenceGraph g = build_incidence(f);
  const Matching m = maximum_matching(g);

  // Alternating BFS from clauses left exposed by the matching: a clause is
  // left through its non-matching edges, a variable through its matching
  // edge. Every variable reached this way is matched (an exposed one would
  // close an augmenting path), and the clauses reached along the way have
  // all their variables on this side. The unreached variables form U: each
  // unreached clause is matched to one of them, which pins beta.
  std::vector<char> clause_reached(g.clause_count(), 0);
  std::vector<char> var_reached(g.variable_count(), 0);
  std::queue<int> work;
  for (std::size_t c = 0; c < g.clause_count(); ++c) {
    if (m.clause_to_variable[c] < 0) {
      clause_reached[c] = 1;
      work.push(static_cast<int>(c));
    }
  }
  while (!work.empty()) {
    const int c = work.front();
    work.pop();
    for (int vi : g.clause_adj[c]) {
      if (var_reached[vi]) continue;
      var_reached[vi] = 1;
      const int mc = m.variable_to_clause[vi];
      if (mc < 0)
        throw std::logic_error(
            "matching_autarky: exposed variable reached from an exposed "
            "clause (augmenting path past a maximum matching)");
      if (!clause_reached[mc]) {
        clause_reached[mc] = 1;
        work.push(mc);
      }
    }
  }

  AutarkyDecomposition d;
  for (std::size_t vi = 0; vi < g.variable_count(); ++vi)
    if (!var_reached[vi]) d.autark_variables.insert(g.variables[vi]);

  std::vector<Clause> satisfied, remaining;
  for (std::size_t c = 0; c < g.clause_count(); ++c) {
    const Clause& clause = f.clauses()[c];
    if (clause_reached[c]) {
      remaining.push_back(clause);
      continue;
    }
    satisfied.push_back(clause);
    const int host = m.clause_to_variable[c];
    if (host < 0 || var_reached[host])
      throw std::logic_error("matching_autarky: unreached clause not matched into U");
    const int var = g.variables[host];
    const auto lit = clause.literal_of(var);
    d.beta.set(var, lit->positive());
  }
  // Autark variables whose matched clause fell on the remainder side cannot
  // exist; exposed autark variables get an arbitrary fixed value.
  for (int v : d.autark_variables)
    if (!d.beta.defines(v)) d.beta.set(v, false);

  d.satisfied_part = Formula::from_clauses(std::move(satisfied));
  d.remainder = Formula::from_clauses(std::move(remaining));

  if (!verify_autarky(f, d.beta))
    throw std::logic_error("matching_autarky: extracted map is not an autarky");
  if (d.satisfied_part.total_weight() + d.remainder.total_weight() !=
      f.total_weight())
    throw std::logic_error("matching_autarky: weight split mismatch");
  for (int v : d.remainder.variables())
    if (d.autark_variables.count(v))
      throw std::logic_error("matching_autarky: remainder touches U");
  if (d.remainder.variable_count() <= 12 &&
      !strictly_expanding_by_enumeration(d.remainder))
    throw std::logic_error("matching_autarky: remainder not strictly expanding");
  return d;
}

}  // namespace phisat
