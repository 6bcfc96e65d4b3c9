#pragma once

#include <vector>

#include "phisat/formula.hpp"

namespace phisat {

/// Clause-variable incidence graph: one node per stored clause, an edge
/// (v, c) whenever v or its negation occurs in c. Adjacency lists follow the
/// canonical orders (ascending variable id, formula clause order), so every
/// algorithm downstream is deterministic.
struct IncidenceGraph {
  std::vector<int> variables;                // sorted variable ids
  std::vector<std::vector<Lit>> clause_keys; // formula order
  std::vector<std::vector<int>> var_adj;     // variable index -> clause indices
  std::vector<std::vector<int>> clause_adj;  // clause index -> variable indices

  std::size_t variable_count() const { return variables.size(); }
  std::size_t clause_count() const { return clause_keys.size(); }
};

IncidenceGraph build_incidence(const Formula& f);

/// A matching of the incidence graph; -1 marks an exposed node. Maximality
/// is certified by the absence of augmenting paths when produced by
/// maximum_matching.
struct Matching {
  std::vector<int> variable_to_clause;
  std::vector<int> clause_to_variable;
  std::size_t size = 0;

  bool covers_all_variables() const;
};

/// Maximum-cardinality matching via Hopcroft-Karp, O(E sqrt(V)).
Matching maximum_matching(const IncidenceGraph& g);

/// Matching in the multiset view of the formula, where a clause of weight w
/// stands for w parallel copies: a clause may be matched to up to
/// min(weight, arity) distinct variables. Returns, per clause index of g,
/// the variable indices matched into that clause, plus the flat
/// variable -> clause map (-1 when exposed). This is the matching notion
/// under which "a matching covering V exists iff the formula is expanding"
/// holds for weighted formulas.
struct CapacityMatching {
  std::vector<std::vector<int>> clause_to_variables;
  std::vector<int> variable_to_clause;
  std::size_t size = 0;
};

CapacityMatching capacity_matching(const IncidenceGraph& g,
                                   const Formula& f);

}  // namespace phisat
