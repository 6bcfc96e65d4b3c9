#pragma once

#include <utility>
#include <vector>

#include "phisat/formula.hpp"
#include "phisat/q5.hpp"

namespace phisat {

/// Occurrence weights w_v(x) (clauses containing the positive literal) and
/// w_v(!x) (clauses containing the negative literal).
std::pair<Weight, Weight> occurrence_weights(const Formula& f, int variable);

/// epsilon(x) = w_v(x) - phi * w_v(!x), the per-variable elimination gain.
Q5 epsilon(const Formula& f, int variable);

/// A 2-clause (!x v !y) is good when no third variable z has its negative
/// occurrences exactly {(!x v !z), (!y v !z)}; in the 2-clause graph, no
/// vertex z with neighborhood exactly {x, y}.
bool is_good_clause(const Formula& f, int x, int y);

enum class CaseTag { A, B, C, D };

/// The elimination step chosen for the current formula, first applicable of:
///   A: some x with w_v(x) >= w_v(!x)             -> x true
///   B: some x with (1-phi)*epsilon(x) >= gamma   -> x true
///   C: a good clause, roles eps(x) >= eps(y)     -> y false, then x true
///   D: a closed triangle x,y,z                   -> best of the 8 assignments
/// Witnesses are deterministic: lowest id, lowest lexicographic clause.
struct CaseSelection {
  CaseTag tag;
  int x = 0;                      // A/B: chosen variable; C: true role; D: clause var
  int y = 0;                      // C: false role; D: clause var
  int z = 0;                      // D: third triangle variable
  std::pair<int, int> clause{0, 0};  // C/D: the base 2-clause as (min,max)
};

CaseSelection classify(const Formula& f);

enum class EliminationKind {
  AssignedTrue,
  AssignedFalse,
  FlipMerged,     // all clauses on y replaced by unit (y) carrying the
                  // negative-side excess; y's meaning is inverted downstream
  ZeroedRemoved,  // unit weight cancelled exactly and no clause left on y
};

struct EliminationRecord {
  int variable;
  EliminationKind kind;
};

struct SimplifyResult {
  Formula formula;
  std::vector<EliminationRecord> records;
};

/// Applies the elimination rewrites for a partial assignment of at most
/// three variables: satisfied and falsified clauses are removed, falsified
/// literals deleted, and every resulting negative unit (!y) is folded back
/// so the output is compact again (variables processed in increasing id
/// order, weights re-read after each rewrite).
SimplifyResult simplify_assign(const Formula& f, const Assignment& values);

struct CompactSolveResult {
  Assignment assignment;  // total on the input formula
  Weight achieved;        // evaluate(input, assignment)
  Q5 bound;               // phi * w(C) + gamma * |V|
};

/// Iterates classify/simplify until no variable remains, then reconstructs
/// a total assignment whose weight provably reaches phi*w(C) + gamma*|V|.
/// The bound is re-checked exactly on exit; a violation throws.
CompactSolveResult solve_compact(const Formula& f);

}  // namespace phisat
