#pragma once

#include <set>

#include "phisat/formula.hpp"
#include "phisat/matching.hpp"

namespace phisat {

/// Result of the matching-based autarky extraction. beta satisfies every
/// clause of satisfied_part, the remainder is strictly expanding, and
/// weights add up: w(F) = w(satisfied_part) + w(remainder).
struct AutarkyDecomposition {
  std::set<int> autark_variables;  // U
  Assignment beta;                 // defined exactly on U
  Formula satisfied_part;          // F_U
  Formula remainder;               // F \ F_U
};

/// True iff the formula is expanding: every variable subset X touches
/// clauses of total weight at least |X|. Decided by a covering matching in
/// the multiset incidence graph (Hall), never by subset enumeration.
bool is_expanding(const Formula& f);

/// True iff beta satisfies every clause containing a variable of its domain.
bool verify_autarky(const Formula& f, const Assignment& beta);

/// Extracts the matching autarky: variables alternating-reachable from
/// clauses left exposed by a maximum matching form the remainder side; all
/// other variables are autark, each satisfied clause being matched to one of
/// them. U may be empty. Both structural invariants are re-verified at
/// runtime (the strict-expansion one by enumeration when the remainder is
/// small); a failure is an implementation bug, never a bad input.
AutarkyDecomposition matching_autarky(const Formula& f);

/// Enumeration oracles for the expansion conditions; exponential, intended
/// for verification at small scale.
bool expanding_by_enumeration(const Formula& f);
bool strictly_expanding_by_enumeration(const Formula& f);

}  // namespace phisat
