#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace phisat {

/// Clause weights are arbitrary-precision non-negative integers. The kernel
/// arguments treat total weight as the instance size, so overflow must be
/// impossible.
using Weight = mpz_class;

/// A signed variable occurrence. Variables are positive integer identifiers;
/// the DIMACS code of a negative literal is the negated identifier.
class Lit {
 public:
  Lit(int variable, bool positive);
  static Lit from_code(int code);

  int variable() const { return code_ < 0 ? -code_ : code_; }
  bool positive() const { return code_ > 0; }
  int code() const { return code_; }
  Lit negation() const { return from_code(-code_); }

  // Canonical order: by variable, positive before negative.
  std::strong_ordering operator<=>(const Lit& o) const {
    if (auto c = variable() <=> o.variable(); c != 0) return c;
    return (positive() ? 0 : 1) <=> (o.positive() ? 0 : 1);
  }
  bool operator==(const Lit&) const = default;

 private:
  explicit Lit(int code) : code_(code) {}
  int code_;
};

/// A non-tautological disjunction with a weight. Literals are kept sorted in
/// canonical order and mention each variable at most once. Weight 0 occurs
/// only for structural placeholder units produced by the compact solver.
struct Clause {
  std::vector<Lit> literals;
  Weight weight;

  bool is_unit() const { return literals.size() == 1; }
  bool mentions(int variable) const;
  std::optional<Lit> literal_of(int variable) const;

  bool operator==(const Clause& o) const {
    return literals == o.literals && weight == o.weight;
  }
};

/// Total order on literal sets; clause identity in a formula.
bool clause_key_less(const std::vector<Lit>& a, const std::vector<Lit>& b);
std::string clause_key_string(const std::vector<Lit>& key);

class Assignment;

/// An immutable weighted CNF formula. Stored clauses have pairwise distinct
/// literal sets and are sorted by literal-set key; the variable set is
/// exactly the set of variables occurring in clauses.
class Formula {
 public:
  Formula() = default;

  /// Builds a formula from clauses that are already individually canonical
  /// (sorted literals, one occurrence per variable, weight >= 0). Clauses
  /// with identical literal sets are merged by summing weights. Weight-0
  /// clauses are kept; callers that must not produce them filter first.
  static Formula from_clauses(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<int>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  std::size_t clause_count() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  const Weight& total_weight() const { return total_weight_; }

  bool has_variable(int variable) const;
  /// Pointer to the stored clause with this literal set, or nullptr.
  const Clause* find(const std::vector<Lit>& key) const;

  bool operator==(const Formula& o) const {
    return clauses_ == o.clauses_;
  }

 private:
  std::vector<Clause> clauses_;
  std::vector<int> variables_;
  Weight total_weight_ = 0;
};

/// A (possibly partial) mapping from variables to truth values.
class Assignment {
 public:
  Assignment() = default;

  void set(int variable, bool value);
  std::optional<bool> value(int variable) const;
  bool defines(int variable) const { return values_.count(variable) > 0; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  const std::map<int, bool>& values() const { return values_; }
  bool is_total_on(const Formula& f) const;

  /// DIMACS-style view: variable id, negated when assigned false.
  std::vector<int> to_codes() const;
  static Assignment from_codes(const std::vector<int>& codes);

  bool operator==(const Assignment&) const = default;

 private:
  std::map<int, bool> values_;
};

struct NormalizationReport {
  /// Weight satisfied by every assignment: removed tautologies here;
  /// ucf_reduce adds its own guarantee separately.
  Weight guaranteed_weight = 0;
  std::vector<std::string> forced_log;
};

using RawClause = std::pair<std::vector<Lit>, Weight>;

/// Ingestion gate: collapses duplicate literals, removes tautologies
/// (crediting their weight as guaranteed), merges identical clauses by
/// weight summation. Rejects empty clauses and weights < 1.
std::pair<Formula, NormalizationReport> normalize(
    const std::vector<RawClause>& raw_clauses);

/// Unit-conflict elimination: for every variable carrying both unit clauses
/// (x) and (!x), cancels the lighter against the heavier and credits the
/// cancelled weight. sat(input) = sat(result) + guaranteed and
/// w(input) = w(result) + 2*guaranteed.
std::pair<Formula, Weight> ucf_reduce(const Formula& f);

/// Total weight of clauses satisfied by a total assignment.
Weight evaluate(const Formula& f, const Assignment& assignment);

/// F_U: the subformula of clauses containing at least one variable of U.
Formula restrict_to_vars(const Formula& f, const std::set<int>& vars);
/// F \ F_U: the complementary subformula.
Formula exclude_vars(const Formula& f, const std::set<int>& vars);

/// No variable carries both unit clauses (x) and (!x).
bool is_ucf(const Formula& f);

/// Every clause is a positive unit (x) or an all-negative 2-clause, and
/// every variable has its positive unit present (weight 0 counts).
bool is_compact(const Formula& f);

}  // namespace phisat
