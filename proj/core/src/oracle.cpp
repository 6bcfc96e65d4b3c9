#include "phisat/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace phisat {

namespace {

struct MaskedClause {
  std::uint32_t satisfied_if_true;   // bit i: variable i assigned true
  std::uint32_t satisfied_if_false;  // bit i: variable i assigned false
};

// Enumeration with the first variable in the most significant bit, so the
// numeric counter order is the lexicographic order with false before true.
// Keeping only strict improvements makes the witness the lexicographically
// least optimum.
template <typename Acc>
std::pair<Acc, std::uint32_t> sweep(const std::vector<MaskedClause>& clauses,
                                    const std::vector<Acc>& weights,
                                    unsigned n) {
  Acc best{};
  std::uint32_t best_mask = 0;
  bool have = false;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t counter = 0; counter < end; ++counter) {
    const auto true_mask = static_cast<std::uint32_t>(counter);
    Acc total{};
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if ((clauses[i].satisfied_if_true & true_mask) ||
          (clauses[i].satisfied_if_false & ~true_mask))
        total += weights[i];
    }
    if (!have || total > best) {
      have = true;
      best = total;
      best_mask = true_mask;
    }
  }
  return {best, best_mask};
}

}  // namespace

OracleResult max_sat_exact(const Formula& f, int budget) {
  const auto n = f.variable_count();
  if (static_cast<int>(n) > budget)
    throw std::invalid_argument(
        "max_sat_exact: variable count exceeds the enumeration budget");
  if (n > 30)
    throw std::invalid_argument("max_sat_exact: enumeration beyond 30 variables");
  OracleResult result;
  if (n == 0) return result;

  const auto& vars = f.variables();
  std::vector<MaskedClause> clauses(f.clause_count());
  for (std::size_t ci = 0; ci < f.clause_count(); ++ci) {
    for (const Lit& l : f.clauses()[ci].literals) {
      const auto it = std::lower_bound(vars.begin(), vars.end(), l.variable());
      // Most significant bit = first variable.
      const unsigned bit = n - 1 - static_cast<unsigned>(it - vars.begin());
      if (l.positive())
        clauses[ci].satisfied_if_true |= std::uint32_t{1} << bit;
      else
        clauses[ci].satisfied_if_false |= std::uint32_t{1} << bit;
    }
  }

  // Fast path when no partial sum can leave 64 bits.
  const Weight& total_weight = f.total_weight();
  std::uint32_t best_mask;
  if (total_weight == 0 || mpz_sizeinbase(total_weight.get_mpz_t(), 2) < 63) {
    std::vector<std::uint64_t> weights;
    weights.reserve(f.clause_count());
    for (const Clause& c : f.clauses())
      weights.push_back(c.weight.get_ui());
    auto [best, mask] = sweep(clauses, weights, static_cast<unsigned>(n));
    result.optimum = Weight(static_cast<unsigned long>(best));
    best_mask = mask;
  } else {
    std::vector<Weight> weights;
    weights.reserve(f.clause_count());
    for (const Clause& c : f.clauses()) weights.push_back(c.weight);
    auto [best, mask] = sweep(clauses, weights, static_cast<unsigned>(n));
    result.optimum = best;
    best_mask = mask;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const unsigned bit = n - 1 - static_cast<unsigned>(i);
    result.witness.set(vars[i], (best_mask >> bit) & 1);
  }
  return result;
}

}  // namespace phisat
