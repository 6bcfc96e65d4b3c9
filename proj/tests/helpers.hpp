#pragma once

#include <cstdlib>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "phisat/autarky.hpp"
#include "phisat/formula.hpp"
#include "phisat/generate.hpp"
#include "phisat/oracle.hpp"
#include "phisat/q5.hpp"

namespace phisat::testing {

struct ClauseSpec {
  std::vector<int> literals;
  long weight = 1;
};

inline Formula make(std::initializer_list<ClauseSpec> clauses) {
  std::vector<RawClause> raw;
  for (const ClauseSpec& c : clauses) {
    std::vector<Lit> lits;
    for (int code : c.literals) lits.push_back(Lit::from_code(code));
    raw.emplace_back(std::move(lits), Weight(c.weight));
  }
  return normalize(raw).first;
}

inline Assignment assign(std::initializer_list<int> codes) {
  return Assignment::from_codes(std::vector<int>(codes));
}

// Enumerates all total assignments of f, invoking fn on each.
template <typename Fn>
void for_each_assignment(const Formula& f, Fn&& fn) {
  const auto& vars = f.variables();
  const std::size_t n = vars.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i)
      a.set(vars[i], (mask >> i) & 1);
    fn(a);
  }
}

// T(F) = maxsat(F) - phi * w(F), the quantity the elimination accounting
// inequalities are stated in.
inline Q5 excess_over_phi(const Formula& f, int budget = 24) {
  return Q5(max_sat_exact(f, budget).optimum) -
         Q5::phi().scaled(f.total_weight());
}

inline Formula random_family(Family family, int n, int m, long max_weight,
                             std::uint64_t seed, int pairs = 0) {
  GeneratorConfig cfg;
  cfg.family = family;
  cfg.variable_count = n;
  cfg.clause_count = m;
  cfg.max_weight = max_weight;
  cfg.seed = seed;
  cfg.pair_count = pairs;
  return generate(cfg);
}

// Random compact instance with extra_wish 2-clauses, clamped to the number
// of distinct variable pairs.
inline Formula random_compact(int n, int extra_wish, long max_weight,
                              std::uint64_t seed) {
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const long long extra = extra_wish < pairs ? extra_wish : pairs;
  return random_family(Family::Compact, n, n + static_cast<int>(extra),
                       max_weight, seed);
}

// Nonempty expanding UCF instance: the autarky remainder of a random UCF
// formula; retries seeds until the remainder is nonempty.
inline Formula random_expanding_ucf(int n, int m, long max_weight,
                                    std::uint64_t& seed) {
  for (;;) {
    const Formula f = random_family(Family::Ucf, n, m, max_weight, seed++);
    Formula remainder = matching_autarky(f).remainder;
    if (!remainder.empty()) return remainder;
  }
}

}  // namespace phisat::testing
