#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "phisat/formula.hpp"
#include "phisat/oracle.hpp"

using namespace phisat;
using namespace phisat::testing;

TEST_SUITE("formula") {

TEST_CASE("normalize collapses duplicate literals") {
  auto [f, report] = normalize({{{Lit::from_code(1), Lit::from_code(1)}, 2}});
  CHECK(f.clause_count() == 1);
  CHECK(f.clauses()[0].literals == std::vector<Lit>{Lit::from_code(1)});
  CHECK(f.clauses()[0].weight == 2);
  CHECK(report.guaranteed_weight == 0);
}

TEST_CASE("normalize removes tautologies and credits their weight") {
  auto [f, report] = normalize({{{Lit::from_code(1), Lit::from_code(-1)}, 3}});
  CHECK(f.empty());
  CHECK(report.guaranteed_weight == 3);
  CHECK(!report.forced_log.empty());
}

TEST_CASE("normalize merges identical clauses by weight") {
  auto [f, report] = normalize({{{Lit::from_code(1), Lit::from_code(2)}, 1},
                                {{Lit::from_code(2), Lit::from_code(1)}, 4}});
  CHECK(f.clause_count() == 1);
  CHECK(f.clauses()[0].weight == 5);
  CHECK(report.guaranteed_weight == 0);
}

TEST_CASE("normalize rejects bad input") {
  CHECK_THROWS_AS(normalize({{{}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize({{{Lit::from_code(1)}, 0}}), std::invalid_argument);
}

TEST_CASE("normalize is idempotent") {
  const Formula f = make({{{1, 2}, 3}, {{-1}, 2}, {{2, -3}, 1}});
  std::vector<RawClause> raw;
  for (const Clause& c : f.clauses()) raw.emplace_back(c.literals, c.weight);
  CHECK(normalize(raw).first == f);
}

TEST_CASE("ucf_reduce cancels conflicting unit pairs") {
  auto [f, guaranteed] = ucf_reduce(make({{{1}, 2}, {{-1}, 3}, {{1, 2}, 1}}));
  CHECK(f == make({{{-1}, 1}, {{1, 2}, 1}}));
  CHECK(guaranteed == 2);
}

TEST_CASE("ucf_reduce removes exactly cancelled pairs") {
  auto [f, guaranteed] = ucf_reduce(make({{{1}, 1}, {{-1}, 1}}));
  CHECK(f.empty());
  CHECK(guaranteed == 1);
}

TEST_CASE("ucf_reduce is the identity on UCF input") {
  const Formula f = make({{{1}, 1}, {{2}, 2}, {{-1, -2}, 1}});
  auto [g, guaranteed] = ucf_reduce(f);
  CHECK(g == f);
  CHECK(guaranteed == 0);
}

TEST_CASE("ucf_reduce conserves the optimum and the weight identity") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Formula f = random_family(Family::General, 6, 10, 3, seed);
    auto [g, guaranteed] = ucf_reduce(f);
    CHECK(f.total_weight() == g.total_weight() + 2 * guaranteed);
    CHECK(max_sat_exact(f).optimum ==
          max_sat_exact(g).optimum + guaranteed);
    CHECK(is_ucf(g));
  }
}

TEST_CASE("evaluate on pinned examples") {
  const Formula f = make({{{1}, 1}, {{2}, 1}, {{-1, -2}, 1}});
  CHECK(evaluate(f, assign({1, 2})) == 2);
  CHECK(evaluate(f, assign({1, -2})) == 2);
  CHECK(evaluate(Formula(), Assignment()) == 0);
  CHECK_THROWS_AS(evaluate(f, assign({1})), std::invalid_argument);
}

TEST_CASE("satisfied and unsatisfied weight partition the total") {
  const Formula f = make({{{1, 2}, 3}, {{-1}, 2}, {{2, -3}, 1}, {{3}, 4}});
  for_each_assignment(f, [&](const Assignment& a) {
    Weight unsat = 0;
    for (const Clause& c : f.clauses()) {
      bool sat = false;
      for (const Lit& l : c.literals)
        if (*a.value(l.variable()) == l.positive()) sat = true;
      if (!sat) unsat += c.weight;
    }
    CHECK(evaluate(f, a) + unsat == f.total_weight());
  });
}

TEST_CASE("restrict_to_vars selects touching clauses") {
  const Formula f = make({{{1}, 1}, {{3, 4}, 1}});
  CHECK(restrict_to_vars(f, {1}) == make({{{1}, 1}}));
  CHECK(restrict_to_vars(f, {}).empty());
  CHECK(restrict_to_vars(f, {1, 3, 4}) == f);
  CHECK(exclude_vars(f, {1}) == make({{{3, 4}, 1}}));
}

TEST_CASE("weight splits across any restriction") {
  const Formula f = make({{{1, 2}, 3}, {{-2, 3}, 2}, {{4}, 1}, {{-1, -4}, 5}});
  const std::set<int> candidates[] = {{}, {1}, {2, 3}, {1, 4}, {1, 2, 3, 4}};
  for (const auto& u : candidates) {
    CHECK(restrict_to_vars(f, u).total_weight() +
              exclude_vars(f, u).total_weight() ==
          f.total_weight());
  }
}

TEST_CASE("is_ucf and is_compact on pinned examples") {
  CHECK(is_compact(make({{{1}, 1}, {{2}, 1}, {{-1, -2}, 1}})));
  CHECK(!is_compact(make({{{1}, 1}, {{-1, -2}, 1}})));  // unit for 2 missing
  CHECK(!is_ucf(make({{{1}, 1}, {{-1}, 1}})));
  CHECK(is_ucf(Formula()));
  CHECK(is_compact(Formula()));
  CHECK(!is_compact(make({{{1, 2}, 1}, {{1}, 1}, {{2}, 1}})));  // positive 2-clause
}

TEST_CASE("weight-0 placeholder units count as present for compactness") {
  Formula f = Formula::from_clauses(
      {Clause{{Lit(1, true)}, 0},
       Clause{{Lit(2, true)}, 1},
       Clause{{Lit(1, false), Lit(2, false)}, 1}});
  CHECK(is_compact(f));
  CHECK(f.total_weight() == 2);
}

TEST_CASE("assignment code round trip") {
  const Assignment a = assign({3, -5, 7});
  CHECK(a.to_codes() == std::vector<int>{3, -5, 7});
  CHECK(Assignment::from_codes(a.to_codes()) == a);
  CHECK(*a.value(5) == false);
  CHECK(!a.defines(4));
}

}  // TEST_SUITE
