#include "phisat/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace phisat {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // bias is irrelevant at this scale; stays portable
}

Weight draw_weight(std::mt19937_64& rng, long max_weight) {
  return Weight(1 + static_cast<long>(draw(rng, static_cast<std::uint64_t>(max_weight))));
}

Formula tight_pairs(int pairs) {
  if (pairs < 1) throw std::invalid_argument("generate: tight family needs l >= 1");
  std::vector<Clause> clauses;
  clauses.reserve(3 * pairs);
  for (int i = 1; i <= pairs; ++i) {
    const int x = i, y = pairs + i;
    clauses.push_back(Clause{{Lit(x, true)}, 1});
    clauses.push_back(Clause{{Lit(y, true)}, 1});
    clauses.push_back(Clause{{Lit(x, false), Lit(y, false)}, 1});
  }
  return Formula::from_clauses(std::move(clauses));
}

Formula triangles(const GeneratorConfig& cfg) {
  if (cfg.variable_count < 3 || cfg.variable_count % 3 != 0)
    throw std::invalid_argument("generate: triangle batch needs n divisible by 3");
  if (cfg.max_weight < 1)
    throw std::invalid_argument("generate: max_weight must be >= 1");
  const Weight w(cfg.max_weight);
  std::vector<Clause> clauses;
  for (int base = 1; base <= cfg.variable_count; base += 3) {
    const int a = base, b = base + 1, c = base + 2;
    clauses.push_back(Clause{{Lit(a, true)}, w});
    clauses.push_back(Clause{{Lit(b, true)}, w});
    clauses.push_back(Clause{{Lit(c, true)}, w});
    clauses.push_back(Clause{{Lit(a, false), Lit(b, false)}, w});
    clauses.push_back(Clause{{Lit(a, false), Lit(c, false)}, w});
    clauses.push_back(Clause{{Lit(b, false), Lit(c, false)}, w});
  }
  return Formula::from_clauses(std::move(clauses));
}

Formula compact_random(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  const int n = cfg.variable_count;
  if (n < 1) throw std::invalid_argument("generate: compact family needs n >= 1");
  if (cfg.clause_count < n)
    throw std::invalid_argument("generate: compact family needs m >= n");
  const long long wanted = cfg.clause_count - n;
  const long long available = static_cast<long long>(n) * (n - 1) / 2;
  if (wanted > available)
    throw std::invalid_argument("generate: more 2-clauses than distinct pairs");

  std::vector<Clause> clauses;
  clauses.reserve(cfg.clause_count);
  for (int v = 1; v <= n; ++v)
    clauses.push_back(Clause{{Lit(v, true)}, draw_weight(rng, cfg.max_weight)});

  std::set<std::pair<int, int>> pairs;
  if (wanted * 3 >= available) {
    std::vector<std::pair<int, int>> all;
    all.reserve(available);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) all.emplace_back(a, b);
    for (std::size_t i = all.size(); i > 1; --i)
      std::swap(all[i - 1], all[draw(rng, i)]);
    pairs.insert(all.begin(), all.begin() + wanted);
  } else {
    while (static_cast<long long>(pairs.size()) < wanted) {
      const int a = 1 + static_cast<int>(draw(rng, n));
      const int b = 1 + static_cast<int>(draw(rng, n));
      if (a == b) continue;
      pairs.emplace(std::min(a, b), std::max(a, b));
    }
  }
  for (const auto& [a, b] : pairs)
    clauses.push_back(
        Clause{{Lit(a, false), Lit(b, false)}, draw_weight(rng, cfg.max_weight)});
  Formula f = Formula::from_clauses(std::move(clauses));
  if (!is_compact(f)) throw std::logic_error("generate: compact predicate failed");
  return f;
}

Formula clauses_random(const GeneratorConfig& cfg, std::mt19937_64& rng,
                       bool keep_ucf) {
  const int n = cfg.variable_count;
  if (n < 1) throw std::invalid_argument("generate: need n >= 1");
  if (cfg.clause_count < 0) throw std::invalid_argument("generate: need m >= 0");
  std::map<int, bool> unit_polarity;
  std::vector<RawClause> raw;
  raw.reserve(cfg.clause_count);
  for (int i = 0; i < cfg.clause_count; ++i) {
    int size = 1 + static_cast<int>(draw(rng, 3));
    size = std::min(size, n);
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < size)
      vars.insert(1 + static_cast<int>(draw(rng, n)));
    std::vector<Lit> lits;
    for (int v : vars) {
      bool positive = draw(rng, 2) == 0;
      if (keep_ucf && size == 1) {
        const auto it = unit_polarity.find(v);
        if (it != unit_polarity.end())
          positive = it->second;
        else
          unit_polarity.emplace(v, positive);
      }
      lits.push_back(Lit(v, positive));
    }
    raw.emplace_back(std::move(lits), draw_weight(rng, cfg.max_weight));
  }
  Formula f = normalize(raw).first;
  if (keep_ucf && !is_ucf(f)) throw std::logic_error("generate: ucf predicate failed");
  return f;
}

}  // namespace

Formula generate(const GeneratorConfig& config) {
  if (config.max_weight < 1)
    throw std::invalid_argument("generate: max_weight must be >= 1");
  std::mt19937_64 rng(config.seed);
  switch (config.family) {
    case Family::Tight:
      return tight_pairs(config.pair_count);
    case Family::TriangleBatch:
      return triangles(config);
    case Family::Compact:
      return compact_random(config, rng);
    case Family::Ucf:
      return clauses_random(config, rng, true);
    case Family::General:
      return clauses_random(config, rng, false);
  }
  throw std::invalid_argument("generate: unknown family");
}

}  // namespace phisat
