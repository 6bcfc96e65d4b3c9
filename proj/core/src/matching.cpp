#include "phisat/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace phisat {

IncidenceGraph build_incidence(const Formula& f) {
  IncidenceGraph g;
  g.variables = f.variables();
  g.clause_keys.reserve(f.clause_count());
  g.var_adj.assign(g.variables.size(), {});
  g.clause_adj.assign(f.clause_count(), {});
  for (std::size_t ci = 0; ci < f.clause_count(); ++ci) {
    const Clause& c = f.clauses()[ci];
    g.clause_keys.push_back(c.literals);
    for (const Lit& l : c.literals) {
      const auto it = std::lower_bound(g.variables.begin(), g.variables.end(),
                                       l.variable());
      const int vi = static_cast<int>(it - g.variables.begin());
      g.var_adj[vi].push_back(static_cast<int>(ci));
      g.clause_adj[ci].push_back(vi);
    }
  }
  return g;
}

bool Matching::covers_all_variables() const {
  return std::none_of(variable_to_clause.begin(), variable_to_clause.end(),
                      [](int c) { return c < 0; });
}

namespace {

// Hopcroft-Karp over an implicit bipartite graph: left side = variables,
// right side = clause slots. Right-side capacities model the multiset view;
// plain matchings use capacity one per clause.
class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<int>>& left_adj,
               std::size_t right_count, std::vector<int> capacity)
      : left_adj_(left_adj),
        capacity_(std::move(capacity)),
        left_match_(left_adj.size(), -1),
        right_matched_(right_count),
        dist_(left_adj.size(), kInf) {}

  std::size_t run() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < left_adj_.size(); ++u)
        if (left_match_[u] < 0 && dfs(static_cast<int>(u))) ++matched;
    }
    return matched;
  }

  const std::vector<int>& left_match() const { return left_match_; }
  const std::vector<std::vector<int>>& right_matched() const {
    return right_matched_;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool has_slack(int r) const {
    return static_cast<int>(right_matched_[r].size()) < capacity_[r];
  }

  bool bfs() {
    std::queue<int> q;
    bool reachable_free = false;
    for (std::size_t u = 0; u < left_adj_.size(); ++u) {
      if (left_match_[u] < 0) {
        dist_[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist_[u] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int r : left_adj_[u]) {
        if (has_slack(r)) {
          reachable_free = true;
          continue;
        }
        for (int u2 : right_matched_[r]) {
          if (dist_[u2] == kInf) {
            dist_[u2] = dist_[u] + 1;
            q.push(u2);
          }
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int u) {
    for (int r : left_adj_[u]) {
      if (has_slack(r)) {
        attach(u, r);
        return true;
      }
      for (std::size_t i = 0; i < right_matched_[r].size(); ++i) {
        const int u2 = right_matched_[r][i];
        if (dist_[u2] == dist_[u] + 1 && dfs(u2)) {
          right_matched_[r][i] = u;  // u2 was re-matched inside dfs
          left_match_[u] = r;
          return true;
        }
      }
    }
    dist_[u] = kInf;
    return false;
  }

  void attach(int u, int r) {
    right_matched_[r].push_back(u);
    left_match_[u] = r;
  }

  const std::vector<std::vector<int>>& left_adj_;
  std::vector<int> capacity_;
  std::vector<int> left_match_;
  std::vector<std::vector<int>> right_matched_;
  std::vector<int> dist_;
};

}  // namespace

Matching maximum_matching(const IncidenceGraph& g) {
  HopcroftKarp hk(g.var_adj, g.clause_count(),
                  std::vector<int>(g.clause_count(), 1));
  Matching m;
  m.size = hk.run();
  m.variable_to_clause = hk.left_match();
  m.clause_to_variable.assign(g.clause_count(), -1);
  for (std::size_t c = 0; c < g.clause_count(); ++c) {
    const auto& hosts = hk.right_matched()[c];
    if (!hosts.empty()) m.clause_to_variable[c] = hosts.front();
  }
  return m;
}

CapacityMatching capacity_matching(const IncidenceGraph& g, const Formula& f) {
  std::vector<int> caps(g.clause_count(), 0);
  for (std::size_t c = 0; c < g.clause_count(); ++c) {
    // A clause can host at most one variable per unit of weight, and no
    // more distinct variables than it mentions.
    const Clause& cl = f.clauses()[c];
    const auto arity = static_cast<int>(cl.literals.size());
    caps[c] = cl.weight < arity ? static_cast<int>(cl.weight.get_si())
                                : arity;
  }
  HopcroftKarp hk(g.var_adj, g.clause_count(), std::move(caps));
  CapacityMatching m;
  m.size = hk.run();
  m.variable_to_clause = hk.left_match();
  m.clause_to_variables = hk.right_matched();
  for (auto& hosts : m.clause_to_variables) std::sort(hosts.begin(), hosts.end());
  return m;
}

}  // namespace phisat
