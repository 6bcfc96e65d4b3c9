#include "phisat/compact_solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace phisat {

std::pair<Weight, Weight> occurrence_weights(const Formula& f, int variable) {
  if (!f.has_variable(variable))
    throw std::invalid_argument("occurrence_weights: unknown variable");
  Weight pos = 0, neg = 0;
  for (const Clause& c : f.clauses()) {
    const auto l = c.literal_of(variable);
    if (!l) continue;
    (l->positive() ? pos : neg) += c.weight;
  }
  return {pos, neg};
}

Q5 epsilon(const Formula& f, int variable) {
  const auto [pos, neg] = occurrence_weights(f, variable);
  return Q5(pos) - Q5::phi().scaled(neg);
}

namespace {

Q5 epsilon_of(const Weight& pos, const Weight& neg) {
  return Q5(pos) - Q5::phi().scaled(neg);
}

bool case_b_holds(const Weight& pos, const Weight& neg) {
  const Q5 margin = Q5::one_minus_phi() * epsilon_of(pos, neg) - Q5::gamma();
  return margin.sign() >= 0;
}

// Mutable view of a compact formula during the elimination loop. Tracks
// per-variable unit weights and the all-negative 2-clause adjacency, plus
// the sets of variables currently satisfying the case A / case B tests so
// classification stays cheap across iterations.
class WorkingState {
 public:
  explicit WorkingState(const Formula& f) {
    if (!is_compact(f))
      throw std::invalid_argument("compact solver: formula is not compact");
    for (int v : f.variables()) vars_.emplace(v, VarState{});
    for (const Clause& c : f.clauses()) {
      if (c.is_unit()) {
        vars_[c.literals.front().variable()].unit_weight = c.weight;
        continue;
      }
      const int a = c.literals[0].variable();
      const int b = c.literals[1].variable();
      vars_[a].partners.emplace(b, c.weight);
      vars_[b].partners.emplace(a, c.weight);
      vars_[a].neg_weight += c.weight;
      vars_[b].neg_weight += c.weight;
      two_clauses_.emplace(std::min(a, b), std::max(a, b));
    }
    for (auto& [v, st] : vars_) refresh_flags(v);
  }

  bool empty() const { return vars_.empty(); }
  std::size_t live_variables() const { return vars_.size(); }

  bool alive(int v) const { return vars_.count(v) > 0; }

  const Weight& unit_weight(int v) const { return vars_.at(v).unit_weight; }
  const Weight& two_clause_weight(int a, int b) const {
    return vars_.at(a).partners.at(b);
  }

  CaseSelection classify() const {
    if (vars_.empty())
      throw std::invalid_argument("classify: formula has no variables");
    CaseSelection sel{};
    if (!case_a_.empty()) {
      sel.tag = CaseTag::A;
      sel.x = *case_a_.begin();
      return sel;
    }
    if (!case_b_.empty()) {
      sel.tag = CaseTag::B;
      sel.x = *case_b_.begin();
      return sel;
    }
    for (const auto& [u, v] : two_clauses_) {
      if (!edge_is_good(u, v)) continue;
      sel.tag = CaseTag::C;
      sel.clause = {u, v};
      const int s = (epsilon_of_var(u) - epsilon_of_var(v)).sign();
      if (s >= 0) {
        sel.x = u;
        sel.y = v;
      } else {
        sel.x = v;
        sel.y = u;
      }
      return sel;
    }
    if (two_clauses_.empty())
      throw std::logic_error("classify: no two-clauses left yet case A failed");
    const auto [x, y] = *two_clauses_.begin();
    int z = 0;
    for (const auto& [cand, w] : vars_.at(x).partners) {
      if (cand != y && vars_.at(y).partners.count(cand)) {
        z = cand;
        break;
      }
    }
    if (z == 0)
      throw std::logic_error("classify: no triangle witness although no edge is good");
    sel.tag = CaseTag::D;
    sel.x = x;
    sel.y = y;
    sel.z = z;
    sel.clause = {x, y};
    // With no good edge the three variables form a closed component: the
    // only clauses touching them are their units and the three 2-clauses.
    if (!neighbors_are(x, y, z) || !neighbors_are(y, x, z) ||
        !neighbors_are(z, x, y))
      throw std::logic_error("classify: triangle is not closed");
    return sel;
  }

  bool edge_is_good(int u, int v) const {
    for (const auto& [z, w] : vars_.at(u).partners) {
      if (z == v) continue;
      const auto& zp = vars_.at(z).partners;
      if (zp.size() == 2 && zp.count(v)) return false;  // N(z) == {u, v}
    }
    return true;
  }

  Q5 epsilon_of_var(int v) const {
    const VarState& st = vars_.at(v);
    return epsilon_of(st.unit_weight, st.neg_weight);
  }

  bool neighbors_are(int a, int p, int q) const {
    const auto& m = vars_.at(a).partners;
    return m.size() == 2 && m.count(p) && m.count(q);
  }

  // Steps 3 and 4 for a batch of decided variables.
  void apply(const std::vector<std::pair<int, bool>>& values) {
    std::map<int, bool> decided;
    for (const auto& [v, b] : values) {
      if (!alive(v)) throw std::invalid_argument("simplify: variable not present");
      decided[v] = b;
    }

    // Step 3: drop satisfied clauses, delete falsified literals, drop
    // clauses that became empty. A two-clause between two decided variables
    // simply disappears; one losing a single literal becomes a pending
    // negative unit on the surviving variable.
    std::map<int, Weight> pending_neg_unit;
    for (const auto& [v, value] : decided) {
      const auto partners = vars_.at(v).partners;  // copy; we mutate below
      for (const auto& [z, w] : partners) {
        remove_two_clause(v, z);
        if (value && !decided.count(z))
          pending_neg_unit[z] += w;  // literal !v deleted, (!z) remains
      }
      kill_variable(v);
      records_.push_back(
          {v, value ? EliminationKind::AssignedTrue : EliminationKind::AssignedFalse});
    }

    // Step 4: fold every pending negative unit back into compact shape, in
    // increasing id order, re-reading weights after each rewrite.
    for (const auto& [y, neg_unit] : pending_neg_unit) {
      VarState& st = vars_.at(y);
      if (neg_unit > st.unit_weight) {
        // Negative side outweighs the positive unit: all clauses on y are
        // replaced by the unit (y) carrying the excess, inverting y's
        // meaning relative to the input formula.
        const Weight total_negative = neg_unit + st.neg_weight;
        auto partners = st.partners;
        for (const auto& [z, w] : partners) remove_two_clause(y, z);
        vars_.at(y).unit_weight = total_negative - vars_.at(y).unit_weight;
        records_.push_back({y, EliminationKind::FlipMerged});
        touch(y);
      } else {
        st.unit_weight -= neg_unit;
        if (st.unit_weight == 0 && st.partners.empty()) {
          kill_variable(y);
          records_.push_back({y, EliminationKind::ZeroedRemoved});
        } else {
          // Weight-0 units stay as structural placeholders so the formula
          // remains compact while y still occurs negatively.
          touch(y);
        }
      }
    }
    refresh_dirty();
  }

  Formula to_formula() const {
    std::vector<Clause> clauses;
    clauses.reserve(vars_.size() + two_clauses_.size());
    for (const auto& [v, st] : vars_)
      clauses.push_back(Clause{{Lit(v, true)}, st.unit_weight});
    for (const auto& [a, b] : two_clauses_)
      clauses.push_back(
          Clause{{Lit(a, false), Lit(b, false)}, vars_.at(a).partners.at(b)});
    return Formula::from_clauses(std::move(clauses));
  }

  const std::vector<EliminationRecord>& records() const { return records_; }

 private:
  struct VarState {
    Weight unit_weight = 0;
    Weight neg_weight = 0;               // sum of incident 2-clause weights
    std::map<int, Weight> partners;      // neighbor -> 2-clause weight
  };

  void remove_two_clause(int a, int b) {
    const Weight w = vars_.at(a).partners.at(b);
    vars_.at(a).partners.erase(b);
    vars_.at(b).partners.erase(a);
    vars_.at(a).neg_weight -= w;
    vars_.at(b).neg_weight -= w;
    two_clauses_.erase({std::min(a, b), std::max(a, b)});
    touch(a);
    touch(b);
  }

  void kill_variable(int v) {
    for (const auto& [z, w] : std::map<int, Weight>(vars_.at(v).partners))
      remove_two_clause(v, z);
    vars_.erase(v);
    case_a_.erase(v);
    case_b_.erase(v);
    dirty_.erase(v);
  }

  void touch(int v) { dirty_.insert(v); }

  void refresh_dirty() {
    for (int v : dirty_)
      if (alive(v)) refresh_flags(v);
    dirty_.clear();
  }

  void refresh_flags(int v) {
    const VarState& st = vars_.at(v);
    if (st.unit_weight >= st.neg_weight)
      case_a_.insert(v);
    else
      case_a_.erase(v);
    if (case_b_holds(st.unit_weight, st.neg_weight))
      case_b_.insert(v);
    else
      case_b_.erase(v);
  }

  std::map<int, VarState> vars_;
  std::set<std::pair<int, int>> two_clauses_;
  std::set<int> case_a_, case_b_, dirty_;
  std::vector<EliminationRecord> records_;
};

}  // namespace

bool is_good_clause(const Formula& f, int x, int y) {
  WorkingState state(f);
  const std::pair<int, int> key{std::min(x, y), std::max(x, y)};
  if (!state.alive(x) || !state.alive(y))
    throw std::invalid_argument("is_good_clause: unknown variable");
  Clause probe{{Lit(key.first, false), Lit(key.second, false)}, 0};
  if (!f.find(probe.literals))
    throw std::invalid_argument("is_good_clause: clause not in formula");
  return state.edge_is_good(key.first, key.second);
}

CaseSelection classify(const Formula& f) { return WorkingState(f).classify(); }

SimplifyResult simplify_assign(const Formula& f, const Assignment& values) {
  if (values.size() > 3)
    throw std::invalid_argument("simplify_assign: more than three variables");
  WorkingState state(f);
  std::vector<std::pair<int, bool>> batch(values.values().begin(),
                                          values.values().end());
  state.apply(batch);
  return SimplifyResult{state.to_formula(), state.records()};
}

namespace {

// Weight over the six triangle clauses for one assignment of (x,y,z).
Weight triangle_weight(const WorkingState& st, int x, int y, int z, bool vx,
                       bool vy, bool vz) {
  Weight sum = 0;
  if (vx) sum += st.unit_weight(x);
  if (vy) sum += st.unit_weight(y);
  if (vz) sum += st.unit_weight(z);
  if (!vx || !vy) sum += st.two_clause_weight(x, y);
  if (!vx || !vz) sum += st.two_clause_weight(x, z);
  if (!vy || !vz) sum += st.two_clause_weight(y, z);
  return sum;
}

Assignment reconstruct(const Formula& original,
                       const std::vector<EliminationRecord>& records) {
  Assignment alpha;
  std::map<int, int> flip_parity;
  std::vector<int> zeroed;  // in elimination order
  for (const EliminationRecord& r : records) {
    switch (r.kind) {
      case EliminationKind::FlipMerged:
        flip_parity[r.variable] ^= 1;
        break;
      case EliminationKind::AssignedTrue:
      case EliminationKind::AssignedFalse: {
        bool value = r.kind == EliminationKind::AssignedTrue;
        if (flip_parity[r.variable] & 1) value = !value;
        alpha.set(r.variable, value);
        break;
      }
      case EliminationKind::ZeroedRemoved:
        zeroed.push_back(r.variable);
        break;
    }
  }
  // Zero-cancelled variables contributed the same weight either way at the
  // moment of removal; pick the value that serves their original clauses
  // best given everything reconstructed so far, later removals first.
  for (auto it = zeroed.rbegin(); it != zeroed.rend(); ++it) {
    const int v = *it;
    Weight score_true = 0, score_false = 0;
    for (const Clause& c : original.clauses()) {
      const auto mine = c.literal_of(v);
      if (!mine) continue;
      bool satisfied_by_others = false;
      for (const Lit& l : c.literals) {
        if (l.variable() == v) continue;
        const auto val = alpha.value(l.variable());
        if (val && *val == l.positive()) {
          satisfied_by_others = true;
          break;
        }
      }
      if (satisfied_by_others) continue;
      (mine->positive() ? score_true : score_false) += c.weight;
    }
    alpha.set(v, score_true >= score_false);
  }
  return alpha;
}

// One pass over the variables, keeping any flip that does not lose weight.
void polish_assignment(const Formula& f, Assignment& alpha) {
  const auto& vars = f.variables();
  std::vector<std::vector<std::size_t>> occurrence(vars.size());
  std::vector<int> satisfied_literals(f.clause_count(), 0);
  auto var_index = [&](int v) {
    return std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
  };
  for (std::size_t ci = 0; ci < f.clause_count(); ++ci) {
    for (const Lit& l : f.clauses()[ci].literals) {
      occurrence[var_index(l.variable())].push_back(ci);
      if (*alpha.value(l.variable()) == l.positive()) ++satisfied_literals[ci];
    }
  }
  for (std::size_t vi = 0; vi < vars.size(); ++vi) {
    const int v = vars[vi];
    Weight gain = 0, loss = 0;
    for (std::size_t ci : occurrence[vi]) {
      const Clause& c = f.clauses()[ci];
      const bool mine_satisfied = *alpha.value(v) == c.literal_of(v)->positive();
      if (mine_satisfied) {
        if (satisfied_literals[ci] == 1) loss += c.weight;
      } else {
        if (satisfied_literals[ci] == 0) gain += c.weight;
      }
    }
    if (gain >= loss) {
      alpha.set(v, !*alpha.value(v));
      for (std::size_t ci : occurrence[vi]) {
        const bool now = *alpha.value(v) == f.clauses()[ci].literal_of(v)->positive();
        satisfied_literals[ci] += now ? 1 : -1;
      }
    }
  }
}

}  // namespace

CompactSolveResult solve_compact(const Formula& f) {
  WorkingState state(f);
  const std::size_t max_iterations = f.variable_count();
  std::size_t iterations = 0;
  while (!state.empty()) {
    if (++iterations > max_iterations)
      throw std::logic_error("solve_compact: no progress");
    const CaseSelection sel = state.classify();
    switch (sel.tag) {
      case CaseTag::A:
      case CaseTag::B:
        state.apply({{sel.x, true}});
        break;
      case CaseTag::C:
        state.apply({{sel.y, false}});
        state.apply({{sel.x, true}});
        break;
      case CaseTag::D: {
        bool bx = true, by = true, bz = true;
        bool have = false;
        Weight best = 0;
        // Lexicographic over (x,y,z) with true before false; first maximum wins.
        for (int bits = 0; bits < 8; ++bits) {
          const bool vx = !(bits & 4), vy = !(bits & 2), vz = !(bits & 1);
          const Weight w =
              triangle_weight(state, sel.x, sel.y, sel.z, vx, vy, vz);
          if (!have || w > best) {
            have = true;
            best = w;
            bx = vx;
            by = vy;
            bz = vz;
          }
        }
        state.apply({{sel.x, bx}, {sel.y, by}, {sel.z, bz}});
        break;
      }
    }
  }

  CompactSolveResult result;
  result.assignment = reconstruct(f, state.records());
  polish_assignment(f, result.assignment);
  result.achieved = evaluate(f, result.assignment);
  result.bound = Q5::phi().scaled(f.total_weight()) +
                 Q5::gamma().scaled(mpz_class(f.variable_count()));
  if ((Q5(result.achieved) - result.bound).sign() < 0)
    throw std::logic_error("solve_compact: certified bound violated");
  return result;
}

}  // namespace phisat
