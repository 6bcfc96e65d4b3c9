#include "phisat/formula.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace phisat {

Lit::Lit(int variable, bool positive) : code_(positive ? variable : -variable) {
  if (variable < 1) throw std::invalid_argument("Lit: variable id must be >= 1");
}

Lit Lit::from_code(int code) {
  if (code == 0) throw std::invalid_argument("Lit: code must be nonzero");
  return Lit(code);
}

bool Clause::mentions(int variable) const {
  return literal_of(variable).has_value();
}

std::optional<Lit> Clause::literal_of(int variable) const {
  for (const Lit& l : literals)
    if (l.variable() == variable) return l;
  return std::nullopt;
}

bool clause_key_less(const std::vector<Lit>& a, const std::vector<Lit>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string clause_key_string(const std::vector<Lit>& key) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out << " ";
    out << key[i].code();
  }
  out << ")";
  return out.str();
}

namespace {

void check_canonical(const Clause& c) {
  if (c.literals.empty())
    throw std::invalid_argument("Formula: empty clause");
  if (c.weight < 0)
    throw std::invalid_argument("Formula: negative clause weight");
  for (std::size_t i = 1; i < c.literals.size(); ++i) {
    if (c.literals[i - 1].variable() >= c.literals[i].variable())
      throw std::invalid_argument(
          "Formula: clause literals not sorted by distinct variables");
  }
}

}  // namespace

Formula Formula::from_clauses(std::vector<Clause> clauses) {
  for (const Clause& c : clauses) check_canonical(c);
  std::sort(clauses.begin(), clauses.end(), [](const Clause& a, const Clause& b) {
    return clause_key_less(a.literals, b.literals);
  });
  Formula f;
  for (Clause& c : clauses) {
    if (!f.clauses_.empty() && f.clauses_.back().literals == c.literals)
      f.clauses_.back().weight += c.weight;
    else
      f.clauses_.push_back(std::move(c));
  }
  std::set<int> vars;
  for (const Clause& c : f.clauses_) {
    f.total_weight_ += c.weight;
    for (const Lit& l : c.literals) vars.insert(l.variable());
  }
  f.variables_.assign(vars.begin(), vars.end());
  return f;
}

bool Formula::has_variable(int variable) const {
  return std::binary_search(variables_.begin(), variables_.end(), variable);
}

const Clause* Formula::find(const std::vector<Lit>& key) const {
  auto it = std::lower_bound(
      clauses_.begin(), clauses_.end(), key,
      [](const Clause& c, const std::vector<Lit>& k) {
        return clause_key_less(c.literals, k);
      });
  if (it != clauses_.end() && it->literals == key) return &*it;
  return nullptr;
}

void Assignment::set(int variable, bool value) {
  if (variable < 1)
    throw std::invalid_argument("Assignment: variable id must be >= 1");
  values_[variable] = value;
}

std::optional<bool> Assignment::value(int variable) const {
  auto it = values_.find(variable);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

bool Assignment::is_total_on(const Formula& f) const {
  for (int v : f.variables())
    if (!defines(v)) return false;
  return true;
}

std::vector<int> Assignment::to_codes() const {
  std::vector<int> codes;
  codes.reserve(values_.size());
  for (const auto& [variable, value] : values_)
    codes.push_back(value ? variable : -variable);
  return codes;
}

Assignment Assignment::from_codes(const std::vector<int>& codes) {
  Assignment a;
  for (int code : codes) a.set(std::abs(code), code > 0);
  return a;
}

std::pair<Formula, NormalizationReport> normalize(
    const std::vector<RawClause>& raw_clauses) {
  NormalizationReport report;
  std::vector<Clause> cleaned;
  cleaned.reserve(raw_clauses.size());
  for (const auto& [lits, weight] : raw_clauses) {
    if (lits.empty()) throw std::invalid_argument("normalize: empty clause");
    if (weight < 1)
      throw std::invalid_argument("normalize: clause weight must be >= 1");
    std::vector<Lit> sorted = lits;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Lit> unique;
    bool tautology = false;
    for (const Lit& l : sorted) {
      if (!unique.empty() && unique.back() == l) {
        report.forced_log.push_back("collapsed duplicate literal " +
                                    std::to_string(l.code()) + " in " +
                                    clause_key_string(sorted));
        continue;
      }
      if (!unique.empty() && unique.back().variable() == l.variable()) {
        tautology = true;
        break;
      }
      unique.push_back(l);
    }
    if (tautology) {
      report.guaranteed_weight += weight;
      report.forced_log.push_back("removed tautology " +
                                  clause_key_string(sorted) +
                                  ", guaranteed weight +" + weight.get_str());
      continue;
    }
    cleaned.push_back(Clause{std::move(unique), weight});
  }
  // from_clauses merges identical literal sets by weight summation.
  std::size_t before = cleaned.size();
  Formula f = Formula::from_clauses(std::move(cleaned));
  if (f.clause_count() < before)
    report.forced_log.push_back(
        "merged " + std::to_string(before - f.clause_count()) +
        " duplicate clause(s) by weight summation");
  return {std::move(f), std::move(report)};
}

std::pair<Formula, Weight> ucf_reduce(const Formula& f) {
  // Locate conflicting unit pairs.
  std::map<int, Weight> pos_unit, neg_unit;
  for (const Clause& c : f.clauses()) {
    if (!c.is_unit()) continue;
    const Lit l = c.literals.front();
    (l.positive() ? pos_unit : neg_unit)[l.variable()] = c.weight;
  }
  Weight guaranteed = 0;
  std::map<int, Weight> cancel;
  for (const auto& [v, wp] : pos_unit) {
    auto it = neg_unit.find(v);
    if (it == neg_unit.end()) continue;
    const Weight m = std::min(wp, it->second);
    cancel[v] = m;
    guaranteed += m;
  }
  if (cancel.empty()) return {f, 0};

  std::vector<Clause> kept;
  kept.reserve(f.clause_count());
  for (const Clause& c : f.clauses()) {
    if (c.is_unit()) {
      auto it = cancel.find(c.literals.front().variable());
      if (it != cancel.end()) {
        Weight rest = c.weight - it->second;
        if (rest > 0) kept.push_back(Clause{c.literals, rest});
        continue;
      }
    }
    kept.push_back(c);
  }
  return {Formula::from_clauses(std::move(kept)), guaranteed};
}

Weight evaluate(const Formula& f, const Assignment& assignment) {
  if (!assignment.is_total_on(f))
    throw std::invalid_argument("evaluate: assignment not total on formula");
  Weight sum = 0;
  for (const Clause& c : f.clauses()) {
    for (const Lit& l : c.literals) {
      if (*assignment.value(l.variable()) == l.positive()) {
        sum += c.weight;
        break;
      }
    }
  }
  return sum;
}

namespace {

Formula filter_clauses(const Formula& f, const std::set<int>& vars, bool keep_touching) {
  std::vector<Clause> kept;
  for (const Clause& c : f.clauses()) {
    bool touches = false;
    for (const Lit& l : c.literals)
      if (vars.count(l.variable())) {
        touches = true;
        break;
      }
    if (touches == keep_touching) kept.push_back(c);
  }
  return Formula::from_clauses(std::move(kept));
}

}  // namespace

Formula restrict_to_vars(const Formula& f, const std::set<int>& vars) {
  return filter_clauses(f, vars, true);
}

Formula exclude_vars(const Formula& f, const std::set<int>& vars) {
  return filter_clauses(f, vars, false);
}

bool is_ucf(const Formula& f) {
  std::set<int> pos, neg;
  for (const Clause& c : f.clauses()) {
    if (!c.is_unit()) continue;
    const Lit l = c.literals.front();
    (l.positive() ? pos : neg).insert(l.variable());
  }
  for (int v : pos)
    if (neg.count(v)) return false;
  return true;
}

bool is_compact(const Formula& f) {
  std::set<int> with_pos_unit;
  for (const Clause& c : f.clauses()) {
    if (c.is_unit()) {
      if (!c.literals.front().positive()) return false;
      with_pos_unit.insert(c.literals.front().variable());
      continue;
    }
    if (c.literals.size() != 2) return false;
    for (const Lit& l : c.literals)
      if (l.positive()) return false;
  }
  for (int v : f.variables())
    if (!with_pos_unit.count(v)) return false;
  return true;
}

}  // namespace phisat
