#include "phisat/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>

namespace phisat {

namespace {

struct Token {
  std::string_view text;
  int line;
};

// Comment lines (first non-blank character 'c') vanish entirely; everything
// else is split on whitespace. Clauses may span lines.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view row = text.substr(pos, eol - pos);
    pos = eol + 1;
    const auto first = row.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || row[first] == 'c') continue;
    std::size_t i = first;
    while (i < row.size()) {
      while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
      if (i >= row.size()) break;
      std::size_t j = i;
      while (j < row.size() && !std::isspace(static_cast<unsigned char>(row[j]))) ++j;
      tokens.push_back(Token{row.substr(i, j - i), line});
      i = j;
    }
  }
  return tokens;
}

bool looks_like_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

long long parse_int(const Token& t, const char* what) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
    throw ParseError(t.line, std::string("invalid ") + what + " '" +
                                 std::string(t.text) + "'");
  return value;
}

Weight parse_weight(const Token& t) {
  if (!looks_like_integer(t.text))
    throw ParseError(t.line,
                     "invalid weight '" + std::string(t.text) + "'");
  return Weight(std::string(t.text));
}

}  // namespace

ParsedDimacs parse_dimacs(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  std::size_t i = 0;
  if (tokens.empty()) throw ParseError(1, "missing 'p cnf'/'p wcnf' header");
  if (tokens[i].text != "p")
    throw ParseError(tokens[i].line, "expected header before clauses");
  if (i + 3 > tokens.size())
    throw ParseError(tokens[i].line, "truncated header");
  const Token format = tokens[i + 1];
  const bool weighted = format.text == "wcnf";
  if (!weighted && format.text != "cnf")
    throw ParseError(format.line,
                     "unknown format '" + std::string(format.text) + "'");
  if (i + 4 > tokens.size())
    throw ParseError(format.line, "truncated header");
  const long long declared_vars = parse_int(tokens[i + 2], "variable count");
  const long long declared_clauses = parse_int(tokens[i + 3], "clause count");
  if (declared_vars < 0 || declared_clauses < 0)
    throw ParseError(format.line, "negative counts in header");
  i += 4;
  std::optional<Weight> top;
  if (weighted && i < tokens.size() && tokens[i].line == format.line) {
    top = parse_weight(tokens[i]);
    ++i;
  }

  std::vector<RawClause> raw;
  while (i < tokens.size()) {
    const int clause_line = tokens[i].line;
    Weight weight = 1;
    if (weighted) {
      weight = parse_weight(tokens[i]);
      if (weight < 1)
        throw ParseError(tokens[i].line, "clause weight must be >= 1");
      if (top && weight == *top)
        throw ParseError(tokens[i].line,
                         "clause weight equals the declared top; hard clauses "
                         "are not supported");
      ++i;
    }
    std::vector<Lit> literals;
    bool terminated = false;
    while (i < tokens.size()) {
      const long long code = parse_int(tokens[i], "literal");
      const int line = tokens[i].line;
      ++i;
      if (code == 0) {
        terminated = true;
        break;
      }
      const long long magnitude = code < 0 ? -code : code;
      if (magnitude > declared_vars)
        throw ParseError(line, "literal " + std::to_string(code) +
                                   " outside the declared variable range");
      if (magnitude > std::numeric_limits<int>::max())
        throw ParseError(line, "variable id too large");
      literals.push_back(Lit::from_code(static_cast<int>(code)));
    }
    if (!terminated)
      throw ParseError(clause_line, "clause not terminated by 0");
    if (literals.empty())
      throw ParseError(clause_line, "empty clause");
    raw.emplace_back(std::move(literals), std::move(weight));
  }

  ParsedDimacs result;
  auto [formula, report] = normalize(raw);
  result.formula = std::move(formula);
  result.report = std::move(report);
  if (static_cast<long long>(raw.size()) != declared_clauses)
    result.warnings.push_back("header declares " +
                              std::to_string(declared_clauses) +
                              " clauses, found " + std::to_string(raw.size()));
  const long long max_var = result.formula.variables().empty()
                                ? 0
                                : result.formula.variables().back();
  if (max_var != declared_vars)
    result.warnings.push_back(
        "header declares " + std::to_string(declared_vars) +
        " variables, highest occurring is " + std::to_string(max_var));
  return result;
}

std::string emit_dimacs(const Formula& f) {
  std::ostringstream out;
  const long long max_var = f.variables().empty() ? 0 : f.variables().back();
  out << "p wcnf " << max_var << " " << f.clause_count() << "\n";
  for (const Clause& c : f.clauses()) {
    if (c.weight < 1)
      throw std::invalid_argument("emit_dimacs: weight-0 clause is not representable");
    out << c.weight.get_str();
    for (const Lit& l : c.literals) out << " " << l.code();
    out << " 0\n";
  }
  return out.str();
}

}  // namespace phisat
