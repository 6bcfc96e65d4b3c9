#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phisat/formula.hpp"

namespace phisat {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedDimacs {
  Formula formula;
  NormalizationReport report;
  std::vector<std::string> warnings;  // count mismatches and similar
};

/// Parses DIMACS CNF ("p cnf n m", all weights 1) or WCNF ("p wcnf n m"
/// with each clause led by a positive integer weight). Clauses are routed
/// through normalize. Weights must be >= 1; a WCNF header may declare a
/// top weight but clauses carrying it are rejected (no hard-clause
/// semantics). Structural problems raise ParseError with a line number;
/// declared-count mismatches only warn.
ParsedDimacs parse_dimacs(std::string_view text);

/// Canonical WCNF emission: clauses sorted by literal-set key, literals
/// sorted within each clause. parse(emit(f)) reproduces f exactly and
/// emit is a fixed point over parse.
std::string emit_dimacs(const Formula& f);

}  // namespace phisat
