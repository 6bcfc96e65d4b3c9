// Command-line front end: DIMACS in, machine-readable s/o/v/k lines out.
// Decision subcommands follow the solver convention of exit code 10 for
// YES and 20 for NO; 0 means completed, 1 means usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "phisat/autarky.hpp"
#include "phisat/compact_solver.hpp"
#include "phisat/compactify.hpp"
#include "phisat/dimacs.hpp"
#include "phisat/formula.hpp"
#include "phisat/generate.hpp"
#include "phisat/kernelize.hpp"
#include "phisat/lower_bound.hpp"
#include "phisat/oracle.hpp"
#include "phisat/q5.hpp"

namespace {

using namespace phisat;

constexpr int kExitOk = 0;
constexpr int kExitYes = 10;
constexpr int kExitNo = 20;
constexpr int kExitError = 1;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParsedDimacs load(const std::string& path) {
  ParsedDimacs parsed = parse_dimacs(slurp(path));
  for (const std::string& w : parsed.warnings)
    std::cout << "c warning: " << w << "\n";
  return parsed;
}

void print_assignment(const Assignment& a) {
  std::cout << "v";
  for (int code : a.to_codes()) std::cout << " " << code;
  std::cout << " 0\n";
}

void write_wcnf(const Formula& f, const std::string& out_path) {
  const std::string text = emit_dimacs(f);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

void print_bound_lines(const Q5& bound) {
  std::cout << "c bound " << bound.rational_part().get_str() << " "
            << bound.surd_part().get_str() << "\n";
  char decimal[64];
  std::snprintf(decimal, sizeof decimal, "%.6f", bound.to_double());
  std::cout << "c bound_decimal " << decimal << "\n";
}

// The pipeline subcommands accept any input; conflicting unit pairs are
// cancelled first and their guaranteed weight folded into the report. A
// variable whose unit pair cancelled exactly may vanish entirely; any value
// works for it, so it is set to true.
struct PipelineRun {
  Weight guaranteed;
  BoundCertificate certificate;
  Assignment assignment;  // total on the original formula
  Weight achieved_total;
  Q5 bound_total;
};

PipelineRun run_pipeline(const Formula& original) {
  PipelineRun run;
  auto [reduced, guaranteed] = ucf_reduce(original);
  run.guaranteed = guaranteed;
  run.certificate = improved_lower_bound(reduced);
  run.assignment = run.certificate.assignment;
  for (int v : original.variables())
    if (!run.assignment.defines(v)) run.assignment.set(v, true);
  run.achieved_total = evaluate(original, run.assignment);
  run.bound_total = run.certificate.bound + Q5(guaranteed);
  return run;
}

int cmd_validate(const std::string& file) {
  const ParsedDimacs parsed = load(file);
  const Formula& f = parsed.formula;
  std::cout << "s OK\n";
  std::cout << "c vars " << f.variable_count() << "\n";
  std::cout << "c clauses " << f.clause_count() << "\n";
  std::cout << "c weight " << f.total_weight().get_str() << "\n";
  std::cout << "c guaranteed " << parsed.report.guaranteed_weight.get_str() << "\n";
  for (const std::string& note : parsed.report.forced_log)
    std::cout << "c note: " << note << "\n";
  std::cout << "c ucf " << (is_ucf(f) ? "true" : "false") << "\n";
  std::cout << "c compact " << (is_compact(f) ? "true" : "false") << "\n";
  std::cout << "c expanding " << (is_expanding(f) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_bound(const std::string& file) {
  const ParsedDimacs parsed = load(file);
  const PipelineRun run = run_pipeline(parsed.formula);
  if (run.guaranteed > 0)
    std::cout << "c guaranteed " << run.guaranteed.get_str() << "\n";
  std::cout << "c w_total " << parsed.formula.total_weight().get_str() << "\n";
  std::cout << "c w_autark " << run.certificate.autark_weight.get_str() << "\n";
  std::cout << "c remainder_vars " << run.certificate.remainder_variables << "\n";
  print_bound_lines(run.bound_total);
  std::cout << "o " << run.achieved_total.get_str() << "\n";
  print_assignment(run.assignment);
  return kExitOk;
}

int cmd_assign(const std::string& file) {
  const ParsedDimacs parsed = load(file);
  const PipelineRun run = run_pipeline(parsed.formula);
  std::cout << "o " << run.achieved_total.get_str() << "\n";
  print_assignment(run.assignment);
  return kExitOk;
}

int cmd_autarky(const std::string& file, const std::string& out_path) {
  const ParsedDimacs parsed = load(file);
  const AutarkyDecomposition d = matching_autarky(parsed.formula);
  std::cout << "c u_size " << d.autark_variables.size() << "\n";
  std::cout << "c w_autark " << d.satisfied_part.total_weight().get_str() << "\n";
  std::cout << "c remainder_vars " << d.remainder.variable_count() << "\n";
  std::cout << "c remainder_weight " << d.remainder.total_weight().get_str() << "\n";
  print_assignment(d.beta);
  write_wcnf(d.remainder, out_path);
  return kExitOk;
}

int cmd_compactify(const std::string& file, const std::string& out_path) {
  const ParsedDimacs parsed = load(file);
  const auto [compact, lift] = compactify(parsed.formula);
  std::cout << "c flipped";
  for (int v : lift.flipped) std::cout << " " << v;
  std::cout << "\n";
  write_wcnf(compact, out_path);
  return kExitOk;
}

int cmd_kernel(const std::string& file, long k, int budget,
               const std::string& out_path, bool phi) {
  const ParsedDimacs parsed = load(file);
  KernelizeOptions options;
  options.oracle_budget = budget;
  const KernelOutcome outcome = phi ? kernelize_phi(parsed.formula, k, options)
                                    : kernelize_half(parsed.formula, k, options);
  std::cout << "c reason " << outcome.reason << "\n";
  switch (outcome.verdict) {
    case KernelOutcome::Verdict::Yes:
      std::cout << "s YES\n";
      return kExitYes;
    case KernelOutcome::Verdict::No:
      std::cout << "s NO\n";
      return kExitNo;
    case KernelOutcome::Verdict::Reduced:
      break;
  }
  std::cout << "c variable_limit " << outcome.variable_limit.get_str() << "\n";
  if (outcome.weight_limit)
    std::cout << "c weight_limit " << outcome.weight_limit->get_str() << "\n";
  std::cout << "s KERNEL\n";
  std::cout << "k " << outcome.k_prime.get_str() << "\n";
  write_wcnf(outcome.kernel, out_path);
  return kExitOk;
}

int cmd_exact(const std::string& file, int budget) {
  const ParsedDimacs parsed = load(file);
  const OracleResult result = max_sat_exact(parsed.formula, budget);
  std::cout << "o " << result.optimum.get_str() << "\n";
  print_assignment(result.witness);
  return kExitOk;
}

int cmd_gen(const GeneratorConfig& config, const std::string& out_path) {
  write_wcnf(generate(config), out_path);
  return kExitOk;
}

Assignment read_assignment_file(const std::string& path) {
  const std::string text = slurp(path);
  Assignment a;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string tok;
    bool first = true;
    while (tokens >> tok) {
      if (tok == "v") {
        first = false;
        continue;
      }
      std::size_t used = 0;
      long code = 0;
      bool numeric = true;
      try {
        code = std::stol(tok, &used);
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric || used != tok.size()) {
        if (first) break;  // status or comment line ("c ...", "o 4", "s YES")
        throw std::runtime_error("assignment file: bad token '" + tok + "'");
      }
      first = false;
      if (code == 0) continue;
      a.set(static_cast<int>(std::labs(code)), code > 0);
    }
  }
  return a;
}

int cmd_verify(const std::string& file, const std::string& assignment_file) {
  const ParsedDimacs parsed = load(file);
  const Assignment a = read_assignment_file(assignment_file);
  std::cout << "o " << evaluate(parsed.formula, a).get_str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MAX-SAT golden-ratio lower bounds and above-guarantee kernels"};
  app.require_subcommand(1);

  std::string file, out_path, assignment_file, family = "general";
  long k = 0;
  int budget = 24;
  GeneratorConfig gen_config;
  unsigned long long seed = 0;
  long max_weight = 1;

  auto* validate = app.add_subcommand("validate", "parse a DIMACS file and report");
  validate->add_option("file", file)->required();

  auto* bound = app.add_subcommand(
      "bound", "certified lower bound with the achieving assignment");
  bound->add_option("file", file)->required();

  auto* assign = app.add_subcommand("assign", "full pipeline assignment");
  assign->add_option("file", file)->required();

  auto* autarky = app.add_subcommand(
      "autarky", "matching autarky: satisfied part, assignment, remainder");
  autarky->add_option("file", file)->required();
  autarky->add_option("-o,--output", out_path, "write the remainder here");

  auto* compact = app.add_subcommand(
      "compactify", "transform an expanding UCF formula into compact shape");
  compact->add_option("file", file)->required();
  compact->add_option("-o,--output", out_path, "write the compact formula here");

  auto* kernel_phi = app.add_subcommand(
      "kernel-phi", "decide sat(F) >= floor(phi w) + k or emit a kernel");
  kernel_phi->add_option("file", file)->required();
  kernel_phi->add_option("-k", k, "parameter")->required();
  kernel_phi->add_option("--budget", budget, "exact-solve budget (variables)");
  kernel_phi->add_option("-o,--output", out_path, "write the kernel here");

  auto* kernel_half = app.add_subcommand(
      "kernel-half", "decide sat(F) >= floor(w/2) + k or emit a kernel");
  kernel_half->add_option("file", file)->required();
  kernel_half->add_option("-k", k, "parameter")->required();
  kernel_half->add_option("--budget", budget, "exact-solve budget (variables)");
  kernel_half->add_option("-o,--output", out_path, "write the kernel here");

  auto* exact = app.add_subcommand("exact", "exact optimum by enumeration");
  exact->add_option("file", file)->required();
  exact->add_option("--budget", budget, "refuse instances above this many variables");

  auto* gen = app.add_subcommand("gen", "generate a seeded instance as WCNF");
  gen->add_option("--family", family,
                  "compact | ucf | general | tight | triangle-batch");
  gen->add_option("--n", gen_config.variable_count, "variable count");
  gen->add_option("--m", gen_config.clause_count, "clause count");
  gen->add_option("--max-weight", max_weight, "clause weights drawn from 1..W");
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("--l", gen_config.pair_count, "pair count for the tight family");
  gen->add_option("-o,--output", out_path, "write the instance here");

  auto* verify = app.add_subcommand("verify", "recompute an assignment's weight");
  verify->add_option("file", file)->required();
  verify->add_option("--assignment", assignment_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (bound->parsed()) return cmd_bound(file);
    if (assign->parsed()) return cmd_assign(file);
    if (autarky->parsed()) return cmd_autarky(file, out_path);
    if (compact->parsed()) return cmd_compactify(file, out_path);
    if (kernel_phi->parsed()) return cmd_kernel(file, k, budget, out_path, true);
    if (kernel_half->parsed()) return cmd_kernel(file, k, budget, out_path, false);
    if (exact->parsed()) return cmd_exact(file, budget);
    if (gen->parsed()) {
      gen_config.seed = seed;
      gen_config.max_weight = max_weight;
      if (family == "compact")
        gen_config.family = Family::Compact;
      else if (family == "ucf")
        gen_config.family = Family::Ucf;
      else if (family == "general")
        gen_config.family = Family::General;
      else if (family == "tight")
        gen_config.family = Family::Tight;
      else if (family == "triangle-batch")
        gen_config.family = Family::TriangleBatch;
      else
        throw std::runtime_error("unknown family '" + family + "'");
      return cmd_gen(gen_config, out_path);
    }
    if (verify->parsed()) return cmd_verify(file, assignment_file);
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
