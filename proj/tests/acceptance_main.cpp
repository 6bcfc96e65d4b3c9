// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. An optional first argument names the CLI binary so the text
// protocol can be spot-checked alongside the library results.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "phisat/autarky.hpp"
#include "phisat/compact_solver.hpp"
#include "phisat/compactify.hpp"
#include "phisat/dimacs.hpp"
#include "phisat/kernelize.hpp"
#include "phisat/lower_bound.hpp"
#include "phisat/oracle.hpp"

using namespace phisat;
using namespace phisat::testing;

namespace {

std::string g_tool;  // optional CLI path

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& message) {
    if (!condition && pass) {
      pass = false;
      detail << message;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::optional<std::string> run_tool(const std::string& args) {
  if (g_tool.empty()) return std::nullopt;
  const std::string command = g_tool + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  pclose(pipe);
  return output;
}

Formula tight(int l) { return random_family(Family::Tight, 0, 0, 1, 0, l); }

// ---------------------------------------------------------------------------

Outcome criterion_tight_family(double& elapsed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int l = 1; l <= 50; ++l) {
    const Formula f = tight(l);
    const BoundCertificate cert = improved_lower_bound(f);
    out.require(cert.bound.surd_part() == 0,
                "surd component nonzero at l=" + std::to_string(l));
    out.require(cert.bound == Q5(mpz_class(2 * l)),
                "bound not exactly 2l at l=" + std::to_string(l));
    out.require(cert.achieved == 2 * l,
                "achieved weight not 2l at l=" + std::to_string(l));
    if (l <= 10)
      out.require(max_sat_exact(f).optimum == 2 * l,
                  "oracle optimum not 2l at l=" + std::to_string(l));
  }
  elapsed = seconds_since(start);
  out.require(elapsed < 1.0, "exceeded the 1 s budget");

  if (!g_tool.empty()) {
    std::remove("acceptance_tight.wcnf");
    for (int l : {1, 5, 50}) {
      const std::string path = "acceptance_tight.wcnf";
      run_tool("gen --family tight --l " + std::to_string(l) + " -o " + path);
      const auto text = run_tool("bound " + path);
      out.require(text.has_value(), "bound subcommand failed");
      if (text) {
        const std::string bound_line =
            "c bound " + std::to_string(2 * l) + " 0\n";
        const std::string o_line = "o " + std::to_string(2 * l) + "\n";
        out.require(text->find(bound_line) != std::string::npos,
                    "CLI bound line mismatch at l=" + std::to_string(l));
        out.require(text->find(o_line) != std::string::npos,
                    "CLI o line mismatch at l=" + std::to_string(l));
      }
    }
    std::remove("acceptance_tight.wcnf");
  }
  return out;
}

Outcome criterion_compact_certificates(double& elapsed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const Formula f = random_compact(n, seed % 11, 5, seed);
    const CompactSolveResult r = solve_compact(f);
    out.require((Q5(r.achieved) - r.bound).sign() >= 0,
                "bound violated on compact seed " + std::to_string(seed));
    out.require(r.achieved <= max_sat_exact(f).optimum,
                "achieved exceeds optimum on compact seed " + std::to_string(seed));
  }
  std::uint64_t seed_stream = 50000;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_expanding_ucf(4 + i % 9, 10 + i % 7, 3, seed_stream);
    const auto [compact, lift] = compactify(f);
    const CompactSolveResult r = solve_compact(compact);
    const Assignment lifted = lift_assignment(lift, r.assignment);
    const Weight achieved = evaluate(f, lifted);
    const Q5 bound = Q5::phi().scaled(f.total_weight()) +
                     Q5::gamma().scaled(mpz_class(f.variable_count()));
    out.require((Q5(achieved) - bound).sign() >= 0,
                "bound violated on expanding UCF instance " + std::to_string(i));
    out.require(achieved <= max_sat_exact(f).optimum,
                "achieved exceeds optimum on expanding UCF instance " +
                    std::to_string(i));
  }
  elapsed = seconds_since(start);
  out.require(elapsed < 60.0, "exceeded the 60 s budget");
  return out;
}

Outcome criterion_combined_bound(double& elapsed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const Formula f = random_family(Family::Ucf, n, 3 + seed % 12, 3, seed);
    const BoundCertificate cert = improved_lower_bound(f);
    const Weight optimum = max_sat_exact(f).optimum;
    out.require((Q5(optimum) - cert.bound).sign() >= 0,
                "optimum below certified bound at seed " + std::to_string(seed));
    out.require(cert.achieved <= optimum,
                "achieved above optimum at seed " + std::to_string(seed));
  }
  elapsed = seconds_since(start);
  out.require(elapsed < 60.0, "exceeded the 60 s budget");
  return out;
}

struct EmittedKernel {
  bool phi;
  long k;
  KernelOutcome outcome;
};

std::vector<EmittedKernel> g_kernels;

bool phi_question(const Formula& f, const mpz_class& k) {
  return max_sat_exact(f).optimum >= floor_phi_times(f.total_weight()) + k;
}

bool half_question(const Formula& f, const mpz_class& k) {
  mpz_class half;
  mpz_fdiv_q_ui(half.get_mpz_t(), f.total_weight().get_mpz_t(), 2);
  return max_sat_exact(f).optimum >= half + k;
}

bool resolve(const KernelOutcome& outcome, bool phi) {
  if (outcome.verdict == KernelOutcome::Verdict::Yes) return true;
  if (outcome.verdict == KernelOutcome::Verdict::No) return false;
  return phi ? phi_question(outcome.kernel, outcome.k_prime)
             : half_question(outcome.kernel, outcome.k_prime);
}

Outcome criterion_kernel_soundness(double& elapsed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  g_kernels.clear();
  KernelizeOptions forced;
  forced.oracle_budget = -1;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 6 + static_cast<int>(seed % 9);
    const int m = 5 + static_cast<int>(seed % 9);
    const long w = 1 + static_cast<long>(seed % 3);
    const Formula ucf = random_family(Family::Ucf, n, m, w, seed);
    const Formula general = random_family(Family::General, n, m, w, seed + 7777);
    out.require(ucf.total_weight() <= 40 && general.total_weight() <= 40,
                "instance weight above 40");
    for (long k = 0; k <= 4; ++k) {
      const bool phi_truth = phi_question(ucf, k);
      const bool half_truth = half_question(general, k);
      const KernelOutcome phi_direct = kernelize_phi(ucf, k);
      out.require(phi_direct.decided(),
                  "default budget left a phi kernel undecided");
      out.require(resolve(phi_direct, true) == phi_truth,
                  "phi kernelizer disagrees with the oracle at seed " +
                      std::to_string(seed) + " k=" + std::to_string(k));
      const KernelOutcome half_direct = kernelize_half(general, k);
      out.require(resolve(half_direct, false) == half_truth,
                  "half kernelizer disagrees with the oracle at seed " +
                      std::to_string(seed) + " k=" + std::to_string(k));
      const KernelOutcome phi_forced = kernelize_phi(ucf, k, forced);
      out.require(resolve(phi_forced, true) == phi_truth,
                  "forced phi kernel resolves differently at seed " +
                      std::to_string(seed) + " k=" + std::to_string(k));
      if (phi_forced.verdict == KernelOutcome::Verdict::Reduced)
        g_kernels.push_back({true, k, phi_forced});
      const KernelOutcome half_forced = kernelize_half(general, k, forced);
      out.require(resolve(half_forced, false) == half_truth,
                  "forced half kernel resolves differently at seed " +
                      std::to_string(seed) + " k=" + std::to_string(k));
      if (half_forced.verdict == KernelOutcome::Verdict::Reduced)
        g_kernels.push_back({false, k, half_forced});
    }
  }
  elapsed = seconds_since(start);
  out.require(elapsed < 120.0, "exceeded the 120 s budget");
  out.detail << "emitted kernels: " << g_kernels.size();
  return out;
}

Outcome criterion_kernel_sizes(double&) {
  Outcome out;
  out.require(!g_kernels.empty(), "no kernels were emitted to check");
  for (const EmittedKernel& e : g_kernels) {
    const mpz_class k(e.k);
    const mpz_class vars(e.outcome.kernel.variable_count());
    out.require(e.outcome.k_prime <= k, "k' exceeds k");
    if (e.phi) {
      const mpz_class limit = 7 * k + isqrt(45 * k * k);
      out.require(limit == floor_mul_surd(7, 3, k), "phi limit formulas differ");
      out.require(vars <= limit, "phi kernel exceeds its variable bound");
    } else {
      out.require(vars <= 4 * k, "half kernel exceeds 4k variables");
      const mpz_class limit = 4 * k + isqrt(20 * k * k);
      out.require(limit == floor_mul_surd(4, 2, k), "half limit formulas differ");
      out.require(e.outcome.kernel.total_weight() <= limit,
                  "half kernel exceeds its weight bound");
    }
  }
  out.detail << "checked " << g_kernels.size() << " kernels";
  return out;
}

Outcome criterion_decomposition(double& elapsed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const Formula f = random_family(Family::General, n, 2 + seed % 12, 3, seed);
    const AutarkyDecomposition d = matching_autarky(f);
    out.require(max_sat_exact(f).optimum ==
                    d.satisfied_part.total_weight() +
                        max_sat_exact(d.remainder).optimum,
                "optimum split broken at seed " + std::to_string(seed));
    out.require(strictly_expanding_by_enumeration(d.remainder),
                "remainder not strictly expanding at seed " + std::to_string(seed));
  }
  elapsed = seconds_since(start);
  return out;
}

Outcome criterion_hall_equivalence(double& elapsed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();

  // Fixed pool over four variables: every unit and every 2-clause, weights
  // alternating 1 and 2; all formulas drawn as subsets of up to five.
  std::vector<Clause> pool;
  for (int v = 1; v <= 4; ++v) {
    pool.push_back(Clause{{Lit(v, true)}, 0});
    pool.push_back(Clause{{Lit(v, false)}, 0});
  }
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      pool.push_back(Clause{{Lit(a, true), Lit(b, true)}, 0});
      pool.push_back(Clause{{Lit(a, true), Lit(b, false)}, 0});
      pool.push_back(Clause{{Lit(a, false), Lit(b, true)}, 0});
      pool.push_back(Clause{{Lit(a, false), Lit(b, false)}, 0});
    }
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i].weight = 1 + i % 2;

  long checked = 0;
  std::vector<int> chosen;
  auto check_subset = [&]() {
    std::vector<Clause> clauses;
    for (int idx : chosen) clauses.push_back(pool[idx]);
    const Formula f = Formula::from_clauses(std::move(clauses));
    ++checked;
    if (is_expanding(f) != expanding_by_enumeration(f)) {
      out.require(false, "disagreement on fixed-pool subset #" +
                             std::to_string(checked));
    }
  };
  auto recurse = [&](auto&& self, int next, int remaining) -> void {
    if (!out.pass) return;
    if (!chosen.empty()) check_subset();
    if (remaining == 0 || next >= static_cast<int>(pool.size())) return;
    for (int i = next; i < static_cast<int>(pool.size()); ++i) {
      chosen.push_back(i);
      self(self, i + 1, remaining - 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 5);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Formula f = random_family(Family::General, 1 + seed % 10,
                                    2 + seed % 10, 3, seed + 31);
    out.require(is_expanding(f) == expanding_by_enumeration(f),
                "disagreement on random instance seed " + std::to_string(seed));
  }
  elapsed = seconds_since(start);
  out.detail << checked << " pool subsets + 200 random";
  return out;
}

Outcome criterion_accounting(double& elapsed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const Formula f = random_compact(n, seed % 9, 3, seed);
    const auto& vars = f.variables();
    const int x = vars[seed % vars.size()];
    const Q5 base = excess_over_phi(f);
    const SimplifyResult t = simplify_assign(f, Assignment::from_codes({x}));
    out.require((base - excess_over_phi(t.formula) -
                 Q5::one_minus_phi() * epsilon(f, x))
                        .sign() >= 0,
                "true-elimination inequality failed at seed " +
                    std::to_string(seed));
    const SimplifyResult ff = simplify_assign(f, Assignment::from_codes({-x}));
    out.require((base - excess_over_phi(ff.formula) +
                 Q5::phi() * epsilon(f, x))
                        .sign() >= 0,
                "false-elimination inequality failed at seed " +
                    std::to_string(seed));
    out.require(ff.formula.variable_count() == f.variable_count() - 1,
                "false elimination removed more than one variable");
  }
  elapsed = seconds_since(start);
  return out;
}

Outcome criterion_performance(double& elapsed) {
  Outcome out;
  const Formula f = random_family(Family::Ucf, 2000, 10000, 10, 20240842);
  const auto start = std::chrono::steady_clock::now();
  const BoundCertificate cert = improved_lower_bound(f);
  elapsed = seconds_since(start);
  out.require((Q5(cert.achieved) - cert.bound).sign() >= 0,
              "certificate violated on the large instance");
  out.require(elapsed < 10.0, "exceeded the 10 s budget");
  out.detail << "n=2000 m=10000 in " << elapsed << " s";
  return out;
}

Outcome criterion_io(double& elapsed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Formula> corpus = {
      tight(1), tight(3), tight(50),
      random_family(Family::TriangleBatch, 9, 0, 2, 0),
      random_family(Family::Compact, 6, 12, 3, 5),
      random_family(Family::Ucf, 8, 12, 2, 9),
      random_family(Family::General, 8, 12, 3, 13),
      make({{{1}, 1}, {{-1, -2}, 1}}),
      make({{{1}, 5}}),
      Formula(),
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string text = emit_dimacs(corpus[i]);
    const ParsedDimacs back = parse_dimacs(text);
    out.require(back.formula == corpus[i],
                "round trip changed formula #" + std::to_string(i));
    out.require(emit_dimacs(back.formula) == text,
                "emission not a fixed point on #" + std::to_string(i));
  }

  std::mt19937_64 rng(20240843);
  const char alphabet[] = "pc wnf0123456789- \n\t~%x+e.";
  long parsed_ok = 0;
  for (int i = 0; i < 100000; ++i) {
    std::string s;
    const int len = static_cast<int>(rng() % 64);
    for (int j = 0; j < len; ++j)
      s.push_back(alphabet[rng() % (sizeof alphabet - 1)]);
    try {
      (void)parse_dimacs(s);
      ++parsed_ok;
    } catch (const ParseError&) {
    }
  }
  elapsed = seconds_since(start);
  out.detail << "fuzz inputs parsed cleanly: " << parsed_ok << "/100000";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_tool = argv[1];

  struct Entry {
    int number;
    const char* name;
    Outcome (*fn)(double&);
  };
  const Entry entries[] = {
      {1, "tight family exactness", criterion_tight_family},
      {2, "compact and expanding UCF certificates", criterion_compact_certificates},
      {3, "combined bound below the optimum", criterion_combined_bound},
      {4, "kernel soundness", criterion_kernel_soundness},
      {5, "kernel size certificates", criterion_kernel_sizes},
      {6, "autarky decomposition and strict expansion", criterion_decomposition},
      {7, "expansion Hall equivalence", criterion_hall_equivalence},
      {8, "elimination accounting inequalities", criterion_accounting},
      {9, "pipeline performance", criterion_performance},
      {10, "round trips and parser fuzzing", criterion_io},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    double elapsed = 0.0;
    Outcome outcome;
    try {
      outcome = entry.fn(elapsed);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << "exception: " << e.what();
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n",
                outcome.pass ? "PASS" : "FAIL", entry.number, entry.name,
                elapsed, outcome.detail.str().empty() ? "" : " - ",
                outcome.detail.str().c_str());
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", std::size(entries));
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
