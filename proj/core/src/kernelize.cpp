#include "phisat/kernelize.hpp"

#include <stdexcept>

#include "phisat/autarky.hpp"
#include "phisat/oracle.hpp"
#include "phisat/q5.hpp"

namespace phisat {

namespace {

mpz_class floor_half(const Weight& w) {
  mpz_class q;
  mpz_fdiv_q_ui(q.get_mpz_t(), w.get_mpz_t(), 2);
  return q;
}

mpz_class ceil_half(const Weight& w) {
  mpz_class q;
  mpz_cdiv_q_ui(q.get_mpz_t(), w.get_mpz_t(), 2);
  return q;
}

Formula renormalized(const Formula& f) {
  std::vector<RawClause> raw;
  raw.reserve(f.clause_count());
  for (const Clause& c : f.clauses()) raw.emplace_back(c.literals, c.weight);
  return normalize(raw).first;
}

bool oracle_escape(std::size_t vars, const Weight& weight, int budget) {
  if (vars > 30) return false;  // enumeration is off the table regardless
  if (budget >= 0 && vars <= static_cast<std::size_t>(budget)) return true;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(vars));
  // Once 2^|V'| <= w(F'), brute force is polynomial in the instance size.
  return power <= weight;
}

KernelOutcome decided(KernelOutcome::Verdict v, mpz_class k_prime,
                      std::string reason) {
  KernelOutcome out;
  out.verdict = v;
  out.k_prime = std::move(k_prime);
  out.reason = std::move(reason);
  return out;
}

}  // namespace

KernelOutcome kernelize_phi(const Formula& f, long k,
                            const KernelizeOptions& options) {
  if (k < 0) throw std::invalid_argument("kernelize_phi: k must be >= 0");
  if (!is_ucf(f))
    throw std::invalid_argument(
        "kernelize_phi: formula has conflicting unit clauses; apply "
        "ucf_reduce first");

  const AutarkyDecomposition d = matching_autarky(f);
  const Formula& reduced = d.remainder;

  if (reduced.empty()) {
    // Everything is autark: maxsat(F) = w(F).
    const bool yes = f.total_weight() >= floor_phi_times(f.total_weight()) + k;
    return decided(yes ? KernelOutcome::Verdict::Yes : KernelOutcome::Verdict::No,
                   k, "autark-trivial");
  }

  mpz_class k_prime = k - f.total_weight() + reduced.total_weight() +
                      floor_phi_times(f.total_weight()) -
                      floor_phi_times(reduced.total_weight());
  if (k_prime > k)
    throw std::logic_error("kernelize_phi: parameter transfer increased k");
  if (k_prime <= 0)
    return decided(KernelOutcome::Verdict::Yes, k_prime, "golden-ratio-guarantee");

  const auto remainder_vars = mpz_class(reduced.variable_count());
  if ((Q5::gamma().scaled(remainder_vars) - Q5(k_prime)).sign() >= 0)
    return decided(KernelOutcome::Verdict::Yes, k_prime, "variable-bonus");

  const mpz_class variable_limit = floor_mul_surd(7, 3, mpz_class(k));
  if (remainder_vars > variable_limit)
    throw std::logic_error("kernelize_phi: kernel variable bound violated");

  if (oracle_escape(reduced.variable_count(), reduced.total_weight(),
                    options.oracle_budget)) {
    const OracleResult exact = max_sat_exact(reduced, 30);
    const bool yes =
        exact.optimum >= floor_phi_times(reduced.total_weight()) + k_prime;
    KernelOutcome out =
        decided(yes ? KernelOutcome::Verdict::Yes : KernelOutcome::Verdict::No,
                k_prime, "oracle");
    out.variable_limit = variable_limit;
    return out;
  }

  KernelOutcome out;
  out.verdict = KernelOutcome::Verdict::Reduced;
  out.kernel = renormalized(reduced);
  out.k_prime = k_prime;
  out.reason = "kernel";
  out.variable_limit = variable_limit;
  return out;
}

KernelOutcome kernelize_half(const Formula& f, long k,
                             const KernelizeOptions& options) {
  if (k < 0) throw std::invalid_argument("kernelize_half: k must be >= 0");

  // Cancelling a conflicting unit pair lowers maxsat and floor(w/2) by the
  // same amount, so the parameter carries over unchanged.
  const auto [ucf, guaranteed] = ucf_reduce(f);
  (void)guaranteed;

  const AutarkyDecomposition d = matching_autarky(ucf);
  const Formula& reduced = d.remainder;

  if (reduced.empty()) {
    const bool yes = ucf.total_weight() >= floor_half(ucf.total_weight()) + k;
    return decided(yes ? KernelOutcome::Verdict::Yes : KernelOutcome::Verdict::No,
                   k, "autark-trivial");
  }

  mpz_class k_prime =
      k - ceil_half(ucf.total_weight()) + ceil_half(reduced.total_weight());
  if (k_prime > k)
    throw std::logic_error("kernelize_half: parameter transfer increased k");

  const auto remainder_vars = mpz_class(reduced.variable_count());
  const Q5 margin = Q5(mpq_class(reduced.total_weight())) *
                        (Q5::phi() - Q5(mpq_class(1, 2))) +
                    Q5::gamma().scaled(remainder_vars) - Q5(k_prime);
  if (margin.sign() >= 0)
    return decided(KernelOutcome::Verdict::Yes, k_prime, "weight-margin");

  // Expanding remainder: at least |V'| weight is always satisfiable.
  const Q5 count_margin = Q5(mpz_class(remainder_vars - k_prime)) -
                          Q5(mpq_class(reduced.total_weight(), 2));
  if (count_margin.sign() >= 0)
    return decided(KernelOutcome::Verdict::Yes, k_prime, "expansion-count");

  const mpz_class variable_limit = 4 * mpz_class(k);
  const mpz_class weight_limit = floor_mul_surd(4, 2, mpz_class(k));
  if (remainder_vars > variable_limit)
    throw std::logic_error("kernelize_half: kernel variable bound violated");
  if (reduced.total_weight() > weight_limit)
    throw std::logic_error("kernelize_half: kernel weight bound violated");

  if (options.oracle_budget >= 0 &&
      reduced.variable_count() <= static_cast<std::size_t>(options.oracle_budget) &&
      reduced.variable_count() <= 30) {
    const OracleResult exact = max_sat_exact(reduced, 30);
    const bool yes = exact.optimum >= floor_half(reduced.total_weight()) + k_prime;
    KernelOutcome out =
        decided(yes ? KernelOutcome::Verdict::Yes : KernelOutcome::Verdict::No,
                k_prime, "oracle");
    out.variable_limit = variable_limit;
    out.weight_limit = weight_limit;
    return out;
  }

  KernelOutcome out;
  out.verdict = KernelOutcome::Verdict::Reduced;
  out.kernel = renormalized(reduced);
  out.k_prime = k_prime;
  out.reason = "kernel";
  out.variable_limit = variable_limit;
  out.weight_limit = weight_limit;
  return out;
}

}  // namespace phisat
