#include "phisat/lower_bound.hpp"

#include <stdexcept>

#include "phisat/compact_solver.hpp"
#include "phisat/compactify.hpp"

namespace phisat {

BoundCertificate improved_lower_bound(const Formula& f) {
  if (!is_ucf(f))
    throw std::invalid_argument(
        "improved_lower_bound: formula has conflicting unit clauses; apply "
        "ucf_reduce first");

  const AutarkyDecomposition d = matching_autarky(f);

  BoundCertificate cert;
  cert.total_weight = f.total_weight();
  cert.autark_weight = d.satisfied_part.total_weight();
  cert.remainder_variables = d.remainder.variable_count();
  cert.assignment = d.beta;

  if (!d.remainder.empty()) {
    auto [compact, lift] = compactify(d.remainder);
    const CompactSolveResult run = solve_compact(compact);
    const Assignment lifted = lift_assignment(lift, run.assignment);
    for (const auto& [v, value] : lifted.values()) cert.assignment.set(v, value);
  }

  cert.bound = Q5::phi().scaled(cert.total_weight) +
               Q5::one_minus_phi().scaled(cert.autark_weight) +
               Q5::gamma().scaled(mpz_class(cert.remainder_variables));
  cert.achieved = evaluate(f, cert.assignment);
  if ((Q5(cert.achieved) - cert.bound).sign() < 0)
    throw std::logic_error("improved_lower_bound: certificate violated");
  return cert;
}

}  // namespace phisat
