#pragma once

#include "phisat/autarky.hpp"
#include "phisat/formula.hpp"
#include "phisat/q5.hpp"

namespace phisat {

/// A certified lower bound on the optimum of a unit-conflict-free formula:
///   bound = phi*w(C) + (1-phi)*w(F_U) + gamma*|vars(remainder)|
/// together with a concrete total assignment achieving at least that much.
struct BoundCertificate {
  Q5 bound;
  Assignment assignment;
  Weight achieved = 0;
  Weight total_weight = 0;
  Weight autark_weight = 0;            // w(F_U)
  std::size_t remainder_variables = 0; // variables the autarky left behind
};

/// Runs the full pipeline: matching autarky, compact transformation of the
/// expanding remainder, the case-analysis solver, and the lift back. Input
/// must be normalized and unit-conflict free (run ucf_reduce first
/// otherwise). The certificate inequality achieved >= bound is re-checked
/// exactly before returning.
BoundCertificate improved_lower_bound(const Formula& f);

}  // namespace phisat
