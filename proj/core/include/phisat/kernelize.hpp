#pragma once

#include <optional>
#include <string>

#include "phisat/formula.hpp"

namespace phisat {

/// Above-guarantee decision problems solved here:
///   kernelize_phi:  is maxsat(F) >= floor(phi * w(F)) + k   (UCF inputs)
///   kernelize_half: is maxsat(F) >= floor(w(F) / 2) + k
/// Either the question is decided outright or an equivalent reduced
/// instance (kernel, k') with certified size bounds is returned.
struct KernelOutcome {
  enum class Verdict { Yes, No, Reduced };

  Verdict verdict;
  Formula kernel;       // meaningful when verdict == Reduced
  mpz_class k_prime;    // transferred parameter; k' <= k always
  std::string reason;   // which rule decided, for diagnostics

  // Certified size bounds the emitted kernel respects.
  mpz_class variable_limit;
  std::optional<mpz_class> weight_limit;

  bool decided() const { return verdict != Verdict::Reduced; }
};

struct KernelizeOptions {
  /// Kernels whose variable count fits this budget are solved exactly
  /// instead of being emitted. Set to -1 to always emit.
  int oracle_budget = 24;
};

/// Golden-ratio guarantee kernelization: autarky-reduce, transfer the
/// parameter, apply the yes-rules, and either solve the small remainder
/// exactly or emit it as a proper kernel with at most
/// floor((7 + 3*sqrt5) * k) variables. Requires a normalized UCF input.
KernelOutcome kernelize_phi(const Formula& f, long k,
                            const KernelizeOptions& options = {});

/// Half-guarantee kernelization: unit-conflict reduction (parameter
/// unchanged), autarky reduction, yes-rules, then exact solving or a proper
/// kernel with at most 4k variables and total weight floor((4 + 2*sqrt5)*k).
KernelOutcome kernelize_half(const Formula& f, long k,
                             const KernelizeOptions& options = {});

}  // namespace phisat
