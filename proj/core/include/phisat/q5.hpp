#pragma once

#include <gmpxx.h>

#include <string>

namespace phisat {

/// Exact arithmetic in the quadratic field Q(sqrt(5)).
///
/// A value is stored as a + b*sqrt(5) with rational a, b. Since sqrt(5) is
/// irrational the representation of a real number is unique, so equality and
/// sign are decidable without any floating point. All comparisons against
/// the golden-ratio constants below must go through sign(); floating point
/// is reserved for diagnostic output.
class Q5 {
 public:
  Q5() : a_(0), b_(0) {}
  Q5(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }
  explicit Q5(const mpq_class& a) : Q5(a, mpq_class(0)) {}
  explicit Q5(const mpz_class& a) : Q5(mpq_class(a), mpq_class(0)) {}
  explicit Q5(long a) : Q5(mpq_class(a), mpq_class(0)) {}

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& surd_part() const { return b_; }

  Q5 operator+(const Q5& o) const { return Q5(a_ + o.a_, b_ + o.b_); }
  Q5 operator-(const Q5& o) const { return Q5(a_ - o.a_, b_ - o.b_); }
  Q5 operator-() const { return Q5(-a_, -b_); }

  // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 5 b1 b2) + (a1 b2 + a2 b1) s
  Q5 operator*(const Q5& o) const {
    return Q5(a_ * o.a_ + 5 * b_ * o.b_, a_ * o.b_ + o.a_ * b_);
  }

  Q5 scaled(const mpq_class& r) const { return Q5(a_ * r, b_ * r); }
  Q5 scaled(const mpz_class& n) const { return Q5(a_ * n, b_ * n); }

  /// Exact sign: -1, 0 or +1. When the two components have opposite signs
  /// the comparison reduces to a^2 versus 5 b^2 over the rationals.
  int sign() const;

  bool operator==(const Q5& o) const { return a_ == o.a_ && b_ == o.b_; }

  bool is_rational() const { return b_ == 0; }

  /// Approximation for diagnostics only; never drives a decision.
  double to_double() const;

  /// Renders "a + b*sqrt5" with exact rational components.
  std::string to_string() const;

  /// phi = (sqrt(5)-1)/2, the positive root of x^2 + x - 1.
  static const Q5& phi();
  /// gamma = (2-3*phi)/2 = (1-phi)^2/2, the per-variable bonus.
  static const Q5& gamma();
  static const Q5& one_minus_phi();

 private:
  mpq_class a_, b_;
};

inline int q5_sign(const Q5& x) { return x.sign(); }

/// Floor of the integer square root, exact for arbitrary precision input.
mpz_class isqrt(const mpz_class& n);

/// floor(phi * w) for w >= 0, computed as floor((isqrt(5 w^2) - w)/2).
mpz_class floor_phi_times(const mpz_class& w);

/// floor((p + q*sqrt(5)) * k) for integers p, q, k >= 0.
mpz_class floor_mul_surd(unsigned long p, unsigned long q, const mpz_class& k);

}  // namespace phisat
