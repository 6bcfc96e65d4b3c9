#include "phisat/q5.hpp"

#include <cmath>
#include <stdexcept>

namespace phisat {

int Q5::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| versus |b|*sqrt(5) decides, i.e. a^2 versus 5 b^2.
  // Equality cannot occur for nonzero rationals since sqrt(5) is irrational.
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = 5 * b_ * b_;
  const int c = cmp(lhs, rhs);
  if (c == 0) throw std::logic_error("Q5::sign: a^2 == 5 b^2 with a,b != 0");
  return c > 0 ? sa : sb;
}

double Q5::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(5.0);
}

std::string Q5::to_string() const {
  return a_.get_str() + " + " + b_.get_str() + "*sqrt5";
}

const Q5& Q5::phi() {
  static const Q5 value(mpq_class(-1, 2), mpq_class(1, 2));
  return value;
}

const Q5& Q5::gamma() {
  static const Q5 value(mpq_class(7, 4), mpq_class(-3, 4));
  return value;
}

const Q5& Q5::one_minus_phi() {
  static const Q5 value(mpq_class(3, 2), mpq_class(-1, 2));
  return value;
}

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class floor_phi_times(const mpz_class& w) {
  if (w < 0) throw std::invalid_argument("floor_phi_times: negative weight");
  // floor(w*sqrt(5)) = isqrt(5 w^2); 5 w^2 is never a perfect square for
  // w > 0, so the floor survives the subtraction and halving below.
  const mpz_class s = isqrt(5 * w * w);
  mpz_class q;
  mpz_class num = s - w;
  mpz_fdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), 2);
  return q;
}

mpz_class floor_mul_surd(unsigned long p, unsigned long q, const mpz_class& k) {
  if (k < 0) throw std::invalid_argument("floor_mul_surd: negative k");
  return p * k + isqrt(mpz_class(q) * q * 5 * k * k);
}

}  // namespace phisat
