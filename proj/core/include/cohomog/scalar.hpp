#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cohomog/rational.hpp"

namespace cohomog {

struct FieldMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int euler_totient(int k);

// Coefficients of the k-th cyclotomic polynomial Phi_k, constant term
// first, degree phi(k). All coefficients are integers.
std::vector<Rational> cyclotomic_polynomial(int k);

// Element of Q (k == 1) or of the cyclotomic field Q(zeta_k), stored in
// the power basis 1, zeta, ..., zeta^(phi(k)-1) reduced mod Phi_k.
class Scalar {
 public:
  Scalar() : k_(1), coeffs_{Rational(0)} {}
  explicit Scalar(const Rational& r) : k_(1), coeffs_{r} {}
  explicit Scalar(long n) : k_(1), coeffs_{Rational(n)} {}

  // Embeds a rational into Q(zeta_k).
  static Scalar rational_in(int k, const Rational& r);
  // zeta_k^power.
  static Scalar zeta(int k, long power = 1);

  int field() const { return k_; }
  bool is_rational_field() const { return k_ == 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // Only valid when the value happens to lie in Q.
  bool is_rational_value() const;
  Rational rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Lifts into Q(zeta_k); only rationals may be promoted.
  Scalar promoted_to(int k) const;

  std::string str() const;

 private:
  Scalar(int k, std::vector<Rational> coeffs)
      : k_(k), coeffs_(std::move(coeffs)) {}
  static void check_same_field(const Scalar& a, const Scalar& b);

  int k_;
  std::vector<Rational> coeffs_;  // length phi(k), k_ == 1 means length 1
};

}  // namespace cohomog
