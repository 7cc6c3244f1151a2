#include "cohomog/scalar.hpp"

#include <numeric>
#include <sstream>

namespace cohomog {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int euler_totient(int k) {
  int result = k;
  int n = k;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Rational>;  // univariate, constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by b (b monic-leading nonzero); remainder discarded by
// callers that know the division is exact.
Poly poly_divmod(Poly a, const Poly& b, Poly* remainder) {
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (a.empty()) break;
  }
  if (remainder) *remainder = a;
  return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_polynomial: k < 1");
  // x^k - 1 divided by the product of Phi_d over proper divisors d of k.
  Poly num(k + 1, Rational(0));
  num[0] = -1;
  num[k] = 1;
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    Poly phi_d = cyclotomic_polynomial(d);
    Poly rem;
    num = poly_divmod(num, phi_d, &rem);
  }
  return num;
}

Scalar Scalar::rational_in(int k, const Rational& r) {
  if (k == 1) return Scalar(r);
  std::vector<Rational> c(euler_totient(k), Rational(0));
  c[0] = r;
  return Scalar(k, std::move(c));
}

Scalar Scalar::zeta(int k, long power) {
  if (k == 1) return Scalar(Rational(1));
  long p = ((power % k) + k) % k;
  // Reduce x^p mod Phi_k.
  Poly x(p + 1, Rational(0));
  x[p] = 1;
  Poly phi = cyclotomic_polynomial(k);
  Poly rem;
  poly_divmod(x, phi, &rem);
  rem.resize(euler_totient(k), Rational(0));
  return Scalar(k, std::move(rem));
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational_value() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Scalar::rational_value() const {
  if (!is_rational_value())
    throw std::logic_error("Scalar: not a rational value");
  return coeffs_[0];
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
  if (a.k_ != b.k_)
    throw FieldMismatchError("scalar field mismatch: Q(zeta_" +
                             std::to_string(a.k_) + ") vs Q(zeta_" +
                             std::to_string(b.k_) + ")");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(*this, o);
  Scalar r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(*this, o);
  if (k_ == 1) return Scalar(coeffs_[0] * o.coeffs_[0]);
  Poly prod = poly_mul(coeffs_, o.coeffs_);
  trim(prod);
  Poly phi = cyclotomic_polynomial(k_);
  Poly rem;
  poly_divmod(prod, phi, &rem);
  rem.resize(euler_totient(k_), Rational(0));
  return Scalar(k_, std::move(rem));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (k_ == 1) return Scalar(Rational(1) / coeffs_[0]);
  // Extended Euclid in Q[x] against Phi_k (irreducible over Q).
  Poly r0 = cyclotomic_polynomial(k_);
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0 = {}, s1 = {Rational(1)};  // Bezout coefficients for this value
  while (!r1.empty()) {
    Poly rem;
    Poly q = poly_divmod(r0, r1, &rem);
    Poly qs = poly_mul(q, s1);
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant gcd; s0 * value == r0 mod Phi_k.
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  Poly rem;
  poly_divmod(s0, cyclotomic_polynomial(k_), &rem);
  rem.resize(euler_totient(k_), Rational(0));
  return Scalar(k_, std::move(rem));
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(*this, o);
  return coeffs_ == o.coeffs_;
}

Scalar Scalar::promoted_to(int k) const {
  if (k_ == k) return *this;
  if (k_ != 1)
    throw FieldMismatchError("only rationals may be promoted");
  return rational_in(k, coeffs_[0]);
}

std::string Scalar::str() const {
  if (k_ == 1) return to_string(coeffs_[0]);
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    out << to_string(coeffs_[i]);
    if (i >= 1) out << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace cohomog
