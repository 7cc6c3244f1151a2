#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohomog/scalar.hpp"

namespace cohomog {

struct ShapeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent vector; one entry per variable.
using Monomial = std::vector<int>;

// Descending lexicographic order: the leading monomial compares greatest.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

// All exponent vectors in r variables of cohomological degree d (every
// variable has degree 2), in descending lexicographic order. Odd or
// negative d yields the empty list.
std::vector<Monomial> homogeneous_monomials(int r, int d);

// Multivariate polynomial in torus variables of cohomological degree 2.
// Zero coefficients are never stored. All coefficients share one field.
class GradedPolynomial {
 public:
  explicit GradedPolynomial(int vars = 0) : vars_(vars) {}

  static GradedPolynomial variable(int vars, int index);
  static GradedPolynomial constant(int vars, const Scalar& c);
  static GradedPolynomial monomial(const Monomial& m, const Scalar& c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar, LexGreater>& terms() const {
    return terms_;
  }

  // Field the coefficients live in (1 for rational). Zero polynomial
  // reports field 1 and mixes with anything rational.
  int field() const;

  Scalar coeff(const Monomial& m) const;
  void set_coeff(const Monomial& m, const Scalar& c);

  // Leading (lex-greatest) term of a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Scalar& leading_coeff() const;

  // Cohomological degree of the top term; -1 for zero. Homogeneous
  // polynomials are the common case throughout.
  int degree() const;
  bool is_homogeneous() const;
  GradedPolynomial homogeneous_component(int d) const;

  GradedPolynomial operator-() const;
  GradedPolynomial operator+(const GradedPolynomial& o) const;
  GradedPolynomial operator-(const GradedPolynomial& o) const;
  GradedPolynomial operator*(const GradedPolynomial& o) const;
  GradedPolynomial operator*(const Scalar& c) const;
  GradedPolynomial& operator+=(const GradedPolynomial& o) {
    return *this = *this + o;
  }

  bool operator==(const GradedPolynomial& o) const;
  bool operator!=(const GradedPolynomial& o) const { return !(*this == o); }

  // Replaces variable i by the linear form with coefficients in row i of
  // m (shape vars() x target_vars). Degree-preserving ring map.
  GradedPolynomial substitute_linear(
      const std::vector<std::vector<Rational>>& m, int target_vars) const;

  // Same substitution with scalar (possibly cyclotomic) matrix entries.
  GradedPolynomial substitute_linear_scalar(
      const std::vector<std::vector<Scalar>>& m, int target_vars) const;

  GradedPolynomial promoted_to(int k) const;

  std::string str() const;

 private:
  int vars_;
  std::map<Monomial, Scalar, LexGreater> terms_;
};

}  // namespace cohomog
