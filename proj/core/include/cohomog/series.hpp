#pragma once

#include <string>
#include <vector>

#include "cohomog/rational.hpp"

namespace cohomog {

// Truncated power series in t, t tracking cohomological degree.
class PoincareSeries {
 public:
  explicit PoincareSeries(int truncation = 0)
      : coeffs_(truncation + 1, Rational(0)) {}

  static PoincareSeries one(int truncation);
  // 1 / (1 - t^d).
  static PoincareSeries geometric(int d, int truncation);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int d) const { return coeffs_.at(d); }
  void set_coeff(int d, const Rational& c) { coeffs_.at(d) = c; }

  PoincareSeries operator+(const PoincareSeries& o) const;
  PoincareSeries operator-(const PoincareSeries& o) const;
  PoincareSeries operator*(const PoincareSeries& o) const;
  // Requires nonzero constant term.
  PoincareSeries inverse() const;
  // Multiplication by t^d (shifting, truncating at the top).
  PoincareSeries shifted(int d) const;
  PoincareSeries truncated(int truncation) const;

  bool operator==(const PoincareSeries& o) const {
    return coeffs_ == o.coeffs_;
  }

  // First degree at which the two series differ, or -1 if equal on their
  // common truncation.
  int first_difference(const PoincareSeries& o) const;

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

// Catalogue of closed-form presentation shapes. The series of every ring
// presentation is assembled from one of these.
struct PresentationShape {
  enum class Kind {
    FreePolynomial,       // Q[g_1,...]: product of geometric series
    TensorExterior,       // base * (1 + t^sphere_degree)
    AdjoinTwoNilpotents,  // base * (1 + t^a/(1-t^a) + t^b/(1-t^b))
    OddEven,              // base + t^e * second/(1-t^e)
    Table,                // explicit dimension table (generic MV answer)
  };

  Kind kind = Kind::Table;
  std::vector<int> generator_degrees;  // FreePolynomial
  int sphere_degree = 0;               // TensorExterior
  int e_minus_degree = 0;              // AdjoinTwoNilpotents
  int e_plus_degree = 0;               // AdjoinTwoNilpotents, OddEven
  // TensorExterior/AdjoinTwoNilpotents: base ring series. OddEven: the
  // K^- series; `second` is then the H series. Table: the table itself.
  PoincareSeries base;
  PoincareSeries second;
};

PoincareSeries series_from_shape(const PresentationShape& shape,
                                 int truncation);

}  // namespace cohomog
