#include "cohomog/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cohomog {

PoincareSeries PoincareSeries::one(int truncation) {
  PoincareSeries s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

PoincareSeries PoincareSeries::geometric(int d, int truncation) {
  if (d <= 0) throw std::invalid_argument("geometric: degree must be > 0");
  PoincareSeries s(truncation);
  for (int i = 0; i <= truncation; i += d) s.coeffs_[i] = 1;
  return s;
}

PoincareSeries PoincareSeries::operator+(const PoincareSeries& o) const {
  int n = std::min(truncation(), o.truncation());
  PoincareSeries s(n);
  for (int i = 0; i <= n; ++i) s.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return s;
}

PoincareSeries PoincareSeries::operator-(const PoincareSeries& o) const {
  int n = std::min(truncation(), o.truncation());
  PoincareSeries s(n);
  for (int i = 0; i <= n; ++i) s.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return s;
}

PoincareSeries PoincareSeries::operator*(const PoincareSeries& o) const {
  int n = std::min(truncation(), o.truncation());
  PoincareSeries s(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n && j <= o.truncation(); ++j)
      s.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  return s;
}

PoincareSeries PoincareSeries::inverse() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("series inverse: zero constant term");
  int n = truncation();
  PoincareSeries s(n);
  s.coeffs_[0] = Rational(1) / coeffs_[0];
  for (int i = 1; i <= n; ++i) {
    Rational acc(0);
    for (int j = 1; j <= i; ++j) acc += coeffs_[j] * s.coeffs_[i - j];
    s.coeffs_[i] = -acc / coeffs_[0];
  }
  return s;
}

PoincareSeries PoincareSeries::shifted(int d) const {
  PoincareSeries s(truncation());
  for (int i = d; i <= truncation(); ++i) s.coeffs_[i] = coeffs_[i - d];
  return s;
}

PoincareSeries PoincareSeries::truncated(int truncation) const {
  PoincareSeries s(truncation);
  for (int i = 0; i <= truncation; ++i)
    s.coeffs_[i] = i <= this->truncation() ? coeffs_[i] : Rational(0);
  return s;
}

int PoincareSeries::first_difference(const PoincareSeries& o) const {
  int n = std::min(truncation(), o.truncation());
  for (int i = 0; i <= n; ++i)
    if (coeffs_[i] != o.coeffs_[i]) return i;
  return -1;
}

std::string PoincareSeries::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ",";
    out << to_string(coeffs_[i]);
  }
  return out.str();
}

PoincareSeries series_from_shape(const PresentationShape& shape, int n) {
  using Kind = PresentationShape::Kind;
  switch (shape.kind) {
    case Kind::FreePolynomial: {
      PoincareSeries s = PoincareSeries::one(n);
      for (int d : shape.generator_degrees)
        s = s * PoincareSeries::geometric(d, n);
      return s;
    }
    case Kind::TensorExterior: {
      PoincareSeries ext = PoincareSeries::one(n);
      ext.set_coeff(shape.sphere_degree, Rational(1));
      return shape.base.truncated(n) * ext;
    }
    case Kind::AdjoinTwoNilpotents: {
      int a = shape.e_minus_degree, b = shape.e_plus_degree;
      PoincareSeries factor = PoincareSeries::one(n) +
                              PoincareSeries::geometric(a, n).shifted(a) +
                              PoincareSeries::geometric(b, n).shifted(b);
      return shape.base.truncated(n) * factor;
    }
    case Kind::OddEven: {
      int e = shape.e_plus_degree;
      return shape.base.truncated(n) +
             (shape.second.truncated(n) * PoincareSeries::geometric(e, n))
                 .shifted(e);
    }
    case Kind::Table:
      return shape.base.truncated(n);
  }
  throw std::invalid_argument("unsupported presentation shape");
}

}  // namespace cohomog
