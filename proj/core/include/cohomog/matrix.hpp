#pragma once

#include <string>
#include <vector>

#include "cohomog/rational.hpp"

namespace cohomog {

// Small dense matrix over Q. Row-major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  explicit QMatrix(const std::vector<std::vector<Rational>>& rows);

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j) { return data_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[i * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const = default;
  bool operator<(const QMatrix& o) const;

  bool is_invertible() const;
  QMatrix inverse() const;
  QMatrix transpose() const;

  std::vector<std::vector<Rational>> row_vectors() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace cohomog
