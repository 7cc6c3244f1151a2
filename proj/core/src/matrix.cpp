#include "cohomog/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cohomog {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
  for (const auto& row : rows) {
    if (cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix::QMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
  for (const auto& row : rows) {
    if (cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("ragged matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

bool QMatrix::operator<(const QMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return data_[i] < o.data_[i];
  return false;
}

bool QMatrix::is_invertible() const {
  if (!is_square()) return false;
  try {
    inverse();
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

QMatrix QMatrix::inverse() const {
  if (!is_square()) throw std::domain_error("inverse of non-square matrix");
  int n = rows_;
  QMatrix a = *this;
  QMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Rational f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<std::vector<Rational>> QMatrix::row_vectors() const {
  std::vector<std::vector<Rational>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back(at(i, j));
  return out;
}

std::string QMatrix::str() const {
  std::ostringstream s;
  s << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) s << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) s << " ";
      s << to_string(at(i, j));
    }
  }
  s << "]";
  return s.str();
}

}  // namespace cohomog
