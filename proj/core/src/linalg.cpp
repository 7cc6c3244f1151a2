#include "cohomog/linalg.hpp"

#include <algorithm>

namespace cohomog {

Echelon row_reduce(std::vector<std::vector<Scalar>> rows) {
  Echelon out;
  if (rows.empty()) return out;
  size_t ncols = rows[0].size();
  size_t next_row = 0;
  for (size_t col = 0; col < ncols && next_row < rows.size(); ++col) {
    size_t pivot = rows.size();
    for (size_t i = next_row; i < rows.size(); ++i)
      if (!rows[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot]);
    Scalar inv = rows[next_row][col].inverse();
    for (size_t j = col; j < ncols; ++j) rows[next_row][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == next_row || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col];
      for (size_t j = col; j < ncols; ++j)
        rows[i][j] -= f * rows[next_row][j];
    }
    out.pivot_cols.push_back(static_cast<int>(col));
    ++next_row;
  }
  rows.resize(next_row);
  out.rows = std::move(rows);
  return out;
}

int rank_of(const std::vector<std::vector<Scalar>>& rows) {
  return static_cast<int>(row_reduce(rows).pivot_cols.size());
}

std::vector<Scalar> reduce_against(const Echelon& ech,
                                   std::vector<Scalar> v) {
  for (size_t r = 0; r < ech.rows.size(); ++r) {
    int c = ech.pivot_cols[r];
    if (v[c].is_zero()) continue;
    Scalar f = v[c];
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * ech.rows[r][j];
  }
  return v;
}

bool in_span(const Echelon& ech, const std::vector<Scalar>& v) {
  auto res = reduce_against(ech, v);
  return std::all_of(res.begin(), res.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::vector<Scalar>> kernel_basis(
    const std::vector<std::vector<Scalar>>& columns, size_t m) {
  size_t n = columns.size();
  std::vector<std::vector<Scalar>> out;
  if (n == 0) return out;
  std::vector<std::vector<Scalar>> rows(m, std::vector<Scalar>(n, Scalar(0L)));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < m; ++i) rows[i][j] = columns[j][i];
  Echelon ech = row_reduce(std::move(rows));
  std::vector<bool> is_pivot(n, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(n, Scalar(0L));
    v[free] = Scalar(1L);
    for (size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivot_cols[r]] = -ech.rows[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Scalar> coords_in_monomials(const GradedPolynomial& p,
                                        const std::vector<Monomial>& monos,
                                        int field) {
  std::vector<Scalar> out(monos.size(), Scalar::rational_in(field, Rational(0)));
  size_t found = 0;
  for (size_t i = 0; i < monos.size(); ++i) {
    auto it = p.terms().find(monos[i]);
    if (it != p.terms().end()) {
      out[i] = it->second.promoted_to(field);
      ++found;
    }
  }
  if (found != p.terms().size())
    throw std::logic_error("coords_in_monomials: monomial outside basis");
  return out;
}

GradedPolynomial poly_from_coords(const std::vector<Scalar>& coords,
                                  const std::vector<Monomial>& monos,
                                  int vars) {
  GradedPolynomial p(vars);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero())
      p += GradedPolynomial::monomial(monos[i], coords[i]);
  return p;
}

}  // namespace cohomog
