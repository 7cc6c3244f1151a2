#include "cohomog/invariant_ring.hpp"

#include <algorithm>

#include "cohomog/linalg.hpp"

namespace cohomog {

GradedPolynomial act(const QMatrix& m, const GradedPolynomial& p) {
  if (m.rows() != p.vars())
    throw ShapeMismatchError("act: matrix rank does not match variables");
  return p.substitute_linear(m.row_vectors(), m.cols());
}

namespace {

// det(I - u*g) as a univariate polynomial in u, constant term first.
std::vector<Rational> char_like_det(const QMatrix& g) {
  int n = g.rows();
  // Entries are linear polynomials a + b*u, stored as pairs of coeff
  // vectors; cofactor expansion is fine at these sizes.
  using UPoly = std::vector<Rational>;
  auto mul = [](const UPoly& a, const UPoly& b) {
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto add_into = [](UPoly& a, const UPoly& b, const Rational& sign) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  };

  std::vector<std::vector<UPoly>> entry(n, std::vector<UPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      UPoly e{Rational(i == j ? 1 : 0), -g.at(i, j)};
      entry[i][j] = e;
    }

  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  auto det = [&](auto&& self, std::vector<int> cs, int row) -> UPoly {
    if (cs.empty()) return UPoly{Rational(1)};
    UPoly acc{Rational(0)};
    Rational sign(1);
    for (size_t idx = 0; idx < cs.size(); ++idx) {
      std::vector<int> rest;
      for (size_t j = 0; j < cs.size(); ++j)
        if (j != idx) rest.push_back(cs[j]);
      UPoly sub = self(self, rest, row + 1);
      add_into(acc, mul(entry[row][cs[idx]], sub), sign);
      sign = -sign;
    }
    return acc;
  };
  return det(det, cols, 0);
}

}  // namespace

PoincareSeries molien(const MatrixGroup& g, int truncation) {
  PoincareSeries total(truncation);
  for (const auto& e : g.elements()) {
    auto det = char_like_det(e);  // polynomial in u = t^2
    PoincareSeries den(truncation);
    for (size_t i = 0; i < det.size(); ++i)
      if (2 * i <= static_cast<size_t>(truncation))
        den.set_coeff(static_cast<int>(2 * i), det[i]);
    total = total + den.inverse();
  }
  PoincareSeries scale(truncation);
  scale.set_coeff(0, Rational(1) / g.order());
  return total * scale;
}

GradedPolynomial restrict_along(const QMatrix& embedding,
                                const GradedPolynomial& p) {
  // Row convention: embedding is r_H x r_K; the substitution matrix for
  // the K variables is its transpose.
  QMatrix sub = embedding.transpose();
  if (sub.rows() != p.vars())
    throw ShapeMismatchError("restrict_along: embedding shape mismatch");
  return p.substitute_linear(sub.row_vectors(), sub.cols());
}

const std::vector<GradedPolynomial>& InvariantRing::basis(int d) const {
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;

  std::vector<GradedPolynomial> result;
  auto monos = homogeneous_monomials(vars(), d);
  if (!monos.empty()) {
    // Reynolds-average each monomial, then row-reduce the averages.
    std::vector<std::vector<Scalar>> rows;
    Rational inv_order = Rational(1) / group_.order();
    for (const auto& m : monos) {
      GradedPolynomial avg(vars());
      GradedPolynomial base = GradedPolynomial::monomial(m, Scalar(1));
      for (const auto& g : group_.elements()) avg += act(g, base);
      avg = avg * Scalar(inv_order);
      if (!avg.is_zero()) rows.push_back(coords_in_monomials(avg, monos, 1));
    }
    Echelon ech = row_reduce(std::move(rows));
    for (const auto& row : ech.rows)
      result.push_back(poly_from_coords(row, monos, vars()));
  }
  return cache_.emplace(d, std::move(result)).first->second;
}

PoincareSeries InvariantRing::dimension_series(int truncation) const {
  PoincareSeries s(truncation);
  for (int d = 0; d <= truncation; d += 2) s.set_coeff(d, dim(d));
  return s;
}

std::vector<std::pair<int, GradedPolynomial>>
InvariantRing::minimal_generators(int truncation) const {
  std::vector<std::pair<int, GradedPolynomial>> gens;
  for (int d = 2; d <= truncation; d += 2) {
    auto monos = homogeneous_monomials(vars(), d);
    if (monos.empty()) continue;
    // Decomposables: products of positive-degree invariants.
    std::vector<std::vector<Scalar>> rows;
    for (int d1 = 2; d1 <= d - 2; d1 += 2) {
      int d2 = d - d1;
      if (d1 > d2) break;
      for (const auto& a : basis(d1))
        for (const auto& b : basis(d2))
          rows.push_back(coords_in_monomials(a * b, monos, 1));
    }
    Echelon decomp = row_reduce(std::move(rows));
    // New generators: RREF representatives of invariants mod decomposables.
    std::vector<std::vector<Scalar>> residues;
    for (const auto& p : basis(d)) {
      auto res = reduce_against(decomp, coords_in_monomials(p, monos, 1));
      bool zero = std::all_of(res.begin(), res.end(),
                              [](const Scalar& s) { return s.is_zero(); });
      if (!zero) residues.push_back(std::move(res));
    }
    Echelon fresh = row_reduce(std::move(residues));
    for (const auto& row : fresh.rows)
      gens.emplace_back(d, poly_from_coords(row, monos, vars()));
  }
  return gens;
}

std::vector<GradedPolynomial> xi_invariants(const DihedralData& dd, int d) {
  InvariantRing ring(dd.xi);
  return ring.basis(d);
}

GradedPolynomial lex_normalized(const GradedPolynomial& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coeff().inverse();
}

}  // namespace cohomog
