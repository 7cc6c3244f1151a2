#pragma once

#include <map>
#include <memory>

#include "cohomog/group.hpp"
#include "cohomog/polynomial.hpp"
#include "cohomog/series.hpp"

namespace cohomog {

// Action of a matrix on a polynomial: each variable is replaced by the
// linear form given by its row. Used for Reynolds averaging and for the
// dihedral eigenspace analysis.
GradedPolynomial act(const QMatrix& m, const GradedPolynomial& p);

// Molien series of the invariant ring of G acting on variables of
// cohomological degree 2: (1/|G|) sum_g 1/det(I - t^2 g), truncated.
PoincareSeries molien(const MatrixGroup& g, int truncation);

// Pullback along a torus embedding iota: s -> t (shape r_H x r_K, row
// convention). Maps polynomials in the K variables to the H variables.
GradedPolynomial restrict_along(const QMatrix& embedding,
                                const GradedPolynomial& p);

// Invariant ring (H^*_S)^G with a degreewise basis cache.
class InvariantRing {
 public:
  explicit InvariantRing(MatrixGroup group) : group_(std::move(group)) {}

  const MatrixGroup& group() const { return group_; }
  int vars() const { return group_.rank(); }

  // Q-basis of the degree-d invariants: Reynolds averages of the
  // homogeneous monomials, row-reduced, in descending lex order.
  const std::vector<GradedPolynomial>& basis(int d) const;
  int dim(int d) const { return static_cast<int>(basis(d).size()); }

  PoincareSeries dimension_series(int truncation) const;

  // Degreewise greedy minimal generators up to cohomological degree N.
  std::vector<std::pair<int, GradedPolynomial>> minimal_generators(
      int truncation) const;

 private:
  MatrixGroup group_;
  mutable std::map<int, std::vector<GradedPolynomial>> cache_;
};

// Degree-d basis of the Xi-invariants inside H^*_H (equal-rank case).
std::vector<GradedPolynomial> xi_invariants(const DihedralData& dd, int d);

// Normalizes a nonzero polynomial so its lex-leading coefficient is 1.
GradedPolynomial lex_normalized(const GradedPolynomial& p);

}  // namespace cohomog
