#pragma once

#include <vector>

#include "cohomog/polynomial.hpp"

namespace cohomog {

// Dense row reduction over Q or Q(zeta_k). Columns are eliminated left
// to right, so with columns indexed by descending-lex monomials the
// reduced rows have lex-greatest pivots.
struct Echelon {
  std::vector<std::vector<Scalar>> rows;  // reduced row-echelon form
  std::vector<int> pivot_cols;            // one per row, increasing
};

Echelon row_reduce(std::vector<std::vector<Scalar>> rows);

int rank_of(const std::vector<std::vector<Scalar>>& rows);

// Reduces v against an echelon basis in place; returns the residue.
std::vector<Scalar> reduce_against(const Echelon& ech,
                                   std::vector<Scalar> v);

bool in_span(const Echelon& ech, const std::vector<Scalar>& v);

// Basis of the null space of v |-> sum_i v_i * columns[i] (each column
// a length-m vector). Deterministic: free coordinates in index order.
std::vector<std::vector<Scalar>> kernel_basis(
    const std::vector<std::vector<Scalar>>& columns, size_t m);

// Coordinates of a homogeneous polynomial in the monomial basis given
// by `monos` (a full homogeneous list). Throws if a term is missing.
std::vector<Scalar> coords_in_monomials(const GradedPolynomial& p,
                                        const std::vector<Monomial>& monos,
                                        int field);

GradedPolynomial poly_from_coords(const std::vector<Scalar>& coords,
                                  const std::vector<Monomial>& monos,
                                  int vars);

}  // namespace cohomog
