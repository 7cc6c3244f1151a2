#pragma once

#include <stdexcept>
#include <vector>

#include "cohomog/matrix.hpp"

namespace cohomog {

struct EnumerationCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupStructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationCap = 20000;

// Fully enumerated finite group of invertible rational matrices acting
// on torus variables. Identity is always element 0.
class MatrixGroup {
 public:
  // Rank-r trivial group.
  static MatrixGroup trivial(int rank);

  int rank() const { return rank_; }
  const std::vector<QMatrix>& elements() const { return elements_; }
  const std::vector<QMatrix>& generators() const { return generators_; }
  int order() const { return static_cast<int>(elements_.size()); }

  bool contains(const QMatrix& m) const;
  bool is_subgroup_of(const MatrixGroup& other) const;
  bool same_elements(const MatrixGroup& other) const;

 private:
  friend MatrixGroup close_group(const std::vector<QMatrix>&, int);
  int rank_ = 0;
  std::vector<QMatrix> generators_;
  std::vector<QMatrix> elements_;  // sorted except identity pinned first
};

// Enumerates the group generated by the given invertible matrices.
// Throws EnumerationCapError if more than `cap` elements appear.
MatrixGroup close_group(const std::vector<QMatrix>& generators,
                        int cap = kDefaultEnumerationCap);

enum class WeylType { A, B, C, D, Torus, Trivial };

// Standard Weyl actions: A with parameter n is W(A_{n-1}) = S_n in the
// rank n-1 sum-zero model; B/C are signed permutations in rank n; D the
// even-sign permutations; Torus/Trivial the identity-only group.
MatrixGroup weyl_standard(WeylType type, int n);

// Verifies WH is an index-two normal subgroup of WK and returns a coset
// representative in WK \ WH. Throws GroupStructureError otherwise.
QMatrix index_two_check(const MatrixGroup& WH, const MatrixGroup& WK);

// The dihedral-quotient datum of an even-even pair: representatives
// w_-, w_+, the group Xi generated by W(H) and both, and the order k of
// w_+ w_- in Xi/W(H).
struct DihedralData {
  int k = 1;
  QMatrix w_minus, w_plus;
  MatrixGroup xi;
};

DihedralData dihedral_parameters(const MatrixGroup& WH,
                                 const MatrixGroup& WKminus,
                                 const MatrixGroup& WKplus,
                                 int cap = kDefaultEnumerationCap);

// True iff M W M^{-1} = W as a set.
bool aut_normalizes(const QMatrix& m, const MatrixGroup& w);

}  // namespace cohomog
