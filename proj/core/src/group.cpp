#include "cohomog/group.hpp"

#include <algorithm>
#include <set>

namespace cohomog {

MatrixGroup MatrixGroup::trivial(int rank) {
  return close_group({QMatrix::identity(rank)});
}

bool MatrixGroup::contains(const QMatrix& m) const {
  for (const auto& e : elements_)
    if (e == m) return true;
  return false;
}

bool MatrixGroup::is_subgroup_of(const MatrixGroup& other) const {
  if (rank_ != other.rank_) return false;
  for (const auto& e : elements_)
    if (!other.contains(e)) return false;
  return true;
}

bool MatrixGroup::same_elements(const MatrixGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

MatrixGroup close_group(const std::vector<QMatrix>& generators, int cap) {
  if (generators.empty())
    throw std::invalid_argument("close_group: no generators");
  int rank = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != rank || g.cols() != rank)
      throw std::invalid_argument("close_group: ranks differ");
    if (!g.is_invertible())
      throw std::invalid_argument("close_group: singular generator");
  }

  QMatrix id = QMatrix::identity(rank);
  std::set<QMatrix> seen{id};
  std::vector<QMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<QMatrix> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        QMatrix p = e * g;
        if (seen.insert(p).second) {
          if (static_cast<int>(seen.size()) > cap)
            throw EnumerationCapError(
                "group enumeration exceeded cap of " + std::to_string(cap));
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }

  MatrixGroup group;
  group.rank_ = rank;
  group.generators_ = generators;
  group.elements_.push_back(id);
  for (const auto& e : seen)
    if (!(e == id)) group.elements_.push_back(e);
  return group;
}

namespace {

QMatrix permutation_matrix(int n, int a, int b) {
  QMatrix m = QMatrix::identity(n);
  m.at(a, a) = 0;
  m.at(b, b) = 0;
  m.at(a, b) = 1;
  m.at(b, a) = 1;
  return m;
}

}  // namespace

MatrixGroup weyl_standard(WeylType type, int n) {
  switch (type) {
    case WeylType::Torus:
    case WeylType::Trivial:
      if (n < 0) throw std::invalid_argument("weyl_standard: rank < 0");
      return MatrixGroup::trivial(n);
    case WeylType::A: {
      // W(A_{n-1}) = S_n on t_1..t_n with t_n eliminated: rank n-1.
      if (n < 2) throw std::invalid_argument("weyl_standard: A needs n >= 2");
      int r = n - 1;
      std::vector<QMatrix> gens;
      for (int i = 0; i + 1 < r; ++i) gens.push_back(permutation_matrix(r, i, i + 1));
      // The transposition (n-1, n): t_{n-1} -> t_n = -(t_1+...+t_{n-1}).
      QMatrix last = QMatrix::identity(r);
      for (int j = 0; j < r; ++j) last.at(r - 1, j) = -1;
      gens.push_back(last);
      return close_group(gens);
    }
    case WeylType::B:
    case WeylType::C: {
      if (n < 1) throw std::invalid_argument("weyl_standard: rank < 1");
      std::vector<QMatrix> gens;
      for (int i = 0; i + 1 < n; ++i) gens.push_back(permutation_matrix(n, i, i + 1));
      QMatrix flip = QMatrix::identity(n);
      flip.at(n - 1, n - 1) = -1;
      gens.push_back(flip);
      return close_group(gens);
    }
    case WeylType::D: {
      if (n < 2) throw std::invalid_argument("weyl_standard: D needs n >= 2");
      std::vector<QMatrix> gens;
      for (int i = 0; i + 1 < n; ++i) gens.push_back(permutation_matrix(n, i, i + 1));
      QMatrix doubleflip = QMatrix::identity(n);
      doubleflip.at(n - 2, n - 2) = -1;
      doubleflip.at(n - 1, n - 1) = -1;
      gens.push_back(doubleflip);
      return close_group(gens);
    }
  }
  throw std::invalid_argument("weyl_standard: unknown type");
}

QMatrix index_two_check(const MatrixGroup& WH, const MatrixGroup& WK) {
  if (WH.rank() != WK.rank())
    throw GroupStructureError("index_two_check: ranks differ");
  if (!WH.is_subgroup_of(WK))
    throw GroupStructureError("index_two_check: W(H) is not a subgroup");
  if (WK.order() != 2 * WH.order())
    throw GroupStructureError("index_two_check: index is " +
                              std::to_string(WK.order() / double(WH.order())) +
                              ", expected 2");
  QMatrix rep;
  bool found = false;
  for (const auto& e : WK.elements())
    if (!WH.contains(e)) {
      rep = e;
      found = true;
      break;
    }
  if (!found) throw GroupStructureError("index_two_check: no coset rep");
  // Normality: index two always, but verify exactly anyway.
  for (const auto& g : WK.elements())
    for (const auto& h : WH.elements())
      if (!WH.contains(g * h * g.inverse()))
        throw GroupStructureError("index_two_check: W(H) not normal");
  return rep;
}

DihedralData dihedral_parameters(const MatrixGroup& WH,
                                 const MatrixGroup& WKminus,
                                 const MatrixGroup& WKplus, int cap) {
  DihedralData dd;
  dd.w_minus = index_two_check(WH, WKminus);
  dd.w_plus = index_two_check(WH, WKplus);

  std::vector<QMatrix> gens = WH.generators();
  gens.push_back(dd.w_minus);
  gens.push_back(dd.w_plus);
  dd.xi = close_group(gens, cap);

  QMatrix r = dd.w_plus * dd.w_minus;
  QMatrix power = r;
  dd.k = 1;
  while (!WH.contains(power)) {
    power = power * r;
    ++dd.k;
    if (dd.k > dd.xi.order())
      throw GroupStructureError("dihedral_parameters: no power of w+w- in W(H)");
  }
  return dd;
}

bool aut_normalizes(const QMatrix& m, const MatrixGroup& w) {
  if (!m.is_invertible() || m.rows() != w.rank()) return false;
  QMatrix minv = m.inverse();
  for (const auto& e : w.elements())
    if (!w.contains(m * e * minv)) return false;
  return true;
}

}  // namespace cohomog
