#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohomog/group.hpp"

using namespace cohomog;

namespace {

QMatrix diag2(long a, long b) {
  return QMatrix{{Rational(a), Rational(0)}, {Rational(0), Rational(b)}};
}

const QMatrix kSwap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
const QMatrix kA2Second{{Rational(1), Rational(0)},
                        {Rational(-1), Rational(-1)}};

}  // namespace

TEST_CASE("close_group enumerations") {
  QMatrix neg{{Rational(-1)}};
  CHECK(close_group({neg}).order() == 2);
  // The two W(A2) reflections in the rank-2 sum-zero model generate S_3.
  CHECK(close_group({kSwap, kA2Second}).order() == 6);
  // Signed permutations of rank 2.
  CHECK(close_group({kSwap, diag2(-1, 1)}).order() == 8);
}

TEST_CASE("close_group rejects runaway input") {
  QMatrix shear{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK_THROWS_AS(close_group({shear}, 100), EnumerationCapError);
}

TEST_CASE("element orders divide the group order") {
  MatrixGroup g = close_group({kSwap, diag2(-1, 1)});
  for (const auto& m : g.elements()) {
    int order = 1;
    QMatrix p = m;
    while (!(p == QMatrix::identity(2))) {
      p = p * m;
      ++order;
    }
    CHECK(g.order() % order == 0);
  }
}

TEST_CASE("standard Weyl group orders") {
  CHECK(weyl_standard(WeylType::C, 2).order() == 8);
  CHECK(weyl_standard(WeylType::A, 2).order() == 2);
  CHECK(weyl_standard(WeylType::A, 2).rank() == 1);
  CHECK(weyl_standard(WeylType::Torus, 3).order() == 1);
  CHECK(weyl_standard(WeylType::Torus, 3).rank() == 3);
  CHECK(weyl_standard(WeylType::A, 3).order() == 6);
  CHECK(weyl_standard(WeylType::B, 3).order() == 48);
  CHECK(weyl_standard(WeylType::D, 3).order() == 24);
  CHECK(weyl_standard(WeylType::D, 4).order() == 192);
}

TEST_CASE("index_two_check") {
  MatrixGroup triv1 = MatrixGroup::trivial(1);
  MatrixGroup pm = close_group({QMatrix{{Rational(-1)}}});
  CHECK(index_two_check(triv1, pm) == QMatrix{{Rational(-1)}});

  MatrixGroup triv2 = MatrixGroup::trivial(2);
  MatrixGroup transp = close_group({kSwap});
  CHECK(index_two_check(triv2, transp) == kSwap);

  CHECK_THROWS_AS(index_two_check(pm, pm), GroupStructureError);
  MatrixGroup b2 = close_group({kSwap, diag2(-1, 1)});
  CHECK_THROWS_AS(index_two_check(triv2, b2), GroupStructureError);
}

TEST_CASE("dihedral parameters") {
  MatrixGroup triv2 = MatrixGroup::trivial(2);
  DihedralData s3 = dihedral_parameters(triv2, close_group({kSwap}),
                                        close_group({kA2Second}));
  CHECK(s3.k == 3);
  CHECK(s3.xi.order() == 6);

  MatrixGroup triv1 = MatrixGroup::trivial(1);
  MatrixGroup pm = close_group({QMatrix{{Rational(-1)}}});
  DihedralData k1 = dihedral_parameters(triv1, pm, pm);
  CHECK(k1.k == 1);
  CHECK(k1.xi.order() == 2);

  // Equal legs always give k = 1.
  MatrixGroup wh = close_group({diag2(-1, 1)});
  MatrixGroup wk = close_group({diag2(-1, 1), diag2(1, -1)});
  CHECK(dihedral_parameters(wh, wk, wk).k == 1);
}

TEST_CASE("dihedral relations") {
  MatrixGroup triv2 = MatrixGroup::trivial(2);
  DihedralData dd = dihedral_parameters(triv2, close_group({kSwap}),
                                        close_group({kA2Second}));
  QMatrix r = dd.w_plus * dd.w_minus;
  QMatrix p = QMatrix::identity(2);
  for (int j = 1; j < dd.k; ++j) {
    p = p * r;
    CHECK(!triv2.contains(p));
  }
  CHECK(triv2.contains(p * r));
  CHECK(triv2.contains(dd.w_minus * dd.w_minus));
  CHECK(triv2.contains(dd.w_plus * dd.w_plus));
  int quotient = dd.xi.order() / triv2.order();
  CHECK((quotient == dd.k || quotient == 2 * dd.k));
}

TEST_CASE("aut_normalizes") {
  MatrixGroup pm = close_group({QMatrix{{Rational(-1)}}});
  CHECK(aut_normalizes(QMatrix::identity(1), pm));
  CHECK(aut_normalizes(QMatrix{{Rational(-1)}}, pm));
  MatrixGroup w = close_group({diag2(-1, 1)});
  CHECK(!aut_normalizes(kSwap, w));
}
