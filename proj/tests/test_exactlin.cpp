#include <doctest.h>

#include "cyclab/errors.hpp"
#include "cyclab/linalg.hpp"
#include "cyclab/random.hpp"
#include "helpers.hpp"

using namespace cyclab;
using testing_helpers::dense;
using testing_helpers::mat;
using testing_helpers::vec;

TEST_CASE("rationals are canonical") {
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("-0") == 0);
  CHECK(parse_rational("4/2").get_den() == 1);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(fits_int64(Integer("9223372036854775807")));
  CHECK_FALSE(fits_int64(Integer("9223372036854775808")));
}

TEST_CASE("sparse vectors drop zeros and merge duplicates") {
  auto v = SparseVector::from_entries({{3, 1}, {1, 2}, {3, -1}, {0, 0}});
  REQUIRE(v.nnz() == 1);
  CHECK(v.leading() == 1);
  auto w = v;
  w.axpy(-1, v);
  CHECK(w.empty());
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(SparseMatrix(0, 0)) == 0);
  CHECK(rank(SparseMatrix::identity(2)) == 2);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel bases are canonical") {
  auto k = kernel_basis(mat({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == vec({1, -1}));
  CHECK(kernel_basis(SparseMatrix::identity(3)).dim() == 0);
  CHECK(kernel_basis(SparseMatrix(2, 3)).dim() == 3);
  CHECK(kernel_basis(SparseMatrix(2, 3)) == Subspace::full(3));
}

TEST_CASE("image bases") {
  CHECK(image_basis(SparseMatrix::identity(3)) == Subspace::full(3));
  CHECK(image_basis(SparseMatrix(3, 2)).dim() == 0);
  auto im = image_basis(mat({{1}, {2}}));
  REQUIRE(im.dim() == 1);
  CHECK(im.basis()[0] == vec({1, 2}));
}

TEST_CASE("quotient structures") {
  auto q0 = quotient_structure(Subspace(2), 2);
  CHECK(q0.projection == SparseMatrix::identity(2));
  auto q1 = quotient_structure(Subspace(2, {vec({1, 0})}), 2);
  CHECK(q1.projection.rows() == 1);
  CHECK(q1.projection.apply(vec({1, 0})).empty());
  auto q2 = quotient_structure(Subspace::full(3), 3);
  CHECK(q2.projection.rows() == 0);
  CHECK_THROWS_AS(quotient_structure(Subspace(2), 3), ShapeError);
  auto q3 = quotient_structure(Subspace(3, {vec({1, 2, 3}), vec({0, 1, 1})}), 3);
  CHECK(q3.projection * q3.section == SparseMatrix::identity(1));
  CHECK(q3.projection.apply(vec({1, 2, 3})).empty());
  CHECK(q3.projection.apply(vec({0, 1, 1})).empty());
}

TEST_CASE("randomized linear algebra properties against the dense oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Index r = rng.below(6), c = rng.below(6);
    MatrixBuilder b(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j)
        if (rng.below(3) == 0) b.add(i, j, rng.between(-3, 3));
    // Force some dependent columns.
    SparseMatrix m = b.build();
    if (c >= 2 && r > 0) {
      auto cols = m.columns();
      cols[c - 1] = cols[0] + cols[1].scaled(2);
      m = SparseMatrix::from_columns(r, cols);
    }
    const auto rk = rank(m);
    CHECK(rk == oracle::dense_rank(dense(m)));
    auto k = kernel_basis(m);
    CHECK(rk + k.dim() == c);
    for (const auto& v : k.basis()) CHECK(m.apply(v).empty());
    CHECK(Subspace(c, k.basis()) == k);
    auto im = image_basis(m);
    CHECK(im.dim() == rk);
    CHECK(Subspace(r, im.basis()) == im);
    auto q = quotient_structure(im, r);
    CHECK(q.projection.rows() == r - rk);
    CHECK(rank(q.projection) == r - rk);
    CHECK(q.projection * q.section == SparseMatrix::identity(r - rk));
    for (const auto& v : im.basis()) CHECK(q.projection.apply(v).empty());
    CHECK((q.projection * m).is_zero());
  }
}

TEST_CASE("tracked echelon reports combinations of inputs") {
  Echelon e(3, true);
  CHECK(e.insert(vec({1, 1, 0}), SparseVector::unit(0)));
  CHECK(e.insert(vec({0, 2, 2}), SparseVector::unit(1)));
  CHECK_FALSE(e.insert(vec({1, 3, 2})));
  auto [res, coeffs] = e.reduce_tracked(vec({2, 4, 2}));
  CHECK(res.empty());
  CHECK(coeffs == vec({2, 1}));
}
