#include <doctest.h>

#include "cyclab/errors.hpp"
#include "cyclab/lie.hpp"
#include "cyclab/random.hpp"
#include "helpers.hpp"

using namespace cyclab;

namespace {

oracle::Table table_of(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  oracle::Table c(d, std::vector<std::vector<mpq_class>>(d, std::vector<mpq_class>(d, 0)));
  for (const auto& s : g.table()) c[s.i][s.j][s.k] = s.value;
  return c;
}

std::vector<long long> as_ll(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::vector<long long> ce_betti(const LieAlgebra& g) {
  return as_ll(homology(ce_complex(g, static_cast<int>(g.dim()) + 1), {false}).betti);
}

Index e(Index n, Index r, Index s) { return gl_index(n, 1, r - 1, s - 1, 0); }

}  // namespace

TEST_CASE("exterior basis ranks and unranks lexicographically") {
  ExteriorBasis b(5, 3);
  CHECK(b.size() == 10);
  CHECK(b.subset(0) == std::vector<Index>{0, 1, 2});
  CHECK(b.subset(1) == std::vector<Index>{0, 1, 3});
  CHECK(b.subset(9) == std::vector<Index>{2, 3, 4});
  for (Index f = 0; f < b.size(); ++f) CHECK(b.index(b.subset(f)) == f);
  for (Index f = 1; f < b.size(); ++f) CHECK(b.subset(f - 1) < b.subset(f));
  CHECK(ExteriorBasis(4, 0).size() == 1);
  CHECK(ExteriorBasis(3, 4).size() == 0);
  CHECK(wedge_of(b, {0, 0, 1}).empty());
  CHECK(wedge_of(b, {1, 0, 2}) == SparseVector::unit(0, -1));
  CHECK(wedge_of(b, {2, 0, 1}) == SparseVector::unit(0, 1));
}

TEST_CASE("Lie algebra validation") {
  CHECK_THROWS_AS(LieAlgebra(2, {{0, 1, 0, 1}}), InvariantViolation);
  CHECK_NOTHROW(LieAlgebra(2, {{0, 1, 0, 1}, {1, 0, 0, -1}}));
  // antisymmetric but not Jacobi: [e0,e1]=e2, [e1,e2]=e0, [e0,e2]=e0
  CHECK_THROWS_AS(LieAlgebra(3, {{0, 1, 2, 1}, {1, 0, 2, -1}, {1, 2, 0, 1}, {2, 1, 0, -1}, {0, 2, 0, 1}, {2, 0, 0, -1}}),
                  InvariantViolation);
  CHECK_THROWS_AS(LieAlgebra(2, {{0, 1, 5, 1}}), ParseError);
}

TEST_CASE("gl_n(A) dimensions and brackets") {
  auto gl2 = gl_n_of(algebras::field(), 2);
  CHECK(gl2.dim() == 4);
  CHECK(gl_n_of(algebras::dual_numbers(), 2).dim() == 8);
  CHECK(gl2.bracket(e(2, 1, 1), e(2, 1, 2)) == SparseVector::unit(e(2, 1, 2)));
  CHECK(gl2.bracket(e(2, 1, 2), e(2, 2, 1)) ==
        SparseVector::unit(e(2, 1, 1)) - SparseVector::unit(e(2, 2, 2)));
  // gl_1 of a noncommutative algebra is its commutator Lie algebra.
  auto m2 = algebras::matrix_algebra(2);
  auto gl1 = gl_n_of(m2, 1);
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 4; ++j) {
      CHECK(gl1.bracket(i, j) == m2.product(i, j) - m2.product(j, i));
    }
  }
  CHECK_NOTHROW(gl_n_of(m2, 2));
  CHECK_NOTHROW(gl_n_of(algebras::left_unital(), 2));
}

TEST_CASE("CE homology of small Lie algebras") {
  auto ab = lie_algebras::abelian(2);
  auto c = ce_complex(ab, 3);
  CHECK(c.bounded());
  CHECK(c.d(1).is_zero());
  CHECK(c.d(2).is_zero());
  CHECK(ce_betti(ab) == std::vector<long long>{1, 2, 1});

  auto gl2 = gl_n_of(algebras::field(), 2);
  CHECK(ce_betti(gl2) == std::vector<long long>{1, 1, 0, 1, 1});
  CHECK(oracle::ce_betti(table_of(gl2)) == std::vector<long long>{1, 1, 0, 1, 1});
  CHECK(ce_betti(lie_algebras::sl2()) == std::vector<long long>{1, 0, 0, 1});
  CHECK(oracle::ce_betti(table_of(lie_algebras::sl2())) == std::vector<long long>{1, 0, 0, 1});
}

TEST_CASE("CE differential agrees with the bitmask oracle entrywise") {
  for (const auto& g : {gl_n_of(algebras::field(), 2), lie_algebras::sl2(), gl_n_of(algebras::dual_numbers(), 1),
                        gl_n_of(algebras::matrix_algebra(2), 1)}) {
    for (int k = 1; k <= static_cast<int>(g.dim()); ++k) {
      CHECK(testing_helpers::dense(ce_differential(g, k)) == oracle::ce_matrix(table_of(g), k));
    }
  }
}

TEST_CASE("CE complexes satisfy d^2 = 0 and have Euler characteristic 0") {
  std::vector<LieAlgebra> algebras_list{lie_algebras::sl2(), gl_n_of(algebras::field(), 2),
                                        gl_n_of(algebras::truncated_polynomial(3), 1),
                                        gl_n_of(algebras::matrix_algebra(2), 1), lie_algebras::abelian(5)};
  for (const auto& g : algebras_list) {
    REQUIRE(g.dim() <= 6);
    auto c = ce_complex(g, static_cast<int>(g.dim()) + 1);
    CHECK(verify_complex(c).verdict);
    auto h = homology(c, {false});
    CHECK(euler_check(c, h).verdict);
    long long chi = 0;
    for (std::size_t k = 0; k < h.betti.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h.betti[k]);
    CHECK(chi == 0);
  }
}

TEST_CASE("CE complex of a non-Lie bracket fails verify_complex") {
  // Skip validation to test d^2 = 0 independently of the Jacobi pre-check.
  std::vector<SparseVector> br(9);
  br[0 * 3 + 1] = SparseVector::unit(2);
  br[1 * 3 + 0] = SparseVector::unit(2, -1);
  br[1 * 3 + 2] = SparseVector::unit(0);
  br[2 * 3 + 1] = SparseVector::unit(0, -1);
  br[0 * 3 + 2] = SparseVector::unit(0);
  br[2 * 3 + 0] = SparseVector::unit(0, -1);
  LieAlgebra bad(3, br, {}, false);
  CHECK_FALSE(verify_complex(ce_complex(bad, 3)).verdict);
}

TEST_CASE("gl_n(Q) action on chains") {
  auto q = algebras::field();
  auto act1 = gln_action_on_chains(q, 2, 1);
  SparseMatrix identity_action = act1.matrices[e(2, 1, 1)] + act1.matrices[e(2, 2, 2)];
  CHECK(identity_action.is_zero());
  CHECK(act1.matrices[e(2, 1, 2)].apply(SparseVector::unit(e(2, 2, 1))) ==
        SparseVector::unit(e(2, 1, 1)) - SparseVector::unit(e(2, 2, 2)));
  CHECK(verify_action(act1).verdict);

  auto dual = algebras::dual_numbers();
  auto act2 = gln_action_on_chains(dual, 2, 2);
  CHECK(verify_action(act2).verdict);
  auto act1d = gln_action_on_chains(dual, 2, 1);
  ExteriorBasis b2(8, 2);
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index x = rng.below(4);
    const Index u = rng.below(8), v = rng.below(8);
    // ρ(X)(u ∧ v) = ρ(X)u ∧ v + u ∧ ρ(X)v
    Accumulator rhs;
    for (const auto& t : act1d.matrices[x].col(u)) rhs.add(wedge_of(b2, {t.index, v}), t.value);
    for (const auto& t : act1d.matrices[x].col(v)) rhs.add(wedge_of(b2, {u, t.index}), t.value);
    const SparseVector uv = wedge_of(b2, {u, v});
    CHECK(act2.matrices[x].apply(uv) == rhs.finish());
  }

  // Commutes with d.
  auto g = gl_n_of(dual, 2);
  auto d2 = ce_differential(g, 2);
  for (Index x = 0; x < 4; ++x) CHECK(d2 * act2.matrices[x] == act1d.matrices[x] * d2);
}

TEST_CASE("coinvariant complex") {
  auto gl2 = gl_n_of(algebras::field(), 2);
  auto c = std::make_shared<ChainComplex>(ce_complex(gl2, 4));

  SUBCASE("trivial action gives the identity") {
    auto res = coinvariant_complex(c, {});
    for (int n = 0; n <= c->top(); ++n) CHECK(res.quotient.components[n] == SparseMatrix::identity(c->dim(n)));
  }

  std::vector<std::vector<SparseMatrix>> actions;
  for (int k = 0; k <= 4; ++k) actions.push_back(gln_action_on_chains(algebras::field(), 2, k).matrices);
  auto res = coinvariant_complex(c, actions);
  CHECK(res.complex.dim(1) == 1);
  CHECK(verify_complex(res.complex).verdict);
  CHECK(verify_chain_map(res.quotient).verdict);
  auto induced = induced_map_on_homology(res.quotient);
  REQUIRE(induced.top >= 3);
  for (int n = 0; n <= 3; ++n) CHECK(induced.quasi_iso[n]);
  CHECK(as_ll(homology(res.complex, {false}).betti) == std::vector<long long>{1, 1, 0, 1, 1});

  std::vector<std::vector<SparseMatrix>> broken = actions;
  broken[1][0] = broken[1][0].scaled(2);
  CHECK_THROWS_AS(coinvariant_complex(c, broken), InvariantViolation);
}

TEST_CASE("coinvariants of gl_2(dual numbers) keep the homology") {
  auto dual = algebras::dual_numbers();
  auto g = gl_n_of(dual, 2);
  auto c = std::make_shared<ChainComplex>(ce_complex(g, 3));
  std::vector<std::vector<SparseMatrix>> actions;
  for (int k = 0; k <= 3; ++k) actions.push_back(gln_action_on_chains(dual, 2, k).matrices);
  auto res = coinvariant_complex(c, actions);
  auto hc = homology(*c, {false});
  auto hq = homology(res.complex, {false});
  CHECK(hc.reliable_betti() == hq.reliable_betti());
}

TEST_CASE("homotopy identity") {
  auto gl2 = gl_n_of(algebras::field(), 2);
  auto units = scalar_matrix_units(algebras::field(), 2);
  for (int k = 0; k <= 4; ++k) {
    auto r = homotopy_identity_check(gl2, units, k, 5);
    CHECK(r.verdict);
    CHECK(r.params["exhaustive"] == true);
  }
  auto dual = algebras::dual_numbers();
  auto g = gl_n_of(dual, 2);
  CHECK(homotopy_identity_check(g, scalar_matrix_units(dual, 2), 3, 5).verdict);
  // A noncentral element of the abelian algebra: every term vanishes.
  auto ab = lie_algebras::abelian(3);
  CHECK(homotopy_identity_check(ab, {SparseVector::unit(0), SparseVector::unit(2)}, 2, 1).verdict);
  // The identity needs X in the algebra whose chains are formed, with all of g:
  // arbitrary elements of gl_2(dual) also satisfy it.
  CHECK(homotopy_identity_check(g, {SparseVector::unit(1), SparseVector::unit(3) + SparseVector::unit(6)}, 2, 9)
            .verdict);
}

TEST_CASE("homotopy identity samples large families") {
  auto dual = algebras::dual_numbers();
  auto g = gl_n_of(dual, 3);  // dim 18, Λ^4 has 3060 elements
  auto r = homotopy_identity_check(g, scalar_matrix_units(dual, 3), 4, 42);
  CHECK(r.verdict);
  CHECK(r.params["exhaustive"] == false);
  CHECK(r.params["checked"] == 10000);
  CHECK(r.seed == 42);
}
