#include <doctest.h>

#include "cyclab/cech.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/random.hpp"
#include "helpers.hpp"

using namespace cyclab;

namespace {

std::vector<long long> betti_ll(const HomologyResult& h) { return {h.betti.begin(), h.betti.end()}; }

/// Constant precosheaf Q on every open with all extensions given by `value`.
FinitePrecosheaf constant(std::shared_ptr<const CoverModel> m, long value) {
  std::map<std::pair<Index, Index>, SparseMatrix> maps;
  for (Index u = 0; u < m->open_count(); ++u)
    for (Index v = 0; v < m->open_count(); ++v)
      if (u != v && m->subset(u, v)) maps[{u, v}] = testing_helpers::mat({{value}});
  return FinitePrecosheaf(m, std::vector<Index>(m->open_count(), 1), std::move(maps));
}

/// Identity morphism of p.
CosheafMorphism identity_of(std::shared_ptr<const FinitePrecosheaf> p) {
  std::vector<SparseMatrix> c;
  for (Index u = 0; u < p->model().open_count(); ++u) c.push_back(SparseMatrix::identity(p->dim(u)));
  return {p, p, std::move(c)};
}

}  // namespace

TEST_CASE("cover models store intersections") {
  auto m = CoverModel::from_cover(4, {{0, 1, 2}, {2, 3}});
  CHECK(m.open_count() == 4);
  CHECK(m.open(m.whole()) == PointSet{0, 1, 2, 3});
  CHECK(m.find({2}).has_value());
  CHECK_THROWS_AS(CoverModel(3, {{0, 1}, {1, 2}, {0, 1, 2}}, {0, 1}), InvariantViolation);
  CHECK_THROWS_AS(CoverModel(3, {{0, 1}, {0, 1, 2}}, {0}), InvariantViolation);
  CHECK_THROWS_AS(CoverModel(2, {{0}, {1}}, {0, 1}), InvariantViolation);
}

TEST_CASE("single-open cover") {
  auto m = std::make_shared<CoverModel>(CoverModel::from_cover(3, {{0, 1, 2}}));
  auto p = constant(m, 1);
  CHECK(cosheaf_axiom_check(p).verdict);
  auto c = cech_complex(p);
  CHECK(c.top() == 0);
  CHECK(c.dim(0) == 1);
}

TEST_CASE("extension-by-zero models are flabby cosheaves with trivial higher Čech homology") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    auto p = cech_models::extension_by_zero(rng);
    CHECK(functoriality_check(p).verdict);
    CHECK(flabby_check(p).verdict);
    CHECK(cosheaf_axiom_check(p).verdict);
    auto c = cech_complex(p);
    CHECK(verify_complex(c).verdict);
    auto h = homology(c, {false});
    std::vector<long long> expect(h.betti.size(), 0);
    expect[0] = static_cast<long long>(p.dim(p.model().whole()));
    CHECK(betti_ll(h) == expect);
    CHECK(p.model().lattice_complete());
    CHECK(cech_check(p).verdict);
  }
}

TEST_CASE("precosheaf failing the sum condition") {
  // Two disjoint points, P(U) = 0 on the pieces, P(M) = Q.
  auto m = std::make_shared<CoverModel>(CoverModel::from_cover(2, {{0}, {1}}));
  std::vector<Index> dims(m->open_count(), 0);
  dims[m->whole()] = 1;
  std::map<std::pair<Index, Index>, SparseMatrix> maps;
  for (Index u = 0; u < m->open_count(); ++u)
    if (u != m->whole()) maps[{u, m->whole()}] = SparseMatrix(1, 0);
  FinitePrecosheaf p(m, dims, maps);
  auto r = cosheaf_axiom_check(p);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.details.empty());
  auto h = homology(cech_complex(p), {false});
  CHECK(h.betti[0] != p.dim(m->whole()));
}

TEST_CASE("flabbiness") {
  auto m = std::make_shared<CoverModel>(CoverModel::from_cover(3, {{0, 1}, {1, 2}}));
  CHECK(flabby_check(constant(m, 1)).verdict);
  auto collapsing = constant(m, 0);
  CHECK_FALSE(flabby_check(collapsing).verdict);
  CHECK(functoriality_check(collapsing).verdict);
}

TEST_CASE("non-functorial data is reported") {
  auto m = std::make_shared<CoverModel>(CoverModel::from_cover(3, {{0, 1}, {1, 2}}));
  const Index a = *m->find({1}), w = m->whole();
  std::map<std::pair<Index, Index>, SparseMatrix> maps;
  for (Index u = 0; u < m->open_count(); ++u)
    for (Index v = 0; v < m->open_count(); ++v)
      if (u != v && m->subset(u, v)) maps[{u, v}] = testing_helpers::mat({{1}});
  maps[{a, w}] = testing_helpers::mat({{2}});
  FinitePrecosheaf p(m, std::vector<Index>(m->open_count(), 1), maps);
  CHECK_FALSE(functoriality_check(p).verdict);
}

TEST_CASE("cokernels") {
  Rng rng(5);
  auto p = std::make_shared<FinitePrecosheaf>(cech_models::extension_by_zero(rng));
  auto id = identity_of(p);
  auto zero_q = cokernel_precosheaf(id);
  for (Index u = 0; u < p->model().open_count(); ++u) CHECK(zero_q.dim(u) == 0);
  std::vector<SparseMatrix> zero;
  for (Index u = 0; u < p->model().open_count(); ++u) zero.push_back(SparseMatrix(p->dim(u), p->dim(u)));
  auto same = cokernel_precosheaf({p, p, zero});
  CHECK(same.dims() == p->dims());
  CHECK(cosheaf_axiom_check(same).verdict);
  auto bad = id;
  bad.components[p->model().whole()] = bad.components[p->model().whole()].scaled(2);
  if (p->dim(p->model().whole()) > 0) CHECK_THROWS_AS(cokernel_precosheaf(bad), InvariantViolation);
}

TEST_CASE("difference-operator cokernels on graphs are cosheaves") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    auto [v, edges] = cech_models::random_graph(rng);
    auto m = cech_models::graph_model(v, edges);
    auto d = cech_models::difference_operator(m, v, edges);
    CHECK(naturality_check(d).verdict);
    auto q = std::make_shared<FinitePrecosheaf>(cokernel_precosheaf(d));
    CHECK(cosheaf_axiom_check(*q).verdict);
    // Connected graph: P(M) is the cycle space, dim E - V + 1.
    const long long b1 = static_cast<long long>(edges.size()) - static_cast<long long>(v) + 1;
    CHECK(q->dim(m->whole()) == static_cast<Index>(b1));
    auto res = cokernel_coresolution(d);
    auto out = coresolution_homology(res);
    CHECK(out.report.verdict);
    // Global sections: ker d = constants (degree 1), coker d = cycles (degree 0).
    CHECK(betti_ll(out.global) == std::vector<long long>{b1, 1});
    CHECK(betti_ll(out.cech) == std::vector<long long>{b1, 1});
  }
}

TEST_CASE("circle model: a degree-one class") {
  for (Index n : {3, 6, 7}) {
    CAPTURE(n);
    auto m = cech_models::circle_model(n);
    auto edges = cech_models::cycle_edges(n);
    auto res = cokernel_coresolution(cech_models::difference_operator(m, n, edges));
    auto out = coresolution_homology(res);
    CHECK(out.report.verdict);
    CHECK(betti_ll(out.global) == std::vector<long long>{1, 1});
    auto cech = betti_ll(out.cech);
    cech.resize(std::max<std::size_t>(cech.size(), 2), 0);
    CHECK(cech[0] == 1);
    CHECK(cech[1] == 1);
    CHECK(std::all_of(cech.begin() + 2, cech.end(), [](long long b) { return b == 0; }));
  }
}

TEST_CASE("flabbiness needs unions: the circle cosheaf") {
  // On intersections only, every extension of the circle cosheaf is injective
  // although Čech H_1 is nonzero; storing unions exposes the failure.
  auto edges = cech_models::cycle_edges(6);
  auto small = cokernel_precosheaf(cech_models::difference_operator(cech_models::circle_model(6), 6, edges));
  CHECK(flabby_check(small).verdict);
  CHECK_FALSE(small.model().lattice_complete());
  auto r = cech_check(small);
  CHECK(r.verdict);
  CHECK(r.lhs_dims == std::vector<long long>{1, 1});
  auto m = cech_models::circle_model(6, true);
  CHECK(m->lattice_complete());
  auto full = cokernel_precosheaf(cech_models::difference_operator(m, 6, edges));
  CHECK(cosheaf_axiom_check(full).verdict);
  CHECK_FALSE(flabby_check(full).verdict);
  auto out = coresolution_homology(cokernel_coresolution(cech_models::difference_operator(m, 6, edges)));
  CHECK(out.report.verdict);
  CHECK(betti_ll(out.global) == std::vector<long long>{1, 1});
}

TEST_CASE("identity coresolution") {
  Rng rng(9);
  auto p = std::make_shared<FinitePrecosheaf>(cech_models::extension_by_zero(rng));
  Coresolution res{p, {identity_of(p)}};
  auto out = coresolution_homology(res);
  CHECK(out.report.verdict);
  CHECK(betti_ll(out.global) == std::vector<long long>{static_cast<long long>(p->dim(p->model().whole()))});
}

TEST_CASE("coresolution rejects non-flabby terms and inexact sequences") {
  auto m = std::make_shared<CoverModel>(CoverModel::from_cover(3, {{0, 1}, {1, 2}}));
  auto c = std::make_shared<FinitePrecosheaf>(constant(m, 0));
  CHECK_THROWS_AS(coresolution_homology({c, {identity_of(c)}}), InvariantViolation);
  auto one = std::make_shared<FinitePrecosheaf>(constant(m, 1));
  std::vector<SparseMatrix> z(m->open_count(), SparseMatrix(1, 1));
  auto out = coresolution_homology({one, {CosheafMorphism{one, one, z}}});
  CHECK_FALSE(out.report.verdict);
}
