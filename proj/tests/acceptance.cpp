// Acceptance suite: one line per criterion, then a determinism pass that
// reruns criteria 1-15 at 1, 4 and 8 threads and compares the reports byte
// for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cyclab/cech.hpp"
#include "cyclab/cyclic.hpp"
#include "cyclab/double_complex.hpp"
#include "cyclab/io.hpp"
#include "cyclab/lie.hpp"
#include "cyclab/lqt.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/random.hpp"
#include "cyclab/report.hpp"
#include "helpers.hpp"

using namespace cyclab;

namespace {

struct Outcome {
  std::vector<CheckReport> reports;
  std::vector<std::string> failures;

  void add(CheckReport r, const std::string& label = "") {
    if (!label.empty()) r.params["case"] = label;
    if (!r.verdict)
      failures.push_back(r.check + (label.empty() ? "" : " [" + label + "]") + ": " +
                         (r.details.empty() ? "failed" : r.details.front()));
    reports.push_back(std::move(r));
  }
  /// Keeps a report whose failure is the expected outcome.
  void record(CheckReport r, const std::string& label) {
    r.params["case"] = label;
    reports.push_back(std::move(r));
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

std::vector<long long> ll(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::string show(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Named {
  std::string name;
  Algebra algebra;
};

std::vector<Named> families() {
  using namespace algebras;
  return {{"Q", field()},
          {"dual", dual_numbers()},
          {"Q[x]/x^3", truncated_polynomial(3)},
          {"M2", matrix_algebra(2)},
          {"Q[Z/2]", cyclic_group(2)},
          {"Q[Z/3]", cyclic_group(3)},
          {"QxQ", direct_sum(field(), field())},
          {"zero1", zero_multiplication(1)},
          {"zero2", zero_multiplication(2)},
          {"left_unital", left_unital()}};
}

CheckReport d2(const std::string& builder, const ChainComplex& c) {
  auto r = verify_complex(c);
  r.check = "d2_" + builder;
  return r;
}

void complex_validity(Outcome& o) {
  auto items = families();
  Rng rng(1);
  for (int i = 0; i < 20; ++i) items.push_back({"random" + std::to_string(i), algebras::random_algebra(rng, 3)});
  for (const auto& [name, a] : items) {
    const int deg = 3;
    o.add(d2("hochschild", hochschild_complex(a, deg + 1)), name);
    o.add(d2("bar", bar_complex(a, deg + 1)), name);
    o.add(d2("connes", connes_complex(a, deg + 1).complex), name);
    o.add(d2("cyclic_total", total_complex(cyclic_bicomplex(a, deg, deg))), name);
    if (a.unital()) o.add(d2("bB_total", total_complex(bB_bicomplex(a, deg / 2 + 1, deg + 1))), name);
    for (Index n : {1, 2}) o.add(d2("ce_gl" + std::to_string(n), ce_complex(gl_n_of(a, n), deg)), name);
    o.add(d2("w", w_complex(a, deg).complex), name);
    o.add(d2("lambda_cyclic", lambda_cyclic_complex(a, deg).complex), name);
    o.add(cyclic_identities_check(a, deg), name);
  }
  o.add(d2("ce", ce_complex(lie_algebras::sl2(), 3)), "sl2");
  o.add(d2("ce", ce_complex(lie_algebras::abelian(3), 3)), "abelian3");
}

void ground_field(Outcome& o) {
  auto q = algebras::field();
  auto hh = homology(hochschild_complex(q, 4), {false});
  auto connes = homology(connes_complex(q, 5).complex, {false});
  const auto hh3 = ll(hh.reliable_betti());
  const auto hc4 = ll(connes.reliable_betti());
  CheckReport r;
  r.check = "ground_field";
  r.lhs_dims = {hh3.begin(), hh3.begin() + 4};
  r.rhs_dims = {hc4.begin(), hc4.begin() + 5};
  o.add(r);
  o.expect(r.lhs_dims == std::vector<long long>{1, 0, 0, 0}, "HH(Q) = " + show(r.lhs_dims) + ", want (1,0,0,0)");
  o.expect(r.rhs_dims == std::vector<long long>{1, 0, 1, 0, 1},
           "HC(Q) = " + show(r.rhs_dims) + ", want (1,0,1,0,1)");
  const auto table = testing_helpers::table_of(q);
  o.expect(oracle::tensor_betti(table, 3, true) == r.lhs_dims, "HH(Q) disagrees with the dense oracle");
  o.expect(oracle::connes_betti(table, 4) == r.rhs_dims, "HC(Q) disagrees with the dense oracle");
}

void comparison(Outcome& o) {
  for (const auto& [name, a] :
       std::vector<Named>{{"Q", algebras::field()},
                          {"dual", algebras::dual_numbers()},
                          {"QxQ", algebras::direct_sum(algebras::field(), algebras::field())},
                          {"left_unital", algebras::left_unital()},
                          {"M2", algebras::matrix_algebra(2)}}) {
    auto r = quasi_iso_check(a, 3);
    o.add(r, name);
    o.expect(r.lhs_dims.size() >= 4, name + ": fewer than four degrees compared");
  }
}

void h_unitality(Outcome& o) {
  o.add(h_unitality_check(algebras::field(), 3), "Q");
  o.add(h_unitality_check(algebras::left_unital(), 3), "left_unital");
  auto z = h_unitality_check(algebras::zero_multiplication(1), 3);
  o.expect(!z.verdict, "zero multiplication reported bar-acyclic");
  o.expect(z.params.value("first_failure", -1) == 1,
           "zero multiplication first failure " + z.params.value("first_failure", Json(-1)).dump() + ", want 1");
  o.record(z, "zero1");
}

void invariant_theory(Outcome& o) {
  const std::vector<std::pair<int, int>> bijective{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}};
  for (auto [k, n] : bijective) {
    const std::string label = "k=" + std::to_string(k) + " n=" + std::to_string(n);
    auto m = trace_invariant_map(n, k);
    auto r = trace_map_check(n, k);
    o.add(r, label);
    o.add(equivariance_check(n, k, 7), label);
    const Index fact = factorial(k);
    o.expect(m.annihilates_relations, label + ": φ does not kill the relations");
    o.expect(m.coinvariant_dim == fact, label + ": coinvariant dimension " + std::to_string(m.coinvariant_dim));
    o.expect(m.rank == fact, label + ": rank " + std::to_string(m.rank));
    if (std::pow(n, 2 * k) <= 729)
      o.expect(oracle::gl_tensor_coinvariant_dim(n, k) == fact, label + ": oracle coinvariant dimension differs");
  }
  auto m = trace_invariant_map(1, 2);
  auto r = trace_map_check(1, 2);
  o.add(r, "k=2 n=1");
  o.expect(m.rank < factorial(2), "k=2 n=1: φ unexpectedly surjective");
  o.expect(oracle::gl_tensor_coinvariant_dim(1, 2) == m.coinvariant_dim, "k=2 n=1: oracle coinvariant dimension");
}

void theta(Outcome& o) {
  o.add(theta_check(algebras::field(), 3), "Q");
  o.add(theta_check(algebras::dual_numbers(), 3), "dual");
}

void stable_case(Outcome& o, const std::string& name, const Algebra& a, Index n, int r, bool h_unital) {
  const std::string label = name + " n=" + std::to_string(n) + " r=" + std::to_string(r);
  auto rep = lqt_stable_check(a, n, r, h_unital);
  o.expect(rep.params.value("stable_top", -1) == r, label + ": not inside the stable range");
  // Right-hand side from the dense Connes oracle and monomial enumeration.
  auto hc = oracle::connes_betti(testing_helpers::table_of(a), std::max(r - 1, 0));
  std::vector<long long> gens(r + 1, 0);
  for (int k = 1; k <= r; ++k) gens[k] = hc[k - 1];
  const auto expect = oracle::free_graded_commutative(gens, r);
  o.expect(rep.rhs_dims == expect, label + ": right-hand side " + show(rep.rhs_dims) + ", oracle " + show(expect));
  o.expect(rep.lhs_dims == expect, label + ": H(gl_n) " + show(rep.lhs_dims) + ", oracle " + show(expect));
  o.add(rep, label);
}

void lqt_unital(Outcome& o) {
  auto q = algebras::field();
  auto d = algebras::dual_numbers();
  stable_case(o, "Q", q, 2, 1, false);
  stable_case(o, "Q", q, 3, 2, false);
  stable_case(o, "Q", q, 4, 3, false);
  stable_case(o, "dual", d, 3, 1, false);
  stable_case(o, "dual", d, 3, 2, false);
}

void lqt_non_unital(Outcome& o) { stable_case(o, "left_unital", algebras::left_unital(), 3, 1, true); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void weights(Outcome& o) {
  for (const auto& [name, a] : std::vector<Named>{{"Q", algebras::field()}, {"dual", algebras::dual_numbers()}})
    for (auto [n, k] : std::vector<std::pair<Index, int>>{{2, 1}, {2, 2}, {3, 1}}) {
      const std::string label = name + " n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.add(weight_decomposition_check(a, n, k), label);
      auto w = weight_decomposition(a, n, k);
      std::size_t sum = 0;
      for (const auto& c : w.components) sum += c.module.dim();
      const std::size_t total = binomial(n * n * a.dim(), k);
      o.expect(w.total_dim == total && sum == total,
               label + ": components sum to " + std::to_string(sum) + ", want " + std::to_string(total));
    }
}

void psi(Outcome& o) {
  for (Index n : {2, 3}) o.add(psi_restriction_check(algebras::field(), n, {1}, {1}, static_cast<int>(n / 2)),
                               "n=" + std::to_string(n));
}

void specht(Outcome& o) {
  const std::vector<std::vector<long long>> known{{1}, {1, 1}, {1, 2, 1}, {1, 3, 2, 3, 1}};
  for (int m = 1; m <= 4; ++m) {
    auto parts = partitions(m);
    std::vector<long long> dims;
    for (const auto& p : parts) {
      std::string label;
      for (int x : p) label += std::to_string(x);
      o.add(specht_check(p), label);
      const auto s = specht_module(p);
      dims.push_back(static_cast<long long>(s.dim()));
      o.expect(s.dim() == standard_tableaux(p).size() && s.dim() == oracle::hook_length(p),
               label + ": dimension " + std::to_string(s.dim()) + " vs hook length " +
                   std::to_string(oracle::hook_length(p)));
    }
    o.expect(dims == known[m - 1], "dimensions for m=" + std::to_string(m) + " are " + show(dims));
  }
}

void cech_suite(Outcome& o) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    auto p = cech_models::extension_by_zero(rng);
    const std::string label = "ext_by_zero seed " + std::to_string(seed);
    auto flabby = flabby_check(p);
    o.expect(flabby.verdict, label + ": not flabby");
    o.add(cosheaf_axiom_check(p), label);
    auto c = cech_check(p);
    std::vector<long long> expect(c.lhs_dims.size(), 0);
    if (!expect.empty()) expect[0] = static_cast<long long>(p.dim(p.model().whole()));
    o.expect(c.lhs_dims == expect, label + ": Čech betti " + show(c.lhs_dims) + ", want " + show(expect));
    o.expect(c.params.value("lattice_complete", false), label + ": model is not lattice complete");
    o.add(c, label);
  }
  auto coresolve = [&](const CosheafMorphism& d, const std::string& label) {
    o.add(cosheaf_axiom_check(cokernel_precosheaf(d)), label);
    auto out = coresolution_homology(cokernel_coresolution(d));
    o.add(out.report, label);
  };
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    auto [v, edges] = cech_models::random_graph(rng);
    coresolve(cech_models::difference_operator(cech_models::graph_model(v, edges), v, edges),
              "graph seed " + std::to_string(seed));
  }
  for (Index n : {3, 6, 7})
    for (bool lattice : {false, true}) {
      const auto edges = cech_models::cycle_edges(n);
      coresolve(cech_models::difference_operator(cech_models::circle_model(n, lattice), n, edges),
                "circle " + std::to_string(n) + (lattice ? " lattice" : ""));
    }
}

void spectral(Outcome& o) {
  Rng rng(13);
  for (int i = 0; i < 10; ++i) o.add(convergence_check(random_double_complex(rng, 3, 3, 3)), std::to_string(i));
}

void xi(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    o.add(xi_check(n, 12), "n=" + std::to_string(n));
    for (int k = 0; k <= 12; ++k) {
      const int want = k <= n ? k : ((k - n) % 2 ? n + 1 : n);
      o.expect(xi_shape(n, k) == want, "ξ_" + std::to_string(n) + "(" + std::to_string(k) +
                                           ") = " + std::to_string(xi_shape(n, k)) + ", want " + std::to_string(want));
    }
  }
}

void kunneth(Outcome& o) {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    auto a = random_chain_complex(rng, 3, 3);
    auto b = random_chain_complex(rng, 3, 3);
    o.add(kunneth_check(a, b), std::to_string(i));
  }
}

std::string serialize(const Outcome& o) {
  Json all = Json::array();
  for (const auto& r : o.reports) all.push_back(to_json(r));
  return all.dump();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "complex validity", 60, complex_validity},
      {2, "ground-field pins", 60, ground_field},
      {3, "comparison quasi-isomorphisms", 600, comparison},
      {4, "H-unitality", 60, h_unitality},
      {5, "invariant theory", 600, invariant_theory},
      {6, "theta chain isomorphism", 600, theta},
      {7, "stable range, unital", 900, lqt_unital},
      {8, "stable range, H-unital", 600, lqt_non_unital},
      {9, "weight decomposition", 600, weights},
      {10, "psi restriction", 600, psi},
      {11, "Specht modules", 60, specht},
      {12, "Čech and cosheaf suite", 600, cech_suite},
      {13, "spectral sequence convergence", 60, spectral},
      {14, "xi shape", 10, xi},
      {15, "Künneth convolution", 60, kunneth},
  };

  bool all_pass = true;
  std::vector<std::string> baseline;
  set_thread_count(8);
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) o.failures.push_back("runtime over limit");
    const bool pass = o.failures.empty();
    all_pass = all_pass && pass;
    std::printf("criterion %2d  %s  %8.2f s (limit %4.0f s)  %zu reports  %s\n", c.id, pass ? "PASS" : "FAIL", secs,
                c.limit_seconds, o.reports.size(), c.title);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    baseline.push_back(serialize(o));
  }

  // Criterion 16.
  std::vector<int> differing;
  const auto t0 = std::chrono::steady_clock::now();
  for (unsigned threads : {1u, 4u}) {
    set_thread_count(threads);
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      Outcome o;
      try {
        criteria[i].run(o);
      } catch (const std::exception& e) {
        o.failures.push_back(e.what());
      }
      if (serialize(o) != baseline[i] && std::find(differing.begin(), differing.end(), criteria[i].id) == differing.end())
        differing.push_back(criteria[i].id);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool det = differing.empty();
  all_pass = all_pass && det;
  std::printf("criterion 16  %s  %8.2f s              threads 1, 4, 8  determinism\n", det ? "PASS" : "FAIL", secs);
  for (int id : differing) std::printf("    reports of criterion %d differ between thread counts\n", id);
  std::printf("%s\n", all_pass ? "all criteria pass" : "some criteria fail");
  return all_pass ? 0 : 1;
}
