#include "cyclab/lie.hpp"

#include <algorithm>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/random.hpp"

namespace cyclab {

namespace {

std::vector<std::string> default_names(Index dim) {
  std::vector<std::string> names;
  for (Index i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

std::vector<SparseVector> brackets_from_table(Index dim, const std::vector<StructureConstant>& table) {
  std::vector<std::vector<Entry>> raw(dim * dim);
  for (const auto& s : table) {
    if (s.i >= dim || s.j >= dim || s.k >= dim) {
      throw ParseError("structure constant (" + std::to_string(s.i) + "," + std::to_string(s.j) + "," +
                       std::to_string(s.k) + ") outside dimension " + std::to_string(dim));
    }
    raw[s.i * dim + s.j].push_back({s.k, s.value});
  }
  std::vector<SparseVector> out;
  for (auto& r : raw) out.push_back(SparseVector::from_entries(std::move(r)));
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(Index dim, const std::vector<StructureConstant>& table, std::vector<std::string> names)
    : LieAlgebra(dim, brackets_from_table(dim, table), std::move(names)) {}

LieAlgebra::LieAlgebra(Index dim, std::vector<SparseVector> brackets, std::vector<std::string> names, bool check)
    : dim_(dim), brackets_(std::move(brackets)), names_(std::move(names)) {
  if (names_.empty()) names_ = default_names(dim_);
  if (brackets_.size() != dim_ * dim_) throw ShapeError("bracket table has the wrong size");
  if (names_.size() != dim_) {
    throw ParseError("basis has " + std::to_string(names_.size()) + " names for dimension " + std::to_string(dim_));
  }
  for (const auto& b : brackets_) {
    if (b.extent() > dim_) throw ParseError("bracket outside the Lie algebra");
  }
  if (check) validate();
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  Accumulator acc;
  for (const auto& a : x) {
    for (const auto& b : y) acc.add(bracket(a.index, b.index), a.value * b.value);
  }
  return acc.finish();
}

SparseMatrix LieAlgebra::ad(const SparseVector& x) const {
  std::vector<SparseVector> cols;
  for (Index j = 0; j < dim_; ++j) cols.push_back(bracket(x, SparseVector::unit(j)));
  return SparseMatrix::from_columns(dim_, std::move(cols));
}

std::vector<StructureConstant> LieAlgebra::table() const {
  std::vector<StructureConstant> out;
  for (Index i = 0; i < dim_; ++i) {
    for (Index j = 0; j < dim_; ++j) {
      for (const auto& e : bracket(i, j)) out.push_back({i, j, e.index, e.value});
    }
  }
  return out;
}

void LieAlgebra::validate() const {
  for (Index i = 0; i < dim_; ++i) {
    for (Index j = i; j < dim_; ++j) {
      if (!(bracket(i, j) == bracket(j, i).scaled(-1))) {
        throw InvariantViolation("antisymmetry fails on (" + names_[i] + ", " + names_[j] + ")");
      }
    }
  }
  std::vector<char> bad(dim_, 0);
  std::vector<std::pair<Index, Index>> witness(dim_);
  parallel_for(dim_, [&](std::size_t i) {
    for (Index j = i + 1; j < dim_ && !bad[i]; ++j) {
      for (Index k = j + 1; k < dim_; ++k) {
        Accumulator acc;
        acc.add(bracket(SparseVector::unit(i), bracket(j, k)));
        acc.add(bracket(SparseVector::unit(j), bracket(k, i)));
        acc.add(bracket(SparseVector::unit(k), bracket(i, j)));
        if (!acc.finish().empty()) {
          bad[i] = 1;
          witness[i] = {j, k};
          break;
        }
      }
    }
  });
  for (Index i = 0; i < dim_; ++i) {
    if (bad[i]) {
      throw InvariantViolation("Jacobi identity fails on (" + names_[i] + ", " + names_[witness[i].first] + ", " +
                               names_[witness[i].second] + ")");
    }
  }
}

namespace lie_algebras {

LieAlgebra abelian(Index dim) { return LieAlgebra(dim, std::vector<StructureConstant>{}); }

LieAlgebra sl2() {
  // e = 0, h = 1, f = 2
  return LieAlgebra(3,
                    {{1, 0, 0, 2}, {0, 1, 0, -2}, {1, 2, 2, -2}, {2, 1, 2, 2}, {0, 2, 1, 1}, {2, 0, 1, -1}},
                    {"e", "h", "f"});
}

}  // namespace lie_algebras

LieAlgebra gl_n_of(const Algebra& a, Index n) {
  if (n == 0) throw ShapeError("gl_n needs n >= 1");
  const Index da = a.dim();
  const Index dim = n * n * da;
  check_resource(dim * dim, "gl_n bracket table");
  std::vector<SparseVector> brackets(dim * dim);
  std::vector<std::string> names;
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < da; ++t) {
        names.push_back("E" + std::to_string(r + 1) + std::to_string(s + 1) + "*" + a.names()[t]);
      }
    }
  }
  parallel_for(dim, [&](std::size_t x) {
    const Index t = x % da, s = (x / da) % n, r = x / (da * n);
    for (Index y = 0; y < dim; ++y) {
      const Index w = y % da, v = (y / da) % n, u = y / (da * n);
      Accumulator acc;
      if (s == u) {
        for (const auto& e : a.product(t, w)) acc.add(gl_index(n, da, r, v, e.index), e.value);
      }
      if (v == r) {
        for (const auto& e : a.product(w, t)) acc.add(gl_index(n, da, u, s, e.index), -e.value);
      }
      brackets[x * dim + y] = acc.finish();
    }
  });
  return LieAlgebra(dim, std::move(brackets), std::move(names));
}

std::vector<SparseVector> scalar_matrix_units(const Algebra& a, Index n) {
  const SparseVector& u = a.unit();
  std::vector<SparseVector> out;
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) {
      std::vector<Entry> e;
      for (const auto& c : u) e.push_back({gl_index(n, a.dim(), r, s, c.index), c.value});
      out.push_back(SparseVector::from_entries(std::move(e)));
    }
  }
  return out;
}

ExteriorBasis::ExteriorBasis(Index n, int k) : n_(n), k_(k), size_(0) {
  if (k < 0) throw ShapeError("negative exterior degree");
  binom_.assign(n + 1, std::vector<Index>(k + 1, 0));
  for (Index m = 0; m <= n; ++m) {
    binom_[m][0] = 1;
    for (int j = 1; j <= k && static_cast<Index>(j) <= m; ++j) {
      // Saturated; only entries below size() are ever read back.
      binom_[m][j] = std::min<Index>(binom_[m - 1][j - 1] + binom_[m - 1][j], kResourceLimit + 1);
    }
  }
  size_ = static_cast<Index>(k) <= n ? binom_[n][k] : 0;
  check_resource(size_, "Lambda^" + std::to_string(k));
}

std::vector<Index> ExteriorBasis::subset(Index flat) const {
  std::vector<Index> out(k_);
  Index v = 0;
  for (int i = 0; i < k_; ++i) {
    for (;; ++v) {
      const Index count = binom_[n_ - 1 - v][k_ - 1 - i];
      if (flat < count) break;
      flat -= count;
    }
    out[i] = v++;
  }
  return out;
}

Index ExteriorBasis::index(const std::vector<Index>& sorted) const {
  Index flat = 0;
  Index v = 0;
  for (int i = 0; i < k_; ++i) {
    for (; v < sorted[i]; ++v) flat += binom_[n_ - 1 - v][k_ - 1 - i];
    ++v;
  }
  return flat;
}

int sort_with_sign(std::vector<Index>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

SparseVector wedge_of(const ExteriorBasis& basis, std::vector<Index> idx) {
  const int sign = sort_with_sign(idx);
  if (sign == 0) return {};
  return SparseVector::unit(basis.index(idx), sign);
}

namespace {

/// d of the basis wedge `s` (sorted), written in the basis `lower` of Λ^{k-1}.
SparseVector ce_boundary(const LieAlgebra& g, const ExteriorBasis& lower, const std::vector<Index>& s) {
  const std::size_t k = s.size();
  Accumulator acc;
  std::vector<Index> word(k - 1);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const SparseVector& br = g.bracket(s[a], s[b]);
      if (br.empty()) continue;
      const Rational sign = (a + b + 1) % 2 == 0 ? 1 : -1;
      std::size_t pos = 1;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != a && c != b) word[pos++] = s[c];
      }
      for (const auto& e : br) {
        word[0] = e.index;
        std::vector<Index> w = word;
        const int ws = sort_with_sign(w);
        if (ws != 0) acc.add(lower.index(w), sign * e.value * ws);
      }
    }
  }
  return acc.finish();
}

/// Σ_i s_1 ∧ … ∧ X s_i ∧ … ∧ s_k.
SparseVector derivation_on_wedge(const SparseMatrix& x, const ExteriorBasis& basis, const std::vector<Index>& s) {
  Accumulator acc;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const auto& e : x.col(s[i])) {
      std::vector<Index> w = s;
      w[i] = e.index;
      const int ws = sort_with_sign(w);
      if (ws != 0) acc.add(basis.index(w), e.value * ws);
    }
  }
  return acc.finish();
}

}  // namespace

SparseMatrix ce_differential(const LieAlgebra& g, int k) {
  if (k < 1) throw ShapeError("CE differential is defined from degree 1");
  ExteriorBasis upper(g.dim(), k), lower(g.dim(), k - 1);
  return build_columns(lower.size(), upper.size(),
                       [&](Index x) { return ce_boundary(g, lower, upper.subset(x)); });
}

ChainComplex ce_complex(const LieAlgebra& g, int max_degree) {
  if (max_degree < 0) throw ShapeError("negative degree bound");
  const bool bounded = static_cast<Index>(max_degree) >= g.dim();
  const int top = bounded ? static_cast<int>(g.dim()) : max_degree;
  std::vector<Index> dims;
  std::vector<SparseMatrix> diffs;
  for (int k = 0; k <= top; ++k) {
    dims.push_back(ExteriorBasis(g.dim(), k).size());
    if (k >= 1) diffs.push_back(ce_differential(g, k));
  }
  return ChainComplex(std::move(dims), std::move(diffs), bounded);
}

SparseMatrix lift_derivation(const SparseMatrix& x, Index n, int k) {
  if (x.rows() != n || x.cols() != n) throw ShapeError("operator does not act on the generating space");
  ExteriorBasis basis(n, k);
  return build_columns(basis.size(), basis.size(),
                       [&](Index f) { return derivation_on_wedge(x, basis, basis.subset(f)); });
}

CheckReport verify_action(const LieModuleAction& action) {
  CheckReport r;
  r.check = "lie_action";
  const LieAlgebra& g = action.acting;
  r.params = {{"acting_dim", g.dim()}, {"module_dim", action.module_dim}};
  if (action.matrices.size() != g.dim()) {
    r.fail("action has " + std::to_string(action.matrices.size()) + " matrices for an algebra of dimension " +
           std::to_string(g.dim()));
    return r;
  }
  for (Index i = 0; i < g.dim() && r.verdict; ++i) {
    for (Index j = i + 1; j < g.dim(); ++j) {
      SparseMatrix lhs = SparseMatrix::zero(action.module_dim, action.module_dim);
      for (const auto& e : g.bracket(i, j)) lhs = lhs + action.matrices[e.index].scaled(e.value);
      const SparseMatrix rhs =
          action.matrices[i] * action.matrices[j] - action.matrices[j] * action.matrices[i];
      if (!(lhs == rhs)) {
        r.fail("rho([" + g.names()[i] + ", " + g.names()[j] + "]) differs from the commutator");
        break;
      }
    }
  }
  return r;
}

LieModuleAction gln_action_on_chains(const Algebra& a, Index n, int k) {
  LieModuleAction out;
  out.acting = gl_n_of(algebras::field(), n);
  const Index da = a.dim();
  const Index dim = n * n * da;
  out.module_dim = ExteriorBasis(dim, k).size();
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) {
      // [e_rs, e_uv] ⊗ a = δ_su e_rv ⊗ a − δ_vr e_us ⊗ a
      std::vector<Triplet> trip;
      for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) {
          for (Index t = 0; t < da; ++t) {
            const Index col = gl_index(n, da, u, v, t);
            if (s == u) trip.push_back({gl_index(n, da, r, v, t), col, 1});
            if (v == r) trip.push_back({gl_index(n, da, u, s, t), col, -1});
          }
        }
      }
      out.matrices.push_back(lift_derivation(SparseMatrix::from_triplets(dim, dim, std::move(trip)), dim, k));
    }
  }
  return out;
}

CoinvariantResult coinvariant_complex(std::shared_ptr<const ChainComplex> c,
                                      const std::vector<std::vector<SparseMatrix>>& actions) {
  const int top = c->top();
  auto acting = [&](int n) -> const std::vector<SparseMatrix>& {
    static const std::vector<SparseMatrix> none;
    return n < static_cast<int>(actions.size()) ? actions[n] : none;
  };
  for (int n = 0; n <= top; ++n) {
    for (const auto& m : acting(n)) {
      if (m.rows() != c->dim(n) || m.cols() != c->dim(n)) {
        throw ShapeError("action matrix in degree " + std::to_string(n) + " has the wrong size");
      }
    }
  }
  for (int n = 1; n <= top; ++n) {
    const auto& hi = acting(n);
    const auto& lo = acting(n - 1);
    if (hi.size() != lo.size() && !(hi.empty() || lo.empty())) {
      throw ShapeError("degrees " + std::to_string(n - 1) + " and " + std::to_string(n) +
                       " carry different numbers of action matrices");
    }
    for (std::size_t b = 0; b < std::max(hi.size(), lo.size()); ++b) {
      const SparseMatrix left = b < hi.size() ? c->d(n) * hi[b] : SparseMatrix::zero(c->dim(n - 1), c->dim(n));
      const SparseMatrix right = b < lo.size() ? lo[b] * c->d(n) : SparseMatrix::zero(c->dim(n - 1), c->dim(n));
      if (!(left == right)) {
        throw InvariantViolation("action matrix " + std::to_string(b) + " does not commute with d_" +
                                 std::to_string(n));
      }
    }
  }
  std::vector<QuotientStructure> q(top + 1);
  parallel_for(top + 1, [&](std::size_t n) {
    std::vector<SparseVector> rel;
    for (const auto& m : acting(static_cast<int>(n))) {
      for (const auto& col : m.columns()) {
        if (!col.empty()) rel.push_back(col);
      }
    }
    q[n] = quotient_structure(Subspace(c->dim(n), rel), c->dim(n));
  });
  std::vector<Index> dims;
  std::vector<SparseMatrix> diffs;
  for (int n = 0; n <= top; ++n) {
    dims.push_back(q[n].free_coordinates.size());
    if (n >= 1) diffs.push_back(q[n - 1].projection * c->d(n) * q[n].section);
  }
  auto target = std::make_shared<ChainComplex>(std::move(dims), std::move(diffs), c->bounded());
  ChainMap map{c, target, {}};
  for (int n = 0; n <= top; ++n) map.components.push_back(q[n].projection);
  return {*target, std::move(map)};
}

CheckReport homotopy_identity_check(const LieAlgebra& g, const std::vector<SparseVector>& elements, int k,
                                    std::uint64_t seed) {
  CheckReport r;
  r.check = "homotopy_identity";
  r.seed = seed;
  if (k < 0) throw ShapeError("negative chain degree");
  ExteriorBasis basis(g.dim(), k);
  std::unique_ptr<ExteriorBasis> lower;
  if (k >= 1) lower = std::make_unique<ExteriorBasis>(g.dim(), k - 1);

  const Index total = elements.size() * basis.size();
  constexpr Index kSampleLimit = 10000;
  const bool exhaustive = total <= kSampleLimit;
  std::vector<Index> pairs;
  if (exhaustive) {
    for (Index p = 0; p < total; ++p) pairs.push_back(p);
  } else {
    Rng rng(seed);
    for (Index p = 0; p < kSampleLimit; ++p) pairs.push_back(rng.below(total));
  }
  r.params = {{"k", k}, {"pairs", total}, {"checked", pairs.size()}, {"exhaustive", exhaustive}};

  std::vector<SparseMatrix> ads;
  for (const auto& x : elements) ads.push_back(g.ad(x));

  std::vector<char> ok(pairs.size(), 1);
  parallel_for(pairs.size(), [&](std::size_t p) {
    const Index xi = pairs[p] / basis.size();
    const std::vector<Index> c = basis.subset(pairs[p] % basis.size());
    const SparseVector& x = elements[xi];
    const SparseVector lhs = derivation_on_wedge(ads[xi], basis, c);
    Accumulator rhs;
    // d(X ∧ c)
    for (const auto& e : x) {
      std::vector<Index> w{e.index};
      w.insert(w.end(), c.begin(), c.end());
      const int ws = sort_with_sign(w);
      if (ws != 0) rhs.add(ce_boundary(g, basis, w), e.value * ws);
    }
    // X ∧ dc
    if (k >= 1) {
      for (const auto& t : ce_boundary(g, *lower, c)) {
        const std::vector<Index> s = lower->subset(t.index);
        for (const auto& e : x) {
          std::vector<Index> w{e.index};
          w.insert(w.end(), s.begin(), s.end());
          const int ws = sort_with_sign(w);
          if (ws != 0) rhs.add(basis.index(w), t.value * e.value * ws);
        }
      }
    }
    if (!(lhs == rhs.finish())) ok[p] = 0;
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!ok[p]) {
      const Index xi = pairs[p] / basis.size();
      r.fail("identity fails for element " + std::to_string(xi) + " and chain " +
             std::to_string(pairs[p] % basis.size()));
      break;
    }
  }
  return r;
}

}  // namespace cyclab
