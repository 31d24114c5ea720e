#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "cyclab/errors.hpp"
#include "cyclab/lqt.hpp"
#include "cyclab/parallel.hpp"

namespace cyclab {

std::vector<Partition> partitions(int m) {
  if (m < 0) throw ShapeError("partitions of a negative number");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

WeightVector weight_vector(const Partition& alpha, const Partition& beta, Index n) {
  if (alpha.size() + beta.size() > n) {
    throw ShapeError("l(alpha) + l(beta) = " + std::to_string(alpha.size() + beta.size()) + " exceeds n = " +
                     std::to_string(n));
  }
  WeightVector w(n, 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) w[i] = alpha[i];
  for (std::size_t i = 0; i < beta.size(); ++i) w[n - 1 - i] = -beta[i];
  return w;
}

namespace {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) return false;
  }
  return true;
}

WeightVector wedge_weight(const std::vector<Index>& subset, Index n, Index da) {
  WeightVector w(n, 0);
  for (Index x : subset) {
    ++w[x / (da * n)];
    --w[(x / da) % n];
  }
  return w;
}

/// e_ij (0-based) in the action list of gln_action_on_chains.
const SparseMatrix& op(const LieModuleAction& act, Index n, Index i, Index j) { return act.matrices[i * n + j]; }

/// M_μ inside the span of the basis elements `space` (all of weight μ).
Subspace highest_weight_space(const LieModuleAction& act, Index n, const std::vector<Index>& space) {
  const Index total = act.module_dim;
  std::vector<SparseVector> cols;
  for (Index b : space) {
    std::vector<Entry> e;
    Index block = 0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j, ++block) {
        for (const auto& t : op(act, n, i, j).col(b)) e.push_back({block * total + t.index, t.value});
      }
    }
    cols.push_back(SparseVector::from_entries(std::move(e)));
  }
  const Index rows = std::max<Index>(1, n * (n - 1) / 2) * total;
  Subspace ker = kernel_basis(SparseMatrix::from_columns(rows, std::move(cols)));
  std::vector<SparseVector> vecs;
  for (const auto& v : ker.basis()) vecs.push_back(v.remapped(space));
  return Subspace(total, vecs);
}

Rational weyl_dimension(const WeightVector& mu) {
  Rational d = 1;
  const long n = static_cast<long>(mu.size());
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) d *= Rational(mu[i] - mu[j] + j - i) / Rational(j - i);
  }
  return d;
}

}  // namespace

WeightDecomposition weight_decomposition(const Algebra& a, Index n, int k) {
  WeightDecomposition out;
  out.n = n;
  out.k = k;
  const Index da = a.dim();
  const Index gdim = n * n * da;
  ExteriorBasis basis(gdim, k);
  out.total_dim = basis.size();
  const LieModuleAction act = gln_action_on_chains(a, n, k);
  std::map<WeightVector, std::vector<Index>> spaces;
  for (Index f = 0; f < basis.size(); ++f) spaces[wedge_weight(basis.subset(f), n, da)].push_back(f);
  std::vector<std::pair<WeightVector, std::vector<Index>>> dominant;
  for (auto& [w, space] : spaces) {
    if (std::is_sorted(w.begin(), w.end(), std::greater<long>())) dominant.push_back({w, space});
  }
  // Highest weight first, as a deterministic order.
  std::reverse(dominant.begin(), dominant.end());
  out.components.resize(dominant.size());
  parallel_for(dominant.size(), [&](std::size_t c) {
    const auto& [mu, space] = dominant[c];
    WeightComponent comp;
    comp.weight = mu;
    for (long v : mu) {
      if (v > 0) comp.alpha.push_back(static_cast<int>(v));
    }
    for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
      if (*it < 0) comp.beta.push_back(static_cast<int>(-*it));
    }
    comp.highest = highest_weight_space(act, n, space);
    comp.weyl_dimension = weyl_dimension(mu);
    Echelon ech(basis.size());
    std::vector<SparseVector> span;
    std::deque<SparseVector> queue;
    for (const auto& v : comp.highest.basis()) {
      if (ech.insert(v)) {
        span.push_back(v);
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      SparseVector v = std::move(queue.front());
      queue.pop_front();
      for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
          SparseVector w = op(act, n, j, i).apply(v);
          if (!w.empty() && ech.insert(w)) {
            span.push_back(w);
            queue.push_back(std::move(w));
          }
        }
      }
    }
    comp.module = Subspace(basis.size(), span);
    out.components[c] = std::move(comp);
  });
  // Keep only weights that carry highest weight vectors.
  out.components.erase(std::remove_if(out.components.begin(), out.components.end(),
                                      [](const WeightComponent& c) { return c.highest.dim() == 0; }),
                       out.components.end());
  return out;
}

CheckReport weight_decomposition_check(const Algebra& a, Index n, int k) {
  CheckReport r;
  r.check = "weights";
  auto wd = weight_decomposition(a, n, k);
  r.params = {{"dim", a.dim()}, {"n", n}, {"k", k}};
  nlohmann::json comps = nlohmann::json::array();
  std::vector<SparseVector> all;
  Index sum = 0;
  for (const auto& c : wd.components) {
    comps.push_back({{"weight", c.weight},
                     {"alpha", c.alpha},
                     {"beta", c.beta},
                     {"highest_dim", c.highest.dim()},
                     {"module_dim", c.module.dim()}});
    r.lhs_dims.push_back(static_cast<long long>(c.module.dim()));
    sum += c.module.dim();
    if (Rational(static_cast<long>(c.module.dim())) != c.weyl_dimension * static_cast<long>(c.highest.dim())) {
      r.fail("module of weight " + nlohmann::json(c.weight).dump() + " has dimension " +
             std::to_string(c.module.dim()) + ", expected " + std::to_string(c.highest.dim()) + " x " +
             to_string(c.weyl_dimension));
    }
    all.insert(all.end(), c.module.basis().begin(), c.module.basis().end());
  }
  r.params["components"] = comps;
  r.rhs_dims = {static_cast<long long>(wd.total_dim)};
  if (sum != wd.total_dim) {
    r.fail("components sum to " + std::to_string(sum) + ", not " + std::to_string(wd.total_dim));
  }
  if (Subspace(wd.total_dim, all).dim() != sum) r.fail("components are not independent");
  return r;
}

// Symmetric group modules ------------------------------------------------------

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  if (!is_partition(shape)) throw ShapeError("shape is not a partition");
  const int m = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<Tableau> out;
  Tableau t(shape.size());
  std::function<void(int)> rec = [&](int v) {
    if (v > m) {
      out.push_back(t);
      return;
    }
    for (std::size_t i = 0; i < shape.size(); ++i) {
      const bool room = static_cast<int>(t[i].size()) < shape[i];
      const bool above = i == 0 || t[i - 1].size() > t[i].size();
      if (room && above) {
        t[i].push_back(v);
        rec(v + 1);
        t[i].pop_back();
      }
    }
  };
  rec(1);
  return out;
}

Index hook_length_count(const Partition& shape) {
  if (!is_partition(shape)) throw ShapeError("shape is not a partition");
  const int m = std::accumulate(shape.begin(), shape.end(), 0);
  Rational v = static_cast<long>(factorial(m));
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      long below = 0;
      for (std::size_t l = i + 1; l < shape.size() && shape[l] > j; ++l) ++below;
      v /= static_cast<long>(shape[i] - j - 1 + below + 1);
    }
  }
  return static_cast<Index>(to_int64(Integer(v.get_num())));
}

SpechtModule specht_module(const Partition& shape) {
  SpechtModule s;
  s.shape = shape;
  s.tableaux = standard_tableaux(shape);
  s.m = std::accumulate(shape.begin(), shape.end(), 0);
  factorial(s.m);
  // All tabloids: row assignments with the given row sizes.
  std::vector<int> assign(s.m);
  std::vector<int> room(shape.begin(), shape.end());
  std::function<void(int)> rec = [&](int v) {
    if (v == s.m) {
      s.tabloid_index[assign] = s.tabloids.size();
      s.tabloids.push_back(assign);
      return;
    }
    for (std::size_t i = 0; i < room.size(); ++i) {
      if (room[i] == 0) continue;
      --room[i];
      assign[v] = static_cast<int>(i);
      rec(v + 1);
      ++room[i];
    }
  };
  rec(0);
  const Index ntab = s.tabloids.size();
  std::vector<SparseVector> cols;
  for (const auto& t : s.tableaux) {
    // Σ over the column stabilizer: each column independently permuted.
    std::vector<std::vector<int>> columns;
    for (int j = 0; j < (shape.empty() ? 0 : shape[0]); ++j) {
      std::vector<int> col;
      for (std::size_t i = 0; i < t.size() && static_cast<int>(t[i].size()) > j; ++i) col.push_back(t[i][j]);
      columns.push_back(col);
    }
    Accumulator acc;
    std::vector<int> rows(s.m);
    std::function<void(std::size_t, int)> over = [&](std::size_t j, int sign) {
      if (j == columns.size()) {
        acc.add(s.tabloid_index.at(rows), sign);
        return;
      }
      for (const auto& q : all_permutations(columns[j].size())) {
        for (Index i = 0; i < q.degree(); ++i) rows[columns[j][q(i)] - 1] = static_cast<int>(i);
        over(j + 1, sign * q.sign());
      }
    };
    over(0, 1);
    cols.push_back(acc.finish());
  }
  s.polytabloids = SparseMatrix::from_columns(ntab, cols);
  auto ech = std::make_shared<Echelon>(ntab, true);
  for (Index t = 0; t < cols.size(); ++t) ech->insert(cols[t], SparseVector::unit(t));
  s.solver_ = ech;
  for (int i = 0; i + 1 < s.m; ++i) {
    std::vector<Index> img(s.m);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[i], img[i + 1]);
    s.generators.push_back(s.action(Permutation(img)));
  }
  return s;
}

SparseMatrix SpechtModule::action(const Permutation& sigma) const {
  if (static_cast<int>(sigma.degree()) != m) throw ShapeError("permutation degree differs from the module");
  std::vector<SparseVector> cols;
  for (Index t = 0; t < tableaux.size(); ++t) {
    Accumulator acc;
    for (const auto& e : polytabloids.col(t)) {
      const auto& rows = tabloids[e.index];
      std::vector<int> moved(m);
      for (int i = 0; i < m; ++i) moved[sigma(i)] = rows[i];
      acc.add(tabloid_index.at(moved), e.value);
    }
    auto [residual, coeffs] = solver_->reduce_tracked(acc.finish());
    if (!residual.empty()) throw InvariantViolation("polytabloid span is not stable under the action");
    cols.push_back(std::move(coeffs));
  }
  return SparseMatrix::from_columns(tableaux.size(), std::move(cols));
}

CheckReport specht_check(const Partition& shape) {
  CheckReport r;
  r.check = "specht";
  auto s = specht_module(shape);
  const Index syt = s.dim();
  const Index hook = hook_length_count(shape);
  const Index span = rank(s.polytabloids);
  r.params = {{"shape", shape}, {"standard_tableaux", syt}, {"hook_length", hook}, {"span_rank", span}};
  r.lhs_dims = {static_cast<long long>(syt)};
  r.rhs_dims = {static_cast<long long>(hook)};
  if (syt != hook || syt != span) r.fail("tableau count, hook length value and span rank disagree");
  const SparseMatrix id = SparseMatrix::identity(syt);
  const auto& g = s.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] * g[i] == id)) r.fail("s_" + std::to_string(i + 1) + " squared is not 1");
    if (i + 1 < g.size()) {
      const SparseMatrix p = g[i] * g[i + 1];
      if (!(p * p * p == id)) r.fail("braid relation fails at " + std::to_string(i + 1));
    }
    for (std::size_t j = i + 2; j < g.size(); ++j) {
      const SparseMatrix p = g[i] * g[j];
      if (!(p * p == id)) r.fail("s_" + std::to_string(i + 1) + " and s_" + std::to_string(j + 1) + " do not commute");
    }
  }
  if (s.m <= 4) {
    const auto perms = all_permutations(s.m);
    std::vector<SparseMatrix> mats;
    for (const auto& p : perms) mats.push_back(s.action(p));
    for (std::size_t a = 0; a < perms.size() && r.verdict; ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        if (!(mats[a] * mats[b] == mats[permutation_rank(perms[a].compose(perms[b]))])) {
          r.fail("action is not multiplicative");
          break;
        }
      }
    }
  }
  return r;
}

// ψ ---------------------------------------------------------------------------

std::vector<std::vector<Index>> zeta(const std::vector<Index>& word, Index r, Index s, Index n, Index algebra_dim) {
  if (r < 1 || r > n || s < 1 || s > n) throw ShapeError("zeta indices outside 1..n");
  if (word.empty()) throw ShapeError("zeta of an empty word");
  for (Index a : word) {
    if (a >= algebra_dim) throw ShapeError("word letter outside the algebra");
  }
  const Index p = word.size();
  std::vector<std::vector<Index>> out;
  std::vector<Index> inner(p > 0 ? p - 1 : 0, 0);
  for (;;) {
    std::vector<Index> t(p);
    for (Index j = 0; j < p; ++j) {
      const Index row = j == 0 ? r - 1 : inner[j - 1];
      const Index col = j + 1 == p ? s - 1 : inner[j];
      t[j] = gl_index(n, algebra_dim, row, col, word[j]);
    }
    out.push_back(std::move(t));
    Index pos = 0;
    while (pos < inner.size() && ++inner[pos] == n) inner[pos++] = 0;
    if (pos == inner.size()) break;
  }
  return out;
}

namespace {

using Terms = std::vector<std::pair<std::vector<Index>, Rational>>;

Terms times(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      auto t = x.first;
      t.insert(t.end(), y.first.begin(), y.first.end());
      out.push_back({std::move(t), x.second * y.second});
    }
  }
  return out;
}

SparseVector to_wedge(const Terms& t, const ExteriorBasis& basis) {
  Accumulator acc;
  for (const auto& [tuple, c] : t) {
    std::vector<Index> w = tuple;
    const int s = sort_with_sign(w);
    if (s != 0) acc.add(basis.index(w), c * s);
  }
  return acc.finish();
}

/// Basis element of the bar part: words c_1..c_m (A letters) and standard
/// tableau indices of the two Specht modules.
struct BarElement {
  std::vector<std::vector<Index>> words;
  Index x;
  Index y;
};

void enumerate_bar(int m, int degree, Index da, Index sx, Index sy, std::vector<BarElement>& out) {
  if (m == 0) {
    if (degree == 0) out.push_back({{}, 0, 0});
    return;
  }
  std::vector<int> lengths(m, 1);
  std::function<void(int, int)> comp = [&](int i, int remaining) {
    if (i == m - 1) {
      if (remaining < 1) return;
      lengths[i] = remaining;
      std::vector<Index> sizes(m);
      Index total = 1;
      for (int j = 0; j < m; ++j) {
        sizes[j] = 1;
        for (int l = 0; l < lengths[j]; ++l) sizes[j] *= da;
        total *= sizes[j];
      }
      check_resource(total * sx * sy, "bar part of psi");
      for (Index f = 0; f < total; ++f) {
        std::vector<std::vector<Index>> words(m);
        Index rest = f;
        for (int j = m - 1; j >= 0; --j) {
          TensorPowerBasis tb(da, lengths[j]);
          words[j] = tb.decode(rest % sizes[j]);
          rest /= sizes[j];
        }
        for (Index x = 0; x < sx; ++x) {
          for (Index y = 0; y < sy; ++y) out.push_back({words, x, y});
        }
      }
      return;
    }
    for (int p = 1; p <= remaining - (m - 1 - i); ++p) {
      lengths[i] = p;
      comp(i + 1, remaining - p);
    }
  };
  comp(0, degree);
}

}  // namespace

CheckReport psi_restriction_check(const Algebra& a, Index n, const Partition& alpha, const Partition& beta,
                                  int max_degree) {
  CheckReport r;
  r.check = "psi";
  if (!is_partition(alpha) || !is_partition(beta)) throw ShapeError("alpha and beta must be partitions");
  const int m = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (m != std::accumulate(beta.begin(), beta.end(), 0)) throw ShapeError("alpha and beta partition different m");
  const WeightVector mu = weight_vector(alpha, beta, n);
  const Index da = a.dim();
  const Index gdim = n * n * da;
  r.params = {{"dim", da}, {"n", n}, {"m", m}, {"alpha", alpha}, {"beta", beta}, {"weight", mu},
              {"max_degree", max_degree}};

  SpechtModule va = specht_module(alpha), vb = specht_module(beta);
  const Index sx = va.dim(), sy = vb.dim();
  auto lam = lambda_cyclic_complex(a, max_degree);

  // θ̃ of each Λ-monomial and ε̃ of each bar element, as term lists.
  auto theta_terms = [&](const std::vector<std::pair<int, Index>>& u) {
    Terms out{{{}, Rational(1)}};
    for (const auto& gen : u) {
      const TensorPowerBasis tb(da, gen.first);
      Terms factor;
      for (const auto& e : lam.connes.section[gen.first - 1].col(gen.second)) {
        const auto word = tb.decode(e.index);
        for (Index k = 1; k <= n; ++k) {
          for (auto& t : zeta(word, k, k, n, da)) factor.push_back({std::move(t), e.value});
        }
      }
      out = times(out, factor);
    }
    return out;
  };
  auto epsilon_terms = [&](const BarElement& b) {
    Terms out;
    if (m == 0) return Terms{{{}, Rational(1)}};
    for (const auto& ex : va.polytabloids.col(b.x)) {
      for (const auto& ey : vb.polytabloids.col(b.y)) {
        const auto& rx = va.tabloids[ex.index];
        const auto& ry = vb.tabloids[ey.index];
        Terms acc{{{}, ex.value * ey.value}};
        for (int i = 0; i < m; ++i) {
          Terms factor;
          for (auto& t : zeta(b.words[i], rx[i] + 1, n - ry[i], n, da)) factor.push_back({std::move(t), 1});
          acc = times(acc, factor);
        }
        out.insert(out.end(), acc.begin(), acc.end());
      }
    }
    return out;
  };

  // Bar parts by degree, their ε̃ images and coinvariant dimensions.
  std::vector<std::vector<BarElement>> bars(max_degree + 1);
  std::vector<Index> bar_coinv(max_degree + 1, 0);
  std::vector<std::vector<Terms>> bar_images(max_degree + 1);
  std::vector<SparseMatrix> ax, ay;
  if (m >= 2) {
    ax = va.generators;
    ay = vb.generators;
  }
  for (int q = 0; q <= max_degree; ++q) {
    enumerate_bar(m, q, da, sx, sy, bars[q]);
    const auto& bq = bars[q];
    std::map<std::pair<std::vector<std::vector<Index>>, std::pair<Index, Index>>, Index> where;
    for (Index i = 0; i < bq.size(); ++i) where[{bq[i].words, {bq[i].x, bq[i].y}}] = i;
    for (const auto& b : bq) bar_images[q].push_back(epsilon_terms(b));
    std::vector<SparseVector> rels;
    ExteriorBasis lq(gdim, q);
    for (Index i = 0; i < bq.size(); ++i) {
      const SparseVector img = to_wedge(bar_images[q][i], lq);
      for (int s = 0; s + 1 < m; ++s) {
        // s·b = (−1)^{p_s p_{s+1}} (swapped words) ⊗ s·x ⊗ s·y
        auto words = bq[i].words;
        std::swap(words[s], words[s + 1]);
        const int sign = (bq[i].words[s].size() * bq[i].words[s + 1].size()) % 2 == 0 ? 1 : -1;
        Accumulator rel, moved;
        rel.add(i, 1);
        for (const auto& cx : ax[s].col(bq[i].x)) {
          for (const auto& cy : ay[s].col(bq[i].y)) {
            const Index j = where.at({words, {cx.index, cy.index}});
            const Rational c = cx.value * cy.value * sign;
            rel.add(j, -c);
            moved.add(to_wedge(bar_images[q][j], lq), c);
          }
        }
        rels.push_back(rel.finish());
        if (!(moved.finish() == img)) {
          r.fail("psi is not constant on the orbit of bar element " + std::to_string(i) + " in degree " +
                 std::to_string(q));
        }
      }
    }
    bar_coinv[q] = bq.size() - rank(SparseMatrix::from_columns(bq.size(), std::move(rels)));
  }

  std::vector<long long> domain_dims, highest_dims, image_ranks;
  for (int d = 0; d <= max_degree; ++d) {
    ExteriorBasis basis(gdim, d);
    const LieModuleAction act = gln_action_on_chains(a, n, d);
    std::vector<Index> space;
    for (Index f = 0; f < basis.size(); ++f) {
      if (wedge_weight(basis.subset(f), n, da) == mu) space.push_back(f);
    }
    const Subspace highest = highest_weight_space(act, n, space);
    Index coinv = 0;
    std::vector<SparseVector> images;
    for (int j = 0; j <= d; ++j) {
      coinv += lam.complex.dim(j) * bar_coinv[d - j];
      for (const auto& u : lam.monomials[j]) {
        const Terms t = theta_terms(u);
        for (const auto& bt : bar_images[d - j]) images.push_back(to_wedge(times(t, bt), basis));
      }
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!highest.contains(images[i])) {
        r.fail("psi image " + std::to_string(i) + " in degree " + std::to_string(d) +
               " is not a highest weight vector of weight " + nlohmann::json(mu).dump());
        break;
      }
    }
    const Index img_rank = Subspace(basis.size(), images).dim();
    domain_dims.push_back(static_cast<long long>(coinv));
    highest_dims.push_back(static_cast<long long>(highest.dim()));
    image_ranks.push_back(static_cast<long long>(img_rank));
    if (2 * static_cast<Index>(d) <= n && (img_rank != highest.dim() || img_rank != coinv)) {
      r.fail("degree " + std::to_string(d) + ": domain " + std::to_string(coinv) + ", image " +
             std::to_string(img_rank) + ", highest weight space " + std::to_string(highest.dim()));
    }
  }
  r.lhs_dims = domain_dims;
  r.rhs_dims = highest_dims;
  r.params["image_rank"] = image_ranks;
  return r;
}

}  // namespace cyclab
