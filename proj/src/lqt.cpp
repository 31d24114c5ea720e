#include "cyclab/lqt.hpp"

#include <algorithm>
#include <numeric>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/random.hpp"

namespace cyclab {

Permutation::Permutation(std::vector<Index> image) : image_(std::move(image)) {
  const Index k = image_.size();
  std::vector<char> seen(k, 0);
  for (Index v : image_) {
    if (v >= k || seen[v]) throw ShapeError("image array is not a permutation");
    seen[v] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (Index i = 0; i < k; ++i) {
    if (seen[i]) continue;
    std::vector<Index> cyc;
    for (Index j = i; !seen[j]; j = image_[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    if (cyc.size() % 2 == 0) sign_ = -sign_;
    cycles_.push_back(std::move(cyc));
  }
}

Permutation Permutation::identity(Index k) {
  std::vector<Index> img(k);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::cycle(Index k, Index begin, Index end) {
  if (begin > end || end > k) throw ShapeError("cycle outside the permuted range");
  std::vector<Index> img(k);
  std::iota(img.begin(), img.end(), 0);
  if (end > begin) {
    for (Index p = begin; p + 1 < end; ++p) img[p] = p + 1;
    img[end - 1] = begin;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.degree() != degree()) throw ShapeError("composing permutations of different degree");
  std::vector<Index> img(degree());
  for (Index i = 0; i < degree(); ++i) img[i] = image_[other.image_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Index> img(degree());
  for (Index i = 0; i < degree(); ++i) img[image_[i]] = i;
  return Permutation(std::move(img));
}

Index factorial(Index k) {
  Index f = 1;
  for (Index i = 2; i <= k; ++i) {
    f *= i;
    check_resource(f, "|S_" + std::to_string(k) + "|");
  }
  return f;
}

std::vector<Permutation> all_permutations(Index k) {
  factorial(k);
  std::vector<Index> img(k);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Index permutation_rank(const Permutation& p) {
  const Index k = p.degree();
  Index rank = 0;
  for (Index i = 0; i < k; ++i) {
    Index smaller = 0;
    for (Index j = i + 1; j < k; ++j) smaller += p(j) < p(i);
    rank = rank * (k - i) + smaller;
  }
  return rank;
}

// Invariant theory ----------------------------------------------------------

namespace {

/// Digits of a flat index in base `base`, most significant first.
std::vector<Index> digits_of(Index flat, Index base, Index len) {
  std::vector<Index> d(len);
  for (Index i = len; i-- > 0;) {
    d[i] = flat % base;
    flat /= base;
  }
  return d;
}

Index flat_of(const std::vector<Index>& d, Index base) {
  Index flat = 0;
  for (Index v : d) flat = flat * base + v;
  return flat;
}

Index power(Index b, Index e, const std::string& what) {
  Index out = 1;
  for (Index i = 0; i < e; ++i) {
    out *= b;
    check_resource(out, what);
  }
  return out;
}

/// φ of the tensor with factors e_{rows[j] cols[j]}.
SparseVector phi_of(const std::vector<Index>& rows, const std::vector<Index>& cols,
                    const std::vector<Permutation>& perms) {
  std::vector<Entry> e;
  for (std::size_t p = 0; p < perms.size(); ++p) {
    bool hit = true;
    for (Index j = 0; j < rows.size() && hit; ++j) hit = cols[j] == rows[perms[p](j)];
    if (hit) e.push_back({p, 1});
  }
  return SparseVector::from_entries(std::move(e));
}

}  // namespace

TraceInvariantMap trace_invariant_map(Index n, Index k) {
  if (n == 0 || k == 0) throw ShapeError("trace map needs n, k >= 1");
  TraceInvariantMap out;
  out.n = n;
  out.k = k;
  const Index g = n * n;
  const Index size = power(g, k, "gl_n^(tensor k)");
  const auto perms = all_permutations(k);
  auto split = [&](Index flat, std::vector<Index>& rows, std::vector<Index>& cols) {
    auto d = digits_of(flat, g, k);
    rows.resize(k);
    cols.resize(k);
    for (Index j = 0; j < k; ++j) {
      rows[j] = d[j] / n;
      cols[j] = d[j] % n;
    }
  };
  out.phi = build_columns(perms.size(), size, [&](Index x) {
    std::vector<Index> rows, cols;
    split(x, rows, cols);
    return phi_of(rows, cols, perms);
  });
  out.rank = cyclab::rank(out.phi);

  // X·g for X = e_ab: Σ_j g_1 ⊗ ... ⊗ [e_ab, g_j] ⊗ ... ⊗ g_k,
  // [e_ab, e_rs] = δ_br e_as − δ_sa e_rb.
  auto relation = [&](Index a, Index b, Index x) {
    std::vector<Index> d = digits_of(x, g, k);
    Accumulator acc;
    for (Index j = 0; j < k; ++j) {
      const Index r = d[j] / n, s = d[j] % n;
      std::vector<Index> t = d;
      if (b == r) {
        t[j] = a * n + s;
        acc.add(flat_of(t, g), 1);
      }
      if (s == a) {
        t[j] = r * n + b;
        acc.add(flat_of(t, g), -1);
      }
    }
    return acc.finish();
  };
  std::vector<char> ok(size, 1);
  parallel_for(size, [&](std::size_t x) {
    for (Index a = 0; a < n && ok[x]; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (!out.phi.apply(relation(a, b, x)).empty()) {
          ok[x] = 0;
          break;
        }
      }
    }
  });
  out.annihilates_relations = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });

  // Coinvariants = weight-zero tensors modulo e_ab applied to weight ε_b − ε_a.
  std::vector<std::vector<long>> weight(size);
  std::vector<Index> zero_weight;
  for (Index x = 0; x < size; ++x) {
    std::vector<long> w(n, 0);
    for (Index v : digits_of(x, g, k)) {
      ++w[v / n];
      --w[v % n];
    }
    if (std::all_of(w.begin(), w.end(), [](long c) { return c == 0; })) zero_weight.push_back(x);
    weight[x] = std::move(w);
  }
  std::vector<SparseVector> rels;
  for (Index x = 0; x < size; ++x) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (a == b) continue;
        const auto& w = weight[x];
        bool fits = true;
        for (Index c = 0; c < n && fits; ++c) {
          const long want = (c == b ? 1 : 0) - (c == a ? 1 : 0);
          fits = w[c] == want;
        }
        if (fits) rels.push_back(relation(a, b, x));
      }
    }
  }
  out.coinvariant_dim = zero_weight.size() - cyclab::rank(SparseMatrix::from_columns(size, std::move(rels)));

  if (n >= k) {
    std::vector<SparseVector> cols;
    for (const auto& p : perms) {
      std::vector<Index> d(k);
      for (Index j = 0; j < k; ++j) d[j] = j * n + p(j);
      cols.push_back(SparseVector::unit(flat_of(d, g)));
    }
    out.lift = SparseMatrix::from_columns(size, std::move(cols));
  }
  return out;
}

CheckReport trace_map_check(Index n, Index k) {
  CheckReport r;
  r.check = "phi";
  auto t = trace_invariant_map(n, k);
  const Index group = factorial(k);
  const bool bijective = t.coinvariant_dim == group && t.rank == group;
  r.params = {{"n", n},
              {"k", k},
              {"rank", t.rank},
              {"annihilates_relations", t.annihilates_relations},
              {"bijective_on_coinvariants", bijective}};
  r.lhs_dims = {static_cast<long long>(t.coinvariant_dim)};
  r.rhs_dims = {static_cast<long long>(group)};
  if (!t.annihilates_relations) r.fail("phi does not vanish on the coinvariance relations");
  if (bijective != (n >= k)) {
    r.fail("phi is " + std::string(bijective ? "" : "not ") + "bijective on coinvariants for n = " +
           std::to_string(n) + ", k = " + std::to_string(k));
  }
  if (t.lift && !(t.phi * *t.lift == SparseMatrix::identity(group))) r.fail("lift is not a section of phi");
  return r;
}

CheckReport equivariance_check(Index n, Index k, std::uint64_t seed) {
  CheckReport r;
  r.check = "phi_equivariance";
  r.seed = seed;
  const auto t = trace_invariant_map(n, k);
  const auto perms = all_permutations(k);
  const Index g = n * n;
  const Index size = t.phi.cols();
  const Index total = size * perms.size();
  constexpr Index kSampleLimit = 10000;
  const bool exhaustive = total <= kSampleLimit;
  std::vector<Index> pairs;
  if (exhaustive) {
    pairs.resize(total);
    std::iota(pairs.begin(), pairs.end(), 0);
  } else {
    Rng rng(seed);
    for (Index p = 0; p < kSampleLimit; ++p) pairs.push_back(rng.below(total));
  }
  r.params = {{"n", n}, {"k", k}, {"pairs", total}, {"checked", pairs.size()}, {"exhaustive", exhaustive}};
  std::vector<char> ok(pairs.size(), 1);
  parallel_for(pairs.size(), [&](std::size_t p) {
    const Permutation& sigma = perms[pairs[p] / size];
    const Index x = pairs[p] % size;
    const auto d = digits_of(x, g, k);
    std::vector<Index> moved(k);
    for (Index i = 0; i < k; ++i) moved[sigma(i)] = d[i];
    const SparseVector lhs = t.phi.col(flat_of(moved, g));
    const Permutation inv = sigma.inverse();
    Accumulator rhs;
    for (const auto& e : t.phi.col(x)) {
      rhs.add(permutation_rank(sigma.compose(perms[e.index]).compose(inv)), e.value);
    }
    if (!(lhs == rhs.finish())) ok[p] = 0;
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!ok[p]) {
      r.fail("equivariance fails for permutation " + std::to_string(pairs[p] / size) + " on tensor " +
             std::to_string(pairs[p] % size));
      break;
    }
  }
  return r;
}

// W complex and θ -------------------------------------------------------------

WBasis::WBasis(Index algebra_dim, int degree) : dim_a_(algebra_dim), degree_(degree) {
  if (degree < 0) throw ShapeError("negative degree");
  const Index N = static_cast<Index>(degree);
  tensor_size_ = power(dim_a_, N, "A^(tensor " + std::to_string(N) + ")");
  perms_ = all_permutations(N);
  const Index total = perms_.size() * tensor_size_;
  check_resource(total, "S_N x A^(tensor N)");
  index_.assign(total, -2);
  sign_.assign(total, 0);
  std::vector<Index> orbit;
  for (Index p0 = 0; p0 < total; ++p0) {
    if (index_[p0] != -2) continue;
    const Permutation& pi = perms_[p0 / tensor_size_];
    const auto x = digits_of(p0 % tensor_size_, dim_a_, N);
    orbit.clear();
    bool dead = false;
    const long id = static_cast<long>(reps_.size());
    for (const auto& sigma : perms_) {
      const Permutation conj = sigma.compose(pi).compose(sigma.inverse());
      std::vector<Index> y(N);
      for (Index i = 0; i < N; ++i) y[sigma(i)] = x[i];
      const Index q = permutation_rank(conj) * tensor_size_ + flat_of(y, dim_a_);
      // [q] = sgn(σ) [p0]
      const signed char s = static_cast<signed char>(sigma.sign());
      if (index_[q] == -2) {
        index_[q] = id;
        sign_[q] = s;
        orbit.push_back(q);
      } else if (sign_[q] != s) {
        dead = true;
      }
    }
    if (dead) {
      for (Index q : orbit) {
        index_[q] = -1;
        sign_[q] = 0;
      }
    } else {
      reps_.push_back({p0 / tensor_size_, p0 % tensor_size_});
    }
  }
}

std::optional<std::pair<Index, int>> WBasis::classify(const Permutation& pi, Index x) const {
  const long id = index_[permutation_rank(pi) * tensor_size_ + x];
  if (id < 0) return std::nullopt;
  return std::make_pair(static_cast<Index>(id), static_cast<int>(sign_[permutation_rank(pi) * tensor_size_ + x]));
}

namespace {

/// A factor e_{row,col} ⊗ a of gl(A) in a tensor.
struct MatrixFactor {
  Index row;
  Index col;
  Index a;
};

/// φ of a tensor of matrix factors, into W_N.
void add_phi(const std::vector<MatrixFactor>& h, const Rational& coef, const WBasis& w, Index dim_a,
             const std::vector<Permutation>& perms, Accumulator& acc) {
  std::vector<Index> x(h.size());
  for (Index j = 0; j < h.size(); ++j) x[j] = h[j].a;
  const Index flat = flat_of(x, dim_a);
  for (const auto& sigma : perms) {
    bool hit = true;
    for (Index j = 0; j < h.size() && hit; ++j) hit = h[j].col == h[sigma(j)].row;
    if (!hit) continue;
    if (auto c = w.classify(sigma, flat)) acc.add(c->first, coef * c->second);
  }
}

}  // namespace

WComplex w_complex(const Algebra& a, int max_degree) {
  if (max_degree < 0) throw ShapeError("negative degree bound");
  WComplex out;
  const Index da = a.dim();
  for (int N = 0; N <= max_degree; ++N) out.bases.emplace_back(da, N);
  std::vector<Index> dims;
  std::vector<SparseMatrix> diffs;
  for (int N = 0; N <= max_degree; ++N) {
    dims.push_back(out.bases[N].size());
    if (N == 0) continue;
    const WBasis& src = out.bases[N];
    const WBasis& dst = out.bases[N - 1];
    const auto perms = all_permutations(N);
    const auto lower_perms = all_permutations(N - 1);
    diffs.push_back(build_columns(dst.size(), src.size(), [&](Index i) {
      const auto [rank, flat] = src.representative(i);
      const Permutation& pi = perms[rank];
      const auto x = digits_of(flat, da, N);
      // Lift to (e_{0π(0)} ⊗ x_0) ∧ ... and apply the CE differential.
      std::vector<MatrixFactor> g(N);
      for (int j = 0; j < N; ++j) g[j] = {static_cast<Index>(j), pi(j), x[j]};
      Accumulator acc;
      std::vector<MatrixFactor> h(N - 1);
      for (int p = 0; p < N; ++p) {
        for (int q = p + 1; q < N; ++q) {
          const Rational sign = (p + q + 1) % 2 == 0 ? 1 : -1;
          std::size_t pos = 1;
          for (int c = 0; c < N; ++c) {
            if (c != p && c != q) h[pos++] = g[c];
          }
          if (g[p].col == g[q].row) {
            for (const auto& e : a.product(g[p].a, g[q].a)) {
              h[0] = {g[p].row, g[q].col, e.index};
              add_phi(h, sign * e.value, dst, da, lower_perms, acc);
            }
          }
          if (g[q].col == g[p].row) {
            for (const auto& e : a.product(g[q].a, g[p].a)) {
              h[0] = {g[q].row, g[p].col, e.index};
              add_phi(h, -sign * e.value, dst, da, lower_perms, acc);
            }
          }
        }
      }
      return acc.finish();
    }));
  }
  out.complex = ChainComplex(std::move(dims), std::move(diffs), false);
  return out;
}

namespace {

using Generator = std::pair<int, Index>;

/// Sorts generators with Koszul signs; 0 when an odd generator repeats.
int koszul_sort(std::vector<Generator>& g) {
  int sign = 1;
  for (std::size_t i = 1; i < g.size(); ++i) {
    for (std::size_t j = i; j > 0 && g[j] < g[j - 1]; --j) {
      if ((g[j].first * g[j - 1].first) % 2 != 0) sign = -sign;
      std::swap(g[j], g[j - 1]);
    }
  }
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i] == g[i - 1] && g[i].first % 2 != 0) return 0;
  }
  return sign;
}

void enumerate_monomials(const std::vector<Generator>& gens, std::size_t from, int remaining,
                         std::vector<Generator>& current, std::vector<std::vector<Generator>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < gens.size(); ++i) {
    const int k = gens[i].first;
    if (k > remaining) break;
    current.push_back(gens[i]);
    enumerate_monomials(gens, k % 2 != 0 ? i + 1 : i, remaining - k, current, out);
    current.pop_back();
  }
}

}  // namespace

LambdaCyclicComplex lambda_cyclic_complex(const Algebra& a, int max_degree) {
  if (max_degree < 0) throw ShapeError("negative degree bound");
  LambdaCyclicComplex out;
  out.connes = connes_complex(a, std::max(max_degree - 1, 0));
  out.generator_count.assign(max_degree + 1, 0);
  std::vector<Generator> gens;
  for (int k = 1; k <= max_degree; ++k) {
    out.generator_count[k] = out.connes.complex.dim(k - 1);
    for (Index i = 0; i < out.generator_count[k]; ++i) gens.push_back({k, i});
  }
  std::vector<std::map<std::vector<Generator>, Index>> lookup(max_degree + 1);
  std::vector<Index> dims;
  for (int N = 0; N <= max_degree; ++N) {
    std::vector<std::vector<Generator>> mons;
    std::vector<Generator> cur;
    enumerate_monomials(gens, 0, N, cur, mons);
    check_resource(mons.size(), "graded-commutative monomials of degree " + std::to_string(N));
    for (Index i = 0; i < mons.size(); ++i) lookup[N][mons[i]] = i;
    dims.push_back(mons.size());
    out.monomials.push_back(std::move(mons));
  }
  std::vector<SparseMatrix> diffs;
  for (int N = 1; N <= max_degree; ++N) {
    const auto& mons = out.monomials[N];
    diffs.push_back(build_columns(dims[N - 1], dims[N], [&](Index col) {
      const auto& u = mons[col];
      Accumulator acc;
      int prefix = 0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        const int k = u[i].first;
        if (k >= 2) {
          const Rational sign = prefix % 2 == 0 ? 1 : -1;
          for (const auto& e : out.connes.complex.d(k - 1).col(u[i].second)) {
            std::vector<Generator> v = u;
            v[i] = {k - 1, e.index};
            const int s = koszul_sort(v);
            if (s != 0) acc.add(lookup[N - 1].at(v), sign * e.value * s);
          }
        }
        prefix += k;
      }
      return acc.finish();
    }));
  }
  out.complex = ChainComplex(std::move(dims), std::move(diffs), false);
  return out;
}

ThetaResult theta_map(const Algebra& a, int max_degree) {
  ThetaResult out{{}, w_complex(a, max_degree), lambda_cyclic_complex(a, max_degree)};
  const Index da = a.dim();
  auto source = std::make_shared<const ChainComplex>(out.domain.complex);
  auto target = std::make_shared<const ChainComplex>(out.w.complex);
  out.map.source = source;
  out.map.target = target;
  for (int N = 0; N <= max_degree; ++N) {
    const auto& mons = out.domain.monomials[N];
    const WBasis& w = out.w.bases[N];
    out.map.components.push_back(build_columns(w.size(), mons.size(), [&](Index col) {
      const auto& u = mons[col];
      // Block cycles (s → s+1 → ... → s+k-1 → s).
      std::vector<Index> img(N);
      std::size_t start = 0;
      for (const auto& gen : u) {
        const Index k = static_cast<Index>(gen.first);
        for (Index p = 0; p + 1 < k; ++p) img[start + p] = start + p + 1;
        img[start + k - 1] = start;
        start += k;
      }
      const Permutation pi(img);
      // Multilinear expansion of the representatives.
      std::vector<std::pair<std::vector<Index>, Rational>> terms{{{}, Rational(1)}};
      for (const auto& gen : u) {
        const TensorPowerBasis tb(da, gen.first);
        std::vector<std::pair<std::vector<Index>, Rational>> next;
        for (const auto& t : terms) {
          for (const auto& e : out.domain.connes.section[gen.first - 1].col(gen.second)) {
            auto word = t.first;
            for (Index v : tb.decode(e.index)) word.push_back(v);
            next.push_back({std::move(word), t.second * e.value});
          }
        }
        terms = std::move(next);
      }
      Accumulator acc;
      for (const auto& t : terms) {
        if (auto c = w.classify(pi, flat_of(t.first, da))) acc.add(c->first, t.second * c->second);
      }
      return acc.finish();
    }));
  }
  return out;
}

CheckReport theta_check(const Algebra& a, int max_degree) {
  CheckReport r;
  r.check = "theta";
  r.params = {{"dim", a.dim()}, {"max_degree", max_degree}};
  auto t = theta_map(a, max_degree);
  r.absorb(verify_complex(t.domain.complex));
  r.absorb(verify_complex(t.w.complex));
  r.absorb(verify_chain_map(t.map));
  std::vector<bool> bij;
  for (int N = 0; N <= max_degree; ++N) {
    r.lhs_dims.push_back(static_cast<long long>(t.domain.complex.dim(N)));
    r.rhs_dims.push_back(static_cast<long long>(t.w.complex.dim(N)));
    const bool ok = is_invertible(t.map.components[N]);
    bij.push_back(ok);
    if (!ok) r.fail("theta is not bijective in degree " + std::to_string(N));
  }
  r.params["bijective"] = bij;
  return r;
}

// Stable range ------------------------------------------------------------------

std::vector<Index> graded_free_commutative_dims(const std::vector<Index>& gens, int max_degree) {
  if (max_degree < 0) throw ShapeError("negative degree bound");
  if (!gens.empty() && gens[0] != 0) throw ShapeError("generators in degree 0");
  std::vector<Integer> poly(max_degree + 1, 0);
  poly[0] = 1;
  for (int d = 1; d < static_cast<int>(gens.size()) && d <= max_degree; ++d) {
    for (Index copy = 0; copy < gens[d]; ++copy) {
      if (d % 2 != 0) {
        // × (1 + t^d)
        for (int e = max_degree; e >= d; --e) poly[e] += poly[e - d];
      } else {
        // × 1 / (1 − t^d)
        for (int e = d; e <= max_degree; ++e) poly[e] += poly[e - d];
      }
    }
  }
  std::vector<Index> out;
  for (const auto& c : poly) out.push_back(static_cast<Index>(to_int64(c)));
  return out;
}

CheckReport lqt_stable_check(const Algebra& a, Index n, int max_r, bool non_unital_route) {
  CheckReport r;
  r.check = "lqt";
  if (n == 0 || max_r < 0) throw ShapeError("lqt check needs n >= 1 and max_r >= 0");
  int top = -1;
  for (int q = 0; q <= max_r; ++q) {
    const Index need = non_unital_route ? 2 * static_cast<Index>(q) + 1 : static_cast<Index>(q) + 1;
    if (need <= n) top = q;
  }
  r.params = {{"dim", a.dim()},
              {"n", n},
              {"max_r", max_r},
              {"route", non_unital_route ? "h_unital" : "unital"},
              {"stable_top", top}};
  if (!non_unital_route && !a.unital()) {
    r.fail("the unital stable range needs a unit");
    return r;
  }
  if (non_unital_route) {
    auto hu = h_unitality_check(a, std::max(top, 0) + 1);
    r.params["h_unital"] = hu.verdict;
    if (!hu.verdict) {
      r.fail("algebra is not H-unital through degree " + std::to_string(std::max(top, 0) + 1));
      return r;
    }
  }
  if (top < 0) return r;
  auto lie = gl_n_of(a, n);
  auto ce = homology(ce_complex(lie, top + 1), {false});
  auto connes = homology(connes_complex(a, std::max(top, 1)).complex, {false});
  std::vector<Index> gens(top + 1, 0);
  for (int k = 1; k <= top; ++k) gens[k] = connes.betti[k - 1];
  auto expected = graded_free_commutative_dims(gens, top);
  r.params["cyclic_betti"] = std::vector<std::size_t>(connes.betti.begin(), connes.betti.begin() + top);
  for (int q = 0; q <= top; ++q) {
    r.lhs_dims.push_back(static_cast<long long>(ce.betti[q]));
    r.rhs_dims.push_back(static_cast<long long>(expected[q]));
    if (ce.betti[q] != expected[q]) {
      r.fail("degree " + std::to_string(q) + ": H(gl_n) has dimension " + std::to_string(ce.betti[q]) +
             ", the free graded-commutative algebra " + std::to_string(expected[q]));
    }
  }
  return r;
}

}  // namespace cyclab
