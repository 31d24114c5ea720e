#include "cyclab/random.hpp"

#include <limits>
#include <map>

#include "cyclab/errors.hpp"

namespace cyclab {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

long Rng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

long Rng::nonzero(long bound) {
  long v = between(1, bound);
  return coin() ? v : -v;
}

ChainComplex random_chain_complex(Rng& rng, int top, Index max_dim) {
  std::vector<Index> dims(top + 1);
  for (auto& d : dims) d = rng.below(max_dim + 1);
  std::vector<SparseMatrix> diffs;
  for (int n = 1; n <= top; ++n) {
    Subspace ker = n == 1 ? Subspace::full(dims[0]) : kernel_basis(diffs.back());
    std::vector<SparseVector> cols;
    for (Index j = 0; j < dims[n]; ++j) {
      Accumulator acc;
      for (const auto& k : ker.basis()) {
        long c = rng.between(-2, 2);
        if (c != 0) acc.add(k, c);
      }
      cols.push_back(acc.finish());
    }
    diffs.push_back(SparseMatrix::from_columns(dims[n - 1], std::move(cols)));
  }
  return ChainComplex(std::move(dims), std::move(diffs), true);
}

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense dense_identity(std::size_t n) {
  Dense m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

SparseMatrix to_sparse(const Dense& m, std::size_t n) {
  MatrixBuilder mb(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mb.add(i, j, m[i][j]);
  }
  return mb.build();
}

}  // namespace

std::pair<SparseMatrix, SparseMatrix> random_invertible(Rng& rng, Index n) {
  Dense g = dense_identity(n);
  Dense ginv = dense_identity(n);
  if (n >= 2) {
    const int steps = static_cast<int>(rng.between(1, 2 * static_cast<long>(n)));
    for (int s = 0; s < steps; ++s) {
      std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      Rational c = rng.nonzero(2);
      // g <- g * (1 + c E_ij): column j += c * column i.
      for (std::size_t r = 0; r < n; ++r) g[r][j] += c * g[r][i];
      // ginv <- (1 - c E_ij) * ginv: row i -= c * row j.
      for (std::size_t k = 0; k < n; ++k) ginv[i][k] -= c * ginv[j][k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.coin()) {
      for (std::size_t r = 0; r < n; ++r) g[r][i] = -g[r][i];
      for (std::size_t k = 0; k < n; ++k) ginv[i][k] = -ginv[i][k];
    }
  }
  return {to_sparse(g, n), to_sparse(ginv, n)};
}

DoubleComplex random_double_complex(Rng& rng, int max_p, int max_q, Index max_dim) {
  std::vector<std::vector<Index>> count(max_p + 1, std::vector<Index>(max_q + 1, 0));
  using Spot = std::pair<int, int>;
  struct Arrow {
    Spot from;
    Index from_idx;
    Spot to;
    Index to_idx;
    Rational value;
    bool horizontal;
  };
  std::vector<Arrow> arrows;
  auto fits = [&](const std::vector<Spot>& spots) {
    std::map<Spot, Index> need;
    for (auto s : spots) {
      if (s.first < 0 || s.second < 0 || s.first > max_p || s.second > max_q) return false;
      ++need[s];
    }
    for (auto& [s, k] : need) {
      if (count[s.first][s.second] + k > max_dim) return false;
    }
    return true;
  };
  auto take = [&](Spot s) { return count[s.first][s.second]++; };

  const int attempts = static_cast<int>(rng.between(2, 3 * (max_p + 1) * (max_q + 1)));
  for (int t = 0; t < attempts; ++t) {
    const auto kind = rng.below(4);
    const int p = static_cast<int>(rng.between(0, max_p));
    const int q = static_cast<int>(rng.between(0, max_q));
    if (kind == 0) {
      if (fits({{p, q}})) take({p, q});
    } else if (kind == 1) {
      // Single arrow, horizontal or vertical.
      bool horizontal = rng.coin();
      Spot to = horizontal ? Spot{p - 1, q} : Spot{p, q - 1};
      if (!fits({{p, q}, to})) continue;
      Index x = take({p, q});
      Index y = take(to);
      arrows.push_back({{p, q}, x, to, y, Rational(rng.nonzero(3)), horizontal});
    } else if (kind == 2) {
      Spot a{p - 1, q}, b{p, q - 1}, c{p - 1, q - 1};
      if (!fits({{p, q}, a, b, c})) continue;
      Index ix = take({p, q}), ia = take(a), ib = take(b), ic = take(c);
      Rational h1 = rng.nonzero(2), v1 = rng.nonzero(2), v2 = rng.nonzero(2);
      Rational h2 = -h1 * v2 / v1;
      arrows.push_back({{p, q}, ix, a, ia, h1, true});
      arrows.push_back({{p, q}, ix, b, ib, v1, false});
      arrows.push_back({a, ia, c, ic, v2, false});
      arrows.push_back({b, ib, c, ic, h2, true});
    } else {
      // Zigzag with k sources on an antidiagonal; `flip` mirrors it.
      const int k = static_cast<int>(rng.between(1, 2));
      const bool flip = rng.coin();
      auto place = [&](int x, int y) { return flip ? Spot{y, x} : Spot{x, y}; };
      std::vector<Spot> sources, targets;
      for (int i = 1; i <= k; ++i) sources.push_back(place(p + i, q - i));
      for (int j = 0; j <= k; ++j) targets.push_back(place(p + j, q - j - 1));
      std::vector<Spot> all = sources;
      all.insert(all.end(), targets.begin(), targets.end());
      if (!fits(all)) continue;
      std::vector<Index> si, ti;
      for (auto s : sources) si.push_back(take(s));
      for (auto s : targets) ti.push_back(take(s));
      for (int i = 1; i <= k; ++i) {
        arrows.push_back({sources[i - 1], si[i - 1], targets[i - 1], ti[i - 1], Rational(rng.nonzero(3)), !flip});
        arrows.push_back({sources[i - 1], si[i - 1], targets[i], ti[i], Rational(rng.nonzero(3)), flip});
      }
    }
  }

  DoubleComplex dc(max_p, max_q);
  for (int p = 0; p <= max_p; ++p) {
    for (int q = 0; q <= max_q; ++q) dc.set_dim(p, q, count[p][q]);
  }
  std::map<Spot, std::vector<Triplet>> vert, horiz;
  for (const auto& a : arrows) {
    (a.horizontal ? horiz : vert)[a.from].push_back({a.to_idx, a.from_idx, a.value});
  }
  std::vector<std::vector<std::pair<SparseMatrix, SparseMatrix>>> change(max_p + 1);
  for (int p = 0; p <= max_p; ++p) {
    for (int q = 0; q <= max_q; ++q) change[p].push_back(random_invertible(rng, count[p][q]));
  }
  for (int p = 0; p <= max_p; ++p) {
    for (int q = 0; q <= max_q; ++q) {
      const auto& src_inv = change[p][q].second;
      if (q >= 1) {
        auto m = SparseMatrix::from_triplets(count[p][q - 1], count[p][q], vert[{p, q}]);
        dc.set_vert(p, q, change[p][q - 1].first * m * src_inv);
      }
      if (p >= 1) {
        auto m = SparseMatrix::from_triplets(count[p - 1][q], count[p][q], horiz[{p, q}]);
        dc.set_horiz(p, q, change[p - 1][q].first * m * src_inv);
      }
    }
  }
  return dc;
}

}  // namespace cyclab
