#pragma once

// Test-only reference computations, deliberately independent of the
// library's sparse elimination.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

/// Rank by textbook dense Gaussian elimination.
inline std::size_t dense_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline Dense zeros(std::size_t rows, std::size_t cols) {
  return Dense(rows, std::vector<mpq_class>(cols, 0));
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Hook-length count of standard tableaux of the given shape.
inline std::uint64_t hook_length(const std::vector<int>& shape) {
  int m = 0;
  for (int r : shape) m += r;
  mpz_class num = 1;
  for (int i = 2; i <= m; ++i) num *= i;
  mpz_class den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      int arm = shape[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < shape.size() && shape[k] > j; ++k) ++leg;
      den *= arm + leg + 1;
    }
  }
  mpz_class q = num / den;
  return q.get_ui();
}

/// Degreewise dimensions of the free graded-commutative algebra on
/// gens[d] generators of degree d, by direct monomial enumeration: each odd
/// generator appears at most once, each even one any number of times.
inline std::vector<long long> free_graded_commutative(const std::vector<long long>& gens, int top) {
  std::vector<long long> dims(top + 1, 0);
  std::vector<int> degs;
  for (std::size_t d = 1; d < gens.size(); ++d)
    for (long long k = 0; k < gens[d]; ++k) degs.push_back(static_cast<int>(d));
  auto rec = [&](auto&& self, std::size_t i, int total) -> void {
    if (total > top) return;
    if (i == degs.size()) {
      ++dims[total];
      return;
    }
    int maxexp = degs[i] % 2 == 1 ? 1 : top / degs[i];
    for (int e = 0; e <= maxexp; ++e) self(self, i + 1, total + e * degs[i]);
  };
  rec(rec, 0, 0);
  return dims;
}

/// Multiplication table mu[i][j][k]: e_i e_j = sum_k mu[i][j][k] e_k.
using Table = std::vector<std::vector<std::vector<mpq_class>>>;

/// Multi-index digits of x in base d with `len` digits, most significant first.
inline std::vector<std::size_t> digits(std::size_t x, std::size_t d, int len) {
  std::vector<std::size_t> out(len);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = x % d;
    x /= d;
  }
  return out;
}

inline std::size_t undigits(const std::vector<std::size_t>& m, std::size_t d) {
  std::size_t x = 0;
  for (auto v : m) x = x * d + v;
  return x;
}

/// Dense Hochschild operator on A^{⊗(n+1)} written out term by term.
inline Dense expand_b(const Table& mu, int n, bool wrap) {
  const std::size_t d = mu.size();
  Dense m = zeros(ipow(d, n), ipow(d, n + 1));
  for (std::size_t x = 0; x < ipow(d, n + 1); ++x) {
    auto a = digits(x, d, n + 1);
    for (int i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        if (mu[a[i]][a[i + 1]][k] == 0) continue;
        std::vector<std::size_t> t;
        for (int j = 0; j < i; ++j) t.push_back(a[j]);
        t.push_back(k);
        for (int j = i + 2; j <= n; ++j) t.push_back(a[j]);
        m[undigits(t, d)][x] += (i % 2 == 0 ? 1 : -1) * mu[a[i]][a[i + 1]][k];
      }
    }
    if (wrap) {
      for (std::size_t k = 0; k < d; ++k) {
        if (mu[a[n]][a[0]][k] == 0) continue;
        std::vector<std::size_t> t{k};
        for (int j = 1; j < n; ++j) t.push_back(a[j]);
        m[undigits(t, d)][x] += (n % 2 == 0 ? 1 : -1) * mu[a[n]][a[0]][k];
      }
    }
  }
  return m;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  std::size_t r = a.size(), c = b.empty() ? 0 : b[0].size(), k = b.size();
  Dense out = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

inline bool is_zero(const Dense& m) {
  for (auto& row : m)
    for (auto& v : row)
      if (v != 0) return false;
  return true;
}

/// 1 - τ on A^{⊗(n+1)}, τ moving the last factor to the front with sign (-1)^n.
inline Dense one_minus_tau(std::size_t d, int n) {
  const std::size_t size = ipow(d, n + 1);
  Dense m = zeros(size, size);
  for (std::size_t x = 0; x < size; ++x) {
    auto a = digits(x, d, n + 1);
    std::vector<std::size_t> t{a[n]};
    for (int j = 0; j < n; ++j) t.push_back(a[j]);
    m[x][x] += 1;
    m[undigits(t, d)][x] -= (n % 2 == 0 ? 1 : -1);
  }
  return m;
}

inline Dense hstack(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  return out;
}

inline std::vector<long long> betti_from_ranks(const std::vector<long long>& dims, const std::vector<long long>& ranks) {
  // ranks[n] = rank of d_n, ranks[0] = 0, ranks[top+1] = rank of the next differential.
  std::vector<long long> out;
  for (std::size_t n = 0; n + 1 < ranks.size(); ++n) out.push_back(dims[n] - ranks[n] - ranks[n + 1]);
  return out;
}

/// Hochschild (wrap) or bar Betti numbers in degrees 0..top.
inline std::vector<long long> tensor_betti(const Table& mu, int top, bool wrap) {
  const std::size_t d = mu.size();
  std::vector<long long> dims, ranks{0};
  for (int n = 0; n <= top; ++n) dims.push_back(static_cast<long long>(ipow(d, n + 1)));
  for (int n = 1; n <= top + 1; ++n) ranks.push_back(static_cast<long long>(dense_rank(expand_b(mu, n, wrap))));
  return betti_from_ranks(dims, ranks);
}

/// Betti numbers of the cyclic coinvariant complex in degrees 0..top, with
/// rank(π b_n) = rank[b_n | I_{n-1}] - rank I_{n-1}, I = im(1 - τ).
inline std::vector<long long> connes_betti(const Table& mu, int top) {
  const std::size_t d = mu.size();
  std::vector<long long> dims, ranks{0};
  std::vector<long long> rank_i;
  for (int n = 0; n <= top + 1; ++n) rank_i.push_back(static_cast<long long>(dense_rank(one_minus_tau(d, n))));
  for (int n = 0; n <= top; ++n) dims.push_back(static_cast<long long>(ipow(d, n + 1)) - rank_i[n]);
  for (int n = 1; n <= top + 1; ++n) {
    auto joint = hstack(expand_b(mu, n, true), one_minus_tau(d, n - 1));
    ranks.push_back(static_cast<long long>(dense_rank(joint)) - rank_i[n - 1]);
  }
  return betti_from_ranks(dims, ranks);
}

/// Bitmask k-subsets of {0..n-1}, ordered lexicographically as sorted tuples.
inline std::vector<std::uint64_t> masks_of_size(std::size_t n, int k) {
  std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> keyed;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (__builtin_popcountll(m) != k) continue;
    std::vector<std::size_t> t;
    for (std::size_t b = 0; b < n; ++b) {
      if (m >> b & 1) t.push_back(b);
    }
    keyed.push_back({t, m});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::uint64_t> out;
  for (auto& kv : keyed) out.push_back(kv.second);
  return out;
}

/// CE differential Λ^k -> Λ^{k-1} with wedges as bitmasks: the bracket of
/// positions i < j (1-based) is moved to the front with sign (-1)^{i+j-1}.
inline Dense ce_matrix(const Table& c, int k) {
  const std::size_t n = c.size();
  auto hi = masks_of_size(n, k), lo = masks_of_size(n, k - 1);
  std::map<std::uint64_t, std::size_t> where;
  for (std::size_t i = 0; i < lo.size(); ++i) where[lo[i]] = i;
  Dense d = zeros(lo.size(), hi.size());
  for (std::size_t col = 0; col < hi.size(); ++col) {
    std::vector<std::size_t> g;
    for (std::size_t b = 0; b < n; ++b) {
      if (hi[col] >> b & 1) g.push_back(b);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        const std::uint64_t rest = hi[col] & ~(std::uint64_t{1} << g[i]) & ~(std::uint64_t{1} << g[j]);
        const int sign = ((i + 1) + (j + 1) - 1) % 2 == 0 ? 1 : -1;
        for (std::size_t m = 0; m < n; ++m) {
          if (c[g[i]][g[j]][m] == 0 || (rest >> m & 1)) continue;
          // e_m ∧ rest: sign from the number of elements of rest below m.
          const int below = __builtin_popcountll(rest & ((std::uint64_t{1} << m) - 1));
          const int s = below % 2 == 0 ? sign : -sign;
          d[where[rest | (std::uint64_t{1} << m)]][col] += s * c[g[i]][g[j]][m];
        }
      }
    }
  }
  return d;
}

/// Betti numbers of the full CE complex.
inline std::vector<long long> ce_betti(const Table& c) {
  const int n = static_cast<int>(c.size());
  std::vector<long long> dims, ranks{0};
  for (int k = 0; k <= n; ++k) dims.push_back(static_cast<long long>(masks_of_size(n, k).size()));
  for (int k = 1; k <= n; ++k) ranks.push_back(static_cast<long long>(dense_rank(ce_matrix(c, k))));
  ranks.push_back(0);
  return betti_from_ranks(dims, ranks);
}

/// Rank over F_p of small-integer rows, p = 2^31 - 1.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
  constexpr std::int64_t p = 2147483647;
  auto pw = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  for (auto& r : rows)
    for (auto& v : r) v = ((v % p) + p) % p;
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t inv = pw(rows[rank][c], p - 2);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::int64_t f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// dim of (gl_n^{⊗k})_{gl_n}: n^{2k} minus the rank of all relations X·g.
inline std::size_t gl_tensor_coinvariant_dim(int n, int k) {
  const std::size_t d = static_cast<std::size_t>(n) * n;
  const std::size_t total = ipow(d, k);
  std::vector<std::vector<std::int64_t>> rows;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (std::size_t t = 0; t < total; ++t) {
        std::vector<std::int64_t> row(total, 0);
        auto g = digits(t, d, k);
        for (int j = 0; j < k; ++j) {
          const int u = static_cast<int>(g[j] / n), v = static_cast<int>(g[j] % n);
          // [e_ab, e_uv] = δ_bu e_av - δ_va e_ub
          if (b == u) {
            auto h = g;
            h[j] = a * n + v;
            row[undigits(h, d)] += 1;
          }
          if (v == a) {
            auto h = g;
            h[j] = u * n + b;
            row[undigits(h, d)] -= 1;
          }
        }
        rows.push_back(std::move(row));
      }
  return total - rank_mod_p(std::move(rows));
}

/// Product over the cycles of sigma of tr(g_i g_{σ(i)} g_{σ²(i)} ...), by matrix products.
inline long trace_monomial(int n, const std::vector<std::size_t>& g, const std::vector<std::size_t>& sigma) {
  const std::size_t k = g.size();
  std::vector<bool> seen(k, false);
  long out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (seen[i]) continue;
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int r = 0; r < n; ++r) m[r][r] = 1;
    for (std::size_t j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      const std::size_t u = g[j] / n, v = g[j] % n;
      std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
      for (int r = 0; r < n; ++r) next[r][v] += m[r][u];
      m = std::move(next);
    }
    long tr = 0;
    for (int r = 0; r < n; ++r) tr += m[r][r];
    out *= tr;
  }
  return out;
}

}  // namespace oracle
