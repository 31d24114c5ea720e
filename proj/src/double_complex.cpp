#include "cyclab/double_complex.hpp"

#include <algorithm>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"

namespace cyclab {

DoubleComplex::DoubleComplex(int max_p, int max_q) : max_p_(max_p), max_q_(max_q) {
  if (max_p < 0 || max_q < 0) throw ShapeError("double complex bounds must be non-negative");
  const std::size_t n = static_cast<std::size_t>(max_p + 1) * (max_q + 1);
  dims_.assign(n, 0);
  vert_.assign(n, SparseMatrix());
  horiz_.assign(n, SparseMatrix());
}

Index DoubleComplex::dim(int p, int q) const { return inside(p, q) ? dims_[slot(p, q)] : 0; }

void DoubleComplex::set_dim(int p, int q, Index d) {
  if (!inside(p, q)) throw ShapeError("spot outside the double complex");
  dims_[slot(p, q)] = d;
  for (auto [pp, qq] : {std::pair{p, q}, std::pair{p, q + 1}}) {
    if (inside(pp, qq)) vert_[slot(pp, qq)] = SparseMatrix(dim(pp, qq - 1), dim(pp, qq));
  }
  for (auto [pp, qq] : {std::pair{p, q}, std::pair{p + 1, q}}) {
    if (inside(pp, qq)) horiz_[slot(pp, qq)] = SparseMatrix(dim(pp - 1, qq), dim(pp, qq));
  }
}

const SparseMatrix& DoubleComplex::vert(int p, int q) const { return inside(p, q) ? vert_[slot(p, q)] : empty_; }
const SparseMatrix& DoubleComplex::horiz(int p, int q) const {
  return inside(p, q) ? horiz_[slot(p, q)] : empty_;
}

void DoubleComplex::set_vert(int p, int q, SparseMatrix m) {
  if (!inside(p, q) || q == 0) throw ShapeError("vertical map outside the double complex");
  if (m.rows() != dim(p, q - 1) || m.cols() != dim(p, q)) throw ShapeError("vertical map has wrong shape");
  vert_[slot(p, q)] = std::move(m);
}

void DoubleComplex::set_horiz(int p, int q, SparseMatrix m) {
  if (!inside(p, q) || p == 0) throw ShapeError("horizontal map outside the double complex");
  if (m.rows() != dim(p - 1, q) || m.cols() != dim(p, q)) throw ShapeError("horizontal map has wrong shape");
  horiz_[slot(p, q)] = std::move(m);
}

CheckReport DoubleComplex::verify() const {
  CheckReport r;
  r.check = "double_complex";
  auto where = [](int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
  for (int p = 0; p <= max_p_; ++p) {
    for (int q = 0; q <= max_q_; ++q) {
      if (q >= 2 && !(vert(p, q - 1) * vert(p, q)).is_zero()) r.fail("vertical d^2 != 0 at " + where(p, q));
      if (p >= 2 && !(horiz(p - 1, q) * horiz(p, q)).is_zero()) r.fail("horizontal d^2 != 0 at " + where(p, q));
      if (p >= 1 && q >= 1) {
        SparseMatrix s = vert(p - 1, q) * horiz(p, q) + horiz(p, q - 1) * vert(p, q);
        if (!s.is_zero()) r.fail("square does not anticommute at " + where(p, q));
      }
    }
  }
  return r;
}

std::vector<Index> total_offsets(const DoubleComplex& dc, int n) {
  std::vector<Index> off(n + 2, 0);
  for (int p = 0; p <= n; ++p) off[p + 1] = off[p] + dc.dim(p, n - p);
  return off;
}

namespace {

ChainComplex grid_total(const DoubleComplex& dc, int top, bool bounded) {
  std::vector<std::vector<Index>> off(top + 1);
  std::vector<Index> dims(top + 1);
  for (int n = 0; n <= top; ++n) {
    off[n] = total_offsets(dc, n);
    dims[n] = off[n].back();
  }
  std::vector<SparseMatrix> diffs(top);
  parallel_for(top, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    MatrixBuilder mb(dims[n - 1], dims[n]);
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      if (dc.dim(p, q) == 0) continue;
      if (q >= 1) mb.add_block(dc.vert(p, q), off[n - 1][p], off[n][p]);
      if (p >= 1) mb.add_block(dc.horiz(p, q), off[n - 1][p - 1], off[n][p]);
    }
    diffs[i] = mb.build();
  });
  return ChainComplex(std::move(dims), std::move(diffs), bounded);
}

}  // namespace

ChainComplex total_complex(const DoubleComplex& dc) {
  auto check = dc.verify();
  if (!check.verdict) throw InvariantViolation(check.details.front());
  const int grid_top = dc.max_p() + dc.max_q();
  if (auto c = dc.complete_through()) return grid_total(dc, std::min(*c, grid_top), false);
  return grid_total(dc, grid_top, true);
}

namespace {

struct Cell {
  Subspace z;
  std::size_t dim = 0;
  std::vector<SparseVector> reps;
  std::shared_ptr<Echelon> solver;
};

class FiltrationEngine {
 public:
  explicit FiltrationEngine(const DoubleComplex& dc)
      : dc_(dc), top_(dc.max_p() + dc.max_q()), tot_(grid_total(dc, top_, true)) {
    for (int n = 0; n <= top_ + 1; ++n) off_.push_back(total_offsets(dc, n));
  }

  int top() const { return top_; }
  const ChainComplex& tot() const { return tot_; }

  /// Coordinates of Tot_n lying in columns <= p.
  Index prefix(int n, int p) const {
    if (n < 0 || n > top_ || p < 0) return 0;
    return off_[n][std::min(p, n) + 1];
  }

  Subspace z(int r, int n, int p) const {
    const Index end = prefix(n, p);
    const Index dim = tot_.dim(n);
    if (r <= 0 || n == 0) return basis_prefix(dim, end, n);
    const SparseMatrix& d = tot_.d(n);
    const Index row_begin = prefix(n - 1, p - r);
    SparseMatrix sub = d.column_range(0, end).row_range(row_begin, d.rows());
    Subspace k = kernel_basis(sub);
    return Subspace(dim, k.basis());
  }

  Cell cell(int r, int n, int p) const {
    Cell c;
    c.z = z(r, n, p);
    std::vector<SparseVector> denom = z(r - 1, n, p - 1).basis();
    if (n + 1 <= top_) {
      const Subspace src = z(r - 1, n + 1, p + r - 1);
      for (const auto& x : src.basis()) {
        SparseVector y = tot_.d(n + 1).apply(x);
        if (!y.empty()) denom.push_back(std::move(y));
      }
    }
    c.solver = std::make_shared<Echelon>(tot_.dim(n), true);
    for (const auto& v : denom) c.solver->insert(v);
    for (const auto& v : c.z.basis()) {
      if (c.solver->insert(v, SparseVector::unit(c.reps.size()))) c.reps.push_back(v);
    }
    c.dim = c.reps.size();
    return c;
  }

  /// Rank of d^r out of the cell `src` at (n,p) into `dst` at (n-1,p-r).
  std::size_t d_rank(const Cell& src, const Cell& dst, int n) const {
    if (src.dim == 0 || dst.dim == 0) return 0;
    std::vector<SparseVector> cols;
    for (const auto& x : src.reps) {
      auto [res, coeffs] = dst.solver->reduce_tracked(tot_.d(n).apply(x));
      if (!res.empty()) throw InvariantViolation("page differential leaves the filtration");
      cols.push_back(std::move(coeffs));
    }
    return rank(SparseMatrix::from_columns(dst.dim, std::move(cols)));
  }

 private:
  static Subspace basis_prefix(Index dim, Index end, int) {
    std::vector<SparseVector> units;
    for (Index i = 0; i < end; ++i) units.push_back(SparseVector::unit(i));
    return Subspace(dim, units);
  }

  const DoubleComplex& dc_;
  int top_;
  ChainComplex tot_;
  std::vector<std::vector<Index>> off_;
};

}  // namespace

int stable_page(const DoubleComplex& dc) { return std::max(dc.max_p(), dc.max_q()) + 2; }

std::vector<SpectralPage> spectral_sequence(const DoubleComplex& dc, int max_page) {
  auto check = dc.verify();
  if (!check.verdict) throw InvariantViolation(check.details.front());
  if (max_page < 0) throw ShapeError("negative page index");
  FiltrationEngine eng(dc);
  const int P = dc.max_p();
  const int Q = dc.max_q();
  std::vector<SpectralPage> pages;
  for (int r = 0; r <= max_page + 1; ++r) {
    // cells[p][q] for page r
    std::vector<std::vector<Cell>> cells(P + 1, std::vector<Cell>(Q + 1));
    parallel_for(static_cast<std::size_t>(P + 1) * (Q + 1), [&](std::size_t i) {
      const int p = static_cast<int>(i) / (Q + 1);
      const int q = static_cast<int>(i) % (Q + 1);
      cells[p][q] = eng.cell(r, p + q, p);
    });
    SpectralPage page;
    page.r = r;
    page.dims.assign(P + 1, std::vector<std::size_t>(Q + 1, 0));
    page.d_rank.assign(P + 1, std::vector<std::size_t>(Q + 1, 0));
    for (int p = 0; p <= P; ++p) {
      for (int q = 0; q <= Q; ++q) page.dims[p][q] = cells[p][q].dim;
    }
    if (r == 0) {
      for (int p = 0; p <= P; ++p) {
        for (int q = 0; q <= Q; ++q) {
          if (page.dims[p][q] != dc.dim(p, q)) throw InvariantViolation("E^0 differs from the double complex");
        }
      }
    }
    parallel_for(static_cast<std::size_t>(P + 1) * (Q + 1), [&](std::size_t i) {
      const int p = static_cast<int>(i) / (Q + 1);
      const int q = static_cast<int>(i) % (Q + 1);
      const int tp = p - r;
      const int tq = q + r - 1;
      if (tp < 0 || tq < 0 || tq > Q || p + q == 0) return;
      page.d_rank[p][q] = eng.d_rank(cells[p][q], cells[tp][tq], p + q);
    });
    if (!pages.empty()) {
      const auto& prev = pages.back();
      const int pr = prev.r;
      for (int p = 0; p <= P; ++p) {
        for (int q = 0; q <= Q; ++q) {
          std::size_t expect = prev.dims[p][q] - prev.d_rank[p][q];
          const int sp = p + pr;
          const int sq = q - pr + 1;
          if (sp <= P && sq >= 0 && sq <= Q) expect -= prev.d_rank[sp][sq];
          if (expect != page.dims[p][q]) {
            throw InvariantViolation("E^" + std::to_string(r) + " at (" + std::to_string(p) + "," +
                                     std::to_string(q) + ") is not the homology of the previous page");
          }
        }
      }
    }
    pages.push_back(std::move(page));
  }
  pages.pop_back();
  return pages;
}

CheckReport convergence_check(const DoubleComplex& dc) {
  CheckReport r;
  r.check = "spectral_convergence";
  r.params = {{"max_p", dc.max_p()}, {"max_q", dc.max_q()}};
  const int rinf = stable_page(dc);
  auto pages = spectral_sequence(dc, rinf);
  const auto& inf = pages.back();
  for (const auto& row : inf.d_rank) {
    for (auto k : row) {
      if (k != 0) r.fail("differential on the limiting page is nonzero");
    }
  }
  FiltrationEngine eng(dc);
  auto h = homology(eng.tot(), {false});
  for (int n = 0; n <= eng.top(); ++n) {
    long long sum = 0;
    for (int p = 0; p <= std::min(n, dc.max_p()); ++p) {
      if (n - p <= dc.max_q()) sum += static_cast<long long>(inf.dims[p][n - p]);
    }
    r.lhs_dims.push_back(sum);
    r.rhs_dims.push_back(static_cast<long long>(h.betti[n]));
    if (sum != static_cast<long long>(h.betti[n])) {
      r.fail("total degree " + std::to_string(n) + ": E^inf sum " + std::to_string(sum) + " != betti " +
             std::to_string(h.betti[n]));
    }
  }
  return r;
}

int xi_shape(int n, int k) {
  const int parity = ((k - n) % 2 + 2) % 2;
  return std::min(k, n + parity);
}

CheckReport xi_check(int n, int max_k) {
  CheckReport r;
  r.check = "xi";
  r.params = {{"n", n}, {"max_k", max_k}};
  if (n < 0 || max_k < 0) throw ShapeError("xi needs n, max_k >= 0");
  for (int k = 0; k <= max_k; ++k) {
    r.lhs_dims.push_back(xi_shape(n, k));
    long long expect = k <= n + 1 ? k : (k - n) % 2 == 0 ? n : n + 1;
    r.rhs_dims.push_back(expect);
  }
  if (r.lhs_dims != r.rhs_dims) r.fail("xi sequence leaves the expected shape");
  return r;
}

}  // namespace cyclab
