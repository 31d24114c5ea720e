#include "cyclab/complex.hpp"

#include <algorithm>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"

namespace cyclab {

ChainComplex::ChainComplex(std::vector<Index> dims, std::vector<SparseMatrix> diffs, bool bounded)
    : dims_(std::move(dims)), diffs_(std::move(diffs)), bounded_(bounded) {
  if (dims_.empty()) throw ShapeError("chain complex without degree 0");
  if (diffs_.size() + 1 != dims_.size()) {
    throw ShapeError("chain complex has " + std::to_string(dims_.size()) + " degrees but " +
                     std::to_string(diffs_.size()) + " differentials");
  }
  for (std::size_t n = 1; n < dims_.size(); ++n) {
    const auto& m = diffs_[n - 1];
    if (m.rows() != dims_[n - 1] || m.cols() != dims_[n]) {
      throw ShapeError("d_" + std::to_string(n) + " is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(dims_[n - 1]) + "x" +
                       std::to_string(dims_[n]));
    }
  }
}

Index ChainComplex::dim(int n) const {
  if (n < 0 || n > top()) return 0;
  return dims_[n];
}

SparseMatrix ChainComplex::differential(int n) const {
  if (n >= 1 && n <= top()) return diffs_[n - 1];
  return SparseMatrix(n >= 1 ? dim(n - 1) : 0, dim(n));
}

ChainComplex truncate(const ChainComplex& c, int max_degree) {
  if (max_degree >= c.top()) return c;
  if (max_degree < 0) throw ShapeError("negative truncation degree");
  std::vector<Index> dims(c.dims().begin(), c.dims().begin() + max_degree + 1);
  std::vector<SparseMatrix> diffs;
  for (int n = 1; n <= max_degree; ++n) diffs.push_back(c.d(n));
  return ChainComplex(std::move(dims), std::move(diffs), false);
}

CheckReport verify_complex(const ChainComplex& c) {
  CheckReport r;
  r.check = "d_squared";
  for (int n = 2; n <= c.top(); ++n) {
    SparseMatrix dd = c.d(n - 1) * c.d(n);
    auto t = dd.first_nonzero();
    r.lhs_dims.push_back(static_cast<long long>(dd.nnz()));
    if (t) {
      r.fail("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " has entry " + to_string(t->value) +
             " at (" + std::to_string(t->row) + "," + std::to_string(t->col) + ")");
      return r;
    }
  }
  return r;
}

void require_complex(const ChainComplex& c, const std::string& what) {
  auto r = verify_complex(c);
  if (!r.verdict) throw InvariantViolation(what + ": " + r.details.front());
}

std::vector<Rational> HomologyResult::class_coordinates(int n, const SparseVector& z) const {
  if (!has_reps) throw Error("homology was computed without representatives");
  auto [residual, coeffs] = class_solver[n]->reduce_tracked(z);
  if (!residual.empty()) throw InvariantViolation("vector in degree " + std::to_string(n) + " is not a cycle");
  std::vector<Rational> out(betti[n]);
  for (const auto& e : coeffs) out[e.index] = e.value;
  return out;
}

std::vector<std::size_t> HomologyResult::reliable_betti() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < betti.size() && reliable[n]; ++n) out.push_back(betti[n]);
  return out;
}

HomologyResult homology(const ChainComplex& c, HomologyOptions opts) {
  const int top = c.top();
  HomologyResult h;
  h.betti.assign(top + 1, 0);
  h.reliable.assign(top + 1, true);
  if (!c.bounded()) h.reliable[top] = false;
  if (!opts.representatives) {
    std::vector<std::size_t> ranks(top + 2, 0);
    parallel_for(top, [&](std::size_t i) { ranks[i + 1] = rank(c.d(static_cast<int>(i) + 1)); });
    for (int n = 0; n <= top; ++n) h.betti[n] = c.dim(n) - ranks[n] - ranks[n + 1];
    return h;
  }
  h.has_reps = true;
  h.cycle_reps.resize(top + 1);
  h.boundaries.resize(top + 1);
  h.class_solver.resize(top + 1);
  parallel_for(top + 1, [&](std::size_t i) {
    const int n = static_cast<int>(i);
    const Index dim = c.dim(n);
    Subspace cycles = n == 0 ? Subspace::full(dim) : kernel_basis(c.d(n));
    Subspace bounds = n < top ? image_basis(c.d(n + 1)) : Subspace(dim);
    auto solver = std::make_shared<Echelon>(dim, true);
    for (const auto& b : bounds.basis()) solver->insert(b);
    std::vector<SparseVector> reps;
    for (const auto& z : cycles.basis()) {
      if (solver->insert(z, SparseVector::unit(reps.size()))) reps.push_back(z);
    }
    h.betti[n] = reps.size();
    h.cycle_reps[n] = std::move(reps);
    h.boundaries[n] = std::move(bounds);
    h.class_solver[n] = std::move(solver);
  });
  return h;
}

ChainMap identity_map(std::shared_ptr<const ChainComplex> c) {
  ChainMap f;
  f.source = c;
  f.target = c;
  for (int n = 0; n <= c->top(); ++n) f.components.push_back(SparseMatrix::identity(c->dim(n)));
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.target != g.source && !(f.target && g.source && f.target->dims() == g.source->dims())) {
    throw ShapeError("composed chain maps do not meet");
  }
  ChainMap out;
  out.source = f.source;
  out.target = g.target;
  const int top = std::min(f.top(), g.top());
  for (int n = 0; n <= top; ++n) out.components.push_back(g.components[n] * f.components[n]);
  return out;
}

CheckReport verify_chain_map(const ChainMap& f) {
  CheckReport r;
  r.check = "chain_map";
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (int n = 0; n <= f.top(); ++n) {
    const auto& m = f.components[n];
    if (m.rows() != t.dim(n) || m.cols() != s.dim(n)) {
      r.fail("component " + std::to_string(n) + " has wrong shape");
      return r;
    }
  }
  for (int n = 1; n <= f.top(); ++n) {
    SparseMatrix lhs = t.differential(n) * f.components[n];
    SparseMatrix rhs = f.components[n - 1] * s.differential(n);
    SparseMatrix diff = lhs - rhs;
    if (auto e = diff.first_nonzero()) {
      r.fail("d f_" + std::to_string(n) + " - f_" + std::to_string(n - 1) + " d differs by " +
             to_string(e->value) + " at (" + std::to_string(e->row) + "," + std::to_string(e->col) + ")");
      return r;
    }
  }
  return r;
}

InducedMap induced_map_on_homology(const ChainMap& f) {
  auto check = verify_chain_map(f);
  if (!check.verdict) throw InvariantViolation(check.details.front());
  return induced_map_on_homology(f, homology(*f.source), homology(*f.target));
}

InducedMap induced_map_on_homology(const ChainMap& f, const HomologyResult& hs, const HomologyResult& ht) {
  InducedMap out;
  int top = f.top();
  top = std::min(top, static_cast<int>(hs.reliable_betti().size()) - 1);
  top = std::min(top, static_cast<int>(ht.reliable_betti().size()) - 1);
  out.top = top;
  out.matrices.resize(std::max(top + 1, 0));
  out.quasi_iso.resize(std::max(top + 1, 0));
  parallel_for(out.matrices.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i);
    std::vector<SparseVector> cols;
    for (const auto& z : hs.cycle_reps[n]) {
      auto coords = ht.class_coordinates(n, f.components[n].apply(z));
      std::vector<Entry> entries;
      for (Index k = 0; k < coords.size(); ++k) {
        if (!is_zero(coords[k])) entries.push_back({k, coords[k]});
      }
      cols.push_back(SparseVector::from_entries(std::move(entries)));
    }
    out.matrices[n] = SparseMatrix::from_columns(ht.betti[n], std::move(cols));
    out.quasi_iso[n] = is_invertible(out.matrices[n]);
  });
  return out;
}

ChainComplex tensor_complexes(const ChainComplex& a, const ChainComplex& b) {
  int top = a.top() + b.top();
  bool bounded = a.bounded() && b.bounded();
  if (!a.bounded()) top = std::min(top, a.top());
  if (!b.bounded()) top = std::min(top, b.top());
  // offset[n][p]: start of block a_p ⊗ b_{n-p} inside degree n.
  std::vector<std::vector<Index>> offset(top + 1);
  std::vector<Index> dims(top + 1, 0);
  for (int n = 0; n <= top; ++n) {
    offset[n].assign(n + 2, 0);
    for (int p = 0; p <= n; ++p) offset[n][p + 1] = offset[n][p] + a.dim(p) * b.dim(n - p);
    dims[n] = offset[n][n + 1];
  }
  check_resource(*std::max_element(dims.begin(), dims.end()), "tensor product");
  std::vector<SparseMatrix> diffs(top);
  parallel_for(top, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    MatrixBuilder mb(dims[n - 1], dims[n]);
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const Index db = b.dim(q);
      if (a.dim(p) == 0 || db == 0) continue;
      for (Index x = 0; x < a.dim(p); ++x) {
        for (Index y = 0; y < db; ++y) {
          const Index col = offset[n][p] + x * db + y;
          if (p >= 1) {
            const Index db_out = b.dim(q);
            for (const auto& e : a.d(p).col(x)) mb.add(offset[n - 1][p - 1] + e.index * db_out + y, col, e.value);
          }
          if (q >= 1) {
            const Index db_out = b.dim(q - 1);
            const Rational sign = p % 2 == 0 ? 1 : -1;
            for (const auto& e : b.d(q).col(y)) mb.add(offset[n - 1][p] + x * db_out + e.index, col, sign * e.value);
          }
        }
      }
    }
    diffs[i] = mb.build();
  });
  return ChainComplex(std::move(dims), std::move(diffs), bounded);
}

CheckReport kunneth_check(const ChainComplex& a, const ChainComplex& b) {
  CheckReport r;
  r.check = "kunneth";
  auto ha = homology(a, {false});
  auto hb = homology(b, {false});
  auto prod = tensor_complexes(a, b);
  auto dsq = verify_complex(prod);
  r.absorb(dsq);
  auto hp = homology(prod, {false});
  auto lhs = hp.reliable_betti();
  for (std::size_t n = 0; n < lhs.size(); ++n) {
    long long conv = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      if (p >= ha.betti.size() || n - p >= hb.betti.size()) continue;
      conv += static_cast<long long>(ha.betti[p] * hb.betti[n - p]);
    }
    r.lhs_dims.push_back(static_cast<long long>(lhs[n]));
    r.rhs_dims.push_back(conv);
    if (lhs[n] != static_cast<std::size_t>(conv)) {
      r.fail("degree " + std::to_string(n) + ": " + std::to_string(lhs[n]) + " != " + std::to_string(conv));
    }
  }
  return r;
}

CheckReport euler_check(const ChainComplex& c, const HomologyResult& h) {
  CheckReport r;
  r.check = "euler";
  if (!c.bounded()) {
    r.fail("complex is truncated");
    return r;
  }
  long long chi_c = 0;
  long long chi_h = 0;
  for (int n = 0; n <= c.top(); ++n) {
    long long s = n % 2 == 0 ? 1 : -1;
    chi_c += s * static_cast<long long>(c.dim(n));
    chi_h += s * static_cast<long long>(h.betti[n]);
  }
  r.lhs_dims = {chi_c};
  r.rhs_dims = {chi_h};
  if (chi_c != chi_h) r.fail("chain Euler characteristic differs from homological one");
  return r;
}

}  // namespace cyclab
