#include "cyclab/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "cyclab/errors.hpp"

namespace cyclab {

Echelon::Echelon(Index ambient, bool track) : ambient_(ambient), track_(track), pivot_row_(ambient, -1) {}

void Echelon::eliminate(SparseVector& v, SparseVector* tag) const {
  std::size_t pos = 0;
  while (pos < v.entries_.size()) {
    Index k = v.entries_[pos].index;
    long r = k < ambient_ ? pivot_row_[k] : -1;
    if (r < 0) {
      ++pos;
      continue;
    }
    Rational c = v.entries_[pos].value;
    v.axpy(-c, rows_[r]);
    if (tag) tag->axpy(c, tags_[r]);
  }
}

bool Echelon::insert(SparseVector v, SparseVector tag) {
  if (v.extent() > ambient_) throw ShapeError("vector outside echelon ambient space");
  SparseVector acc;
  eliminate(v, track_ ? &acc : nullptr);
  if (v.empty()) return false;
  Rational inv = 1 / v.entries_.front().value;
  Index lead = v.leading();
  pivot_row_[lead] = static_cast<long>(rows_.size());
  rows_.push_back(v.scaled(inv));
  if (track_) {
    tag.axpy(-1, acc);
    tags_.push_back(tag.scaled(inv));
  }
  return true;
}

SparseVector Echelon::reduce(SparseVector v) const {
  eliminate(v, nullptr);
  return v;
}

std::pair<SparseVector, SparseVector> Echelon::reduce_tracked(SparseVector v) const {
  SparseVector coeffs;
  eliminate(v, &coeffs);
  return {std::move(v), std::move(coeffs)};
}

std::vector<SparseVector> Echelon::reduced_basis() const {
  std::vector<Index> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return rows_[a].leading() < rows_[b].leading(); });
  std::vector<SparseVector> out(rows_.size());
  std::vector<long> reduced_at(ambient_, -1);
  for (std::size_t k = order.size(); k-- > 0;) {
    SparseVector row = rows_[order[k]];
    std::size_t pos = 1;
    while (pos < row.entries_.size()) {
      long r = reduced_at[row.entries_[pos].index];
      if (r < 0) {
        ++pos;
        continue;
      }
      Rational c = row.entries_[pos].value;
      row.axpy(-c, out[r]);
    }
    reduced_at[row.leading()] = static_cast<long>(k);
    out[k] = std::move(row);
  }
  return out;
}

Subspace::Subspace(Index ambient, const std::vector<SparseVector>& spanning) : ambient_(ambient) {
  Echelon ech(ambient);
  for (const auto& v : spanning) ech.insert(v);
  basis_ = ech.reduced_basis();
  pivots_.reserve(basis_.size());
  for (const auto& b : basis_) pivots_.push_back(b.leading());
}

Subspace Subspace::full(Index ambient) {
  Subspace s(ambient);
  for (Index i = 0; i < ambient; ++i) {
    s.basis_.push_back(SparseVector::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  Accumulator acc;
  acc.add(v);
  auto coords = coordinates(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) acc.add(basis_[i], -coords[i]);
  return acc.finish();
}

bool Subspace::contains(const SparseVector& v) const {
  if (v.extent() > ambient_) return false;
  return reduce(v).empty();
}

std::vector<Rational> Subspace::coordinates(const SparseVector& v) const {
  std::vector<Rational> out(basis_.size());
  std::size_t k = 0;
  for (const auto& e : v) {
    while (k < pivots_.size() && pivots_[k] < e.index) ++k;
    if (k == pivots_.size()) break;
    if (pivots_[k] == e.index) out[k] = e.value;
  }
  return out;
}

SparseMatrix Subspace::as_matrix() const { return SparseMatrix::from_columns(ambient_, basis_); }

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::size_t rank_block(Index rows, std::vector<const SparseVector*> cols) {
  std::stable_sort(cols.begin(), cols.end(),
                   [](const SparseVector* a, const SparseVector* b) { return a->nnz() < b->nnz(); });
  Echelon ech(rows);
  for (const auto* c : cols) {
    ech.insert(*c);
    if (ech.rank() == rows) break;
  }
  return ech.rank();
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Nodes 0..rows-1 are rows, rows..rows+cols-1 are columns.
  UnionFind uf(m.rows() + m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.col(j)) uf.unite(e.index, m.rows() + j);
  }
  std::vector<std::vector<const SparseVector*>> groups(m.rows() + m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    if (!m.col(j).empty()) groups[uf.find(m.rows() + j)].push_back(&m.col(j));
  }
  std::size_t total = 0;
  for (auto& g : groups) {
    if (g.empty()) continue;
    if (g.size() == 1) {
      total += 1;
      continue;
    }
    total += rank_block(m.rows(), std::move(g));
  }
  return total;
}

Subspace kernel_basis(const SparseMatrix& m) {
  Echelon ech(m.rows(), true);
  std::vector<SparseVector> kernel;
  for (Index j = 0; j < m.cols(); ++j) {
    if (m.col(j).empty()) {
      kernel.push_back(SparseVector::unit(j));
      continue;
    }
    auto [residual, coeffs] = ech.reduce_tracked(m.col(j));
    if (residual.empty()) {
      SparseVector k = SparseVector::unit(j);
      k.axpy(-1, coeffs);
      kernel.push_back(std::move(k));
    } else {
      ech.insert(m.col(j), SparseVector::unit(j));
    }
  }
  return Subspace(m.cols(), kernel);
}

Subspace image_basis(const SparseMatrix& m) { return Subspace(m.rows(), m.columns()); }

QuotientStructure quotient_structure(const Subspace& sub, Index ambient) {
  if (sub.ambient_dim() != ambient) {
    throw ShapeError("subspace lives in dimension " + std::to_string(sub.ambient_dim()) +
                     ", expected " + std::to_string(ambient));
  }
  QuotientStructure q;
  std::vector<long> free_pos(ambient, -1);
  std::vector<char> is_pivot(ambient, 0);
  for (Index p : sub.pivots()) is_pivot[p] = 1;
  for (Index i = 0; i < ambient; ++i) {
    if (!is_pivot[i]) {
      free_pos[i] = static_cast<long>(q.free_coordinates.size());
      q.free_coordinates.push_back(i);
    }
  }
  const Index qdim = q.free_coordinates.size();
  std::vector<SparseVector> proj(ambient);
  for (Index f = 0; f < qdim; ++f) proj[q.free_coordinates[f]] = SparseVector::unit(f);
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    std::vector<Entry> entries;
    for (const auto& e : sub.basis()[i]) {
      if (free_pos[e.index] >= 0) entries.push_back({static_cast<Index>(free_pos[e.index]), -e.value});
    }
    proj[sub.pivots()[i]] = SparseVector::from_entries(std::move(entries));
  }
  q.projection = SparseMatrix::from_columns(qdim, std::move(proj));
  std::vector<SparseVector> sec(qdim);
  for (Index f = 0; f < qdim; ++f) sec[f] = SparseVector::unit(q.free_coordinates[f]);
  q.section = SparseMatrix::from_columns(ambient, std::move(sec));
  return q;
}

bool is_invertible(const SparseMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

namespace {

Echelon column_solver(const SparseMatrix& m) {
  Echelon ech(m.rows(), true);
  for (Index j = 0; j < m.cols(); ++j) ech.insert(m.col(j), SparseVector::unit(j));
  return ech;
}

}  // namespace

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& rhs) {
  if (rhs.extent() > m.rows()) throw ShapeError("right-hand side longer than the matrix height");
  auto [residual, coeffs] = column_solver(m).reduce_tracked(rhs);
  if (!residual.empty()) return std::nullopt;
  return coeffs;
}

SparseMatrix inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  Echelon ech = column_solver(m);
  if (ech.rank() != m.rows()) throw ShapeError("inverse of a singular matrix");
  std::vector<SparseVector> cols;
  for (Index k = 0; k < m.rows(); ++k) cols.push_back(ech.reduce_tracked(SparseVector::unit(k)).second);
  return SparseMatrix::from_columns(m.rows(), std::move(cols));
}

}  // namespace cyclab
