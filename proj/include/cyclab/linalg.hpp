#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclab/sparse.hpp"

namespace cyclab {

/// Incremental row-echelon form over Q.
///
/// Rows are kept with leading coefficient 1 and pairwise distinct leading
/// indices. When tracking is enabled every stored row carries a tag vector
/// recording it as a combination of the inserted vectors' tags, so that
/// `reduce` can report coordinates with respect to the inserted family.
class Echelon {
 public:
  explicit Echelon(Index ambient, bool track = false);

  Index ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Inserts v; returns true when v was independent of the current span.
  bool insert(SparseVector v, SparseVector tag = {});

  /// Residual of v modulo the span; zero iff v lies in the span.
  SparseVector reduce(SparseVector v) const;

  /// Residual and the tag combination c with v = residual + sum(c_i * input_i).
  std::pair<SparseVector, SparseVector> reduce_tracked(SparseVector v) const;

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Canonical reduced row echelon basis, sorted by pivot index.
  std::vector<SparseVector> reduced_basis() const;

 private:
  void eliminate(SparseVector& v, SparseVector* tag) const;

  Index ambient_;
  bool track_;
  std::vector<SparseVector> rows_;
  std::vector<SparseVector> tags_;
  std::vector<long> pivot_row_;
};

/// A subspace of Q^ambient held in canonical reduced row echelon form:
/// two subspaces are equal iff their bases compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient) {}
  Subspace(Index ambient, const std::vector<SparseVector>& spanning);

  static Subspace full(Index ambient);

  Index ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const SparseVector& v) const;
  /// Residual of v after clearing every pivot coordinate.
  SparseVector reduce(const SparseVector& v) const;
  /// Coordinates of v (which must lie in the subspace) in the echelon basis.
  std::vector<Rational> coordinates(const SparseVector& v) const;
  /// Matrix whose columns are the basis vectors.
  SparseMatrix as_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<Index> pivots_;
};

/// Exact rank over Q. Independent blocks of the row/column incidence graph
/// are eliminated separately, sparsest columns first.
std::size_t rank(const SparseMatrix& m);

/// Canonical echelon basis of ker(m) inside Q^cols.
Subspace kernel_basis(const SparseMatrix& m);

/// Canonical echelon basis of the column space inside Q^rows.
Subspace image_basis(const SparseMatrix& m);

struct QuotientStructure {
  /// (ambient - dim sub) x ambient, kernel exactly `sub`.
  SparseMatrix projection;
  /// ambient x (ambient - dim sub), projection * section = identity.
  SparseMatrix section;
  /// Ambient coordinate represented by each quotient basis vector.
  std::vector<Index> free_coordinates;
};

/// Quotient Q^ambient / sub. The quotient basis is indexed by the non-pivot
/// coordinates of sub's echelon form; the section sends each quotient basis
/// vector to the corresponding unit vector. Throws ShapeError when
/// sub.ambient_dim() != ambient.
QuotientStructure quotient_structure(const Subspace& sub, Index ambient);

/// True when m is square and invertible.
bool is_invertible(const SparseMatrix& m);

/// Some x with m x = rhs, or nothing when rhs is outside the column space.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& rhs);

/// Inverse of a square invertible matrix; throws ShapeError otherwise.
SparseMatrix inverse(const SparseMatrix& m);

}  // namespace cyclab
