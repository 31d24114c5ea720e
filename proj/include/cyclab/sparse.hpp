#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclab/rational.hpp"

namespace cyclab {

using Index = std::size_t;

struct Entry {
  Index index;
  Rational value;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

/// Sparse vector over Q: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  /// Accepts entries in any order; duplicates are summed and zeros dropped.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector unit(Index i, const Rational& value = 1);

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Entry& operator[](std::size_t pos) const { return entries_[pos]; }

  Rational at(Index i) const;
  /// Smallest index with a nonzero entry. Precondition: !empty().
  Index leading() const { return entries_.front().index; }
  /// One past the largest stored index (0 when empty).
  Index extent() const { return entries_.empty() ? 0 : entries_.back().index + 1; }

  /// this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  SparseVector scaled(const Rational& factor) const;
  /// Reindex through `map`; map[i] must be strictly increasing on the support.
  SparseVector remapped(const std::vector<Index>& map) const;
  /// Entries with index in [begin, end), shifted down by `begin`.
  SparseVector slice(Index begin, Index end) const;
  SparseVector shifted(Index offset) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }
  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);

 private:
  friend class Echelon;
  std::vector<Entry> entries_;
};

/// Collects (index, value) pairs and emits a canonical SparseVector.
class Accumulator {
 public:
  void add(Index i, const Rational& v) {
    if (!is_zero(v)) raw_.push_back({i, v});
  }
  void add(const SparseVector& v, const Rational& factor = 1);
  SparseVector finish() { return SparseVector::from_entries(std::move(raw_)); }

 private:
  std::vector<Entry> raw_;
};

struct Triplet {
  Index row;
  Index col;
  Rational value;
};

/// Column-major sparse matrix over Q.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols);
  /// Columns must have every index below `rows`.
  static SparseMatrix from_columns(Index rows, std::vector<SparseVector> columns);
  static SparseMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> triplets);
  static SparseMatrix identity(Index n);
  static SparseMatrix zero(Index rows, Index cols) { return SparseMatrix(rows, cols); }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t nnz() const;
  const SparseVector& col(Index j) const { return columns_[j]; }
  const std::vector<SparseVector>& columns() const { return columns_; }
  Rational at(Index r, Index c) const { return columns_[c].at(r); }

  bool is_zero() const;
  /// First nonzero entry in column-major order.
  std::optional<Triplet> first_nonzero() const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  SparseMatrix scaled(const Rational& factor) const;
  /// Columns [begin, end).
  SparseMatrix column_range(Index begin, Index end) const;
  /// Rows [begin, end), shifted.
  SparseMatrix row_range(Index begin, Index end) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<SparseVector> columns_;
};

/// Horizontal concatenation [a | b | ...]; all blocks share the row count.
SparseMatrix hstack(const std::vector<SparseMatrix>& blocks, Index rows);

/// Incremental builder for block matrices.
class MatrixBuilder {
 public:
  MatrixBuilder(Index rows, Index cols);
  void add(Index r, Index c, const Rational& v);
  /// Adds `block` with its (0,0) entry at (row_offset, col_offset).
  void add_block(const SparseMatrix& block, Index row_offset, Index col_offset,
                 const Rational& factor = 1);
  void add_column(Index c, const SparseVector& v, Index row_offset = 0,
                  const Rational& factor = 1);
  SparseMatrix build();

 private:
  Index rows_;
  Index cols_;
  std::vector<std::vector<Entry>> raw_;
};

}  // namespace cyclab
