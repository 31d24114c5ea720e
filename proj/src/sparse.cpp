#include "cyclab/sparse.hpp"

#include <algorithm>

#include "cyclab/errors.hpp"

namespace cyclab {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value += e.value;
      if (is_zero(out.entries_.back().value)) out.entries_.pop_back();
    } else if (!is_zero(e.value)) {
      out.entries_.push_back(std::move(e));
    }
  }
  return out;
}

SparseVector SparseVector::unit(Index i, const Rational& value) {
  SparseVector v;
  if (!is_zero(value)) v.entries_.push_back({i, value});
  return v;
}

Rational SparseVector::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return 0;
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (is_zero(factor) || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back({b->index, factor * b->value});
      ++b;
    } else {
      Rational s = a->value + factor * b->value;
      if (!is_zero(s)) merged.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Rational& factor) const {
  SparseVector out;
  if (is_zero(factor)) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({e.index, e.value * factor});
  return out;
}

SparseVector SparseVector::remapped(const std::vector<Index>& map) const {
  SparseVector out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({map[e.index], e.value});
  return out;
}

SparseVector SparseVector::slice(Index begin, Index end) const {
  SparseVector out;
  for (const auto& e : entries_) {
    if (e.index >= begin && e.index < end) out.entries_.push_back({e.index - begin, e.value});
  }
  return out;
}

SparseVector SparseVector::shifted(Index offset) const {
  SparseVector out = *this;
  for (auto& e : out.entries_) e.index += offset;
  return out;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  out.axpy(1, b);
  return out;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  out.axpy(-1, b);
  return out;
}

void Accumulator::add(const SparseVector& v, const Rational& factor) {
  if (is_zero(factor)) return;
  for (const auto& e : v) raw_.push_back({e.index, e.value * factor});
}

SparseMatrix::SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix SparseMatrix::from_columns(Index rows, std::vector<SparseVector> columns) {
  SparseMatrix m(rows, columns.size());
  for (Index j = 0; j < columns.size(); ++j) {
    if (columns[j].extent() > rows) throw ShapeError("column entry outside row range");
  }
  m.columns_ = std::move(columns);
  return m;
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> triplets) {
  MatrixBuilder b(rows, cols);
  for (auto& t : triplets) b.add(t.row, t.col, t.value);
  return b.build();
}

SparseMatrix SparseMatrix::identity(Index n) {
  SparseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i);
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.nnz();
  return total;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

std::optional<Triplet> SparseMatrix::first_nonzero() const {
  for (Index j = 0; j < cols_; ++j) {
    if (!columns_[j].empty()) return Triplet{columns_[j][0].index, j, columns_[j][0].value};
  }
  return std::nullopt;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<Entry>> rows(rows_);
  for (Index j = 0; j < cols_; ++j) {
    for (const auto& e : columns_[j]) rows[e.index].push_back({j, e.value});
  }
  SparseMatrix t(cols_, rows_);
  for (Index i = 0; i < rows_; ++i) t.columns_[i] = SparseVector::from_entries(std::move(rows[i]));
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  Accumulator acc;
  for (const auto& e : v) {
    if (e.index >= cols_) throw ShapeError("vector longer than matrix width");
    acc.add(columns_[e.index], e.value);
  }
  return acc.finish();
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const {
  SparseMatrix out(rows_, cols_);
  for (Index j = 0; j < cols_; ++j) out.columns_[j] = columns_[j].scaled(factor);
  return out;
}

SparseMatrix SparseMatrix::column_range(Index begin, Index end) const {
  SparseMatrix out(rows_, end - begin);
  for (Index j = begin; j < end; ++j) out.columns_[j - begin] = columns_[j];
  return out;
}

SparseMatrix SparseMatrix::row_range(Index begin, Index end) const {
  SparseMatrix out(end - begin, cols_);
  for (Index j = 0; j < cols_; ++j) out.columns_[j] = columns_[j].slice(begin, end);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeError("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  SparseMatrix out(a.rows_, b.cols_);
  for (Index j = 0; j < b.cols_; ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("sum of differently shaped matrices");
  SparseMatrix out = a;
  for (Index j = 0; j < a.cols_; ++j) out.columns_[j].axpy(1, b.columns_[j]);
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("difference of differently shaped matrices");
  SparseMatrix out = a;
  for (Index j = 0; j < a.cols_; ++j) out.columns_[j].axpy(-1, b.columns_[j]);
  return out;
}

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks, Index rows) {
  std::vector<SparseVector> cols;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeError("hstack row mismatch");
    for (const auto& c : b.columns()) cols.push_back(c);
  }
  return SparseMatrix::from_columns(rows, std::move(cols));
}

MatrixBuilder::MatrixBuilder(Index rows, Index cols) : rows_(rows), cols_(cols), raw_(cols) {}

void MatrixBuilder::add(Index r, Index c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw ShapeError("builder entry out of range");
  if (!is_zero(v)) raw_[c].push_back({r, v});
}

void MatrixBuilder::add_block(const SparseMatrix& block, Index row_offset, Index col_offset,
                              const Rational& factor) {
  if (row_offset + block.rows() > rows_ || col_offset + block.cols() > cols_) {
    throw ShapeError("block does not fit");
  }
  for (Index j = 0; j < block.cols(); ++j) add_column(col_offset + j, block.col(j), row_offset, factor);
}

void MatrixBuilder::add_column(Index c, const SparseVector& v, Index row_offset, const Rational& factor) {
  if (is_zero(factor)) return;
  for (const auto& e : v) add(row_offset + e.index, c, e.value * factor);
}

SparseMatrix MatrixBuilder::build() {
  std::vector<SparseVector> cols(cols_);
  for (Index j = 0; j < cols_; ++j) cols[j] = SparseVector::from_entries(std::move(raw_[j]));
  raw_.assign(cols_, {});
  return SparseMatrix::from_columns(rows_, std::move(cols));
}

}  // namespace cyclab
