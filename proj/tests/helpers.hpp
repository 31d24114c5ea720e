#pragma once

#include <initializer_list>
#include <vector>

#include "cyclab/algebra.hpp"
#include "cyclab/sparse.hpp"
#include "oracle.hpp"

namespace testing_helpers {

inline cyclab::SparseMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  cyclab::MatrixBuilder b(r, c);
  std::size_t i = 0;
  for (auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) b.add(i, j++, v);
    ++i;
  }
  return b.build();
}

inline cyclab::SparseVector vec(std::initializer_list<long> entries) {
  std::vector<cyclab::Entry> e;
  cyclab::Index i = 0;
  for (long v : entries) e.push_back({i++, v});
  return cyclab::SparseVector::from_entries(std::move(e));
}

inline oracle::Dense dense(const cyclab::SparseMatrix& m) {
  auto d = oracle::zeros(m.rows(), m.cols());
  for (cyclab::Index j = 0; j < m.cols(); ++j)
    for (const auto& e : m.col(j)) d[e.index][j] = e.value;
  return d;
}

/// Structure constants of `a` in the oracle's layout.
inline oracle::Table table_of(const cyclab::Algebra& a) {
  const std::size_t d = a.dim();
  oracle::Table mu(d, std::vector<std::vector<mpq_class>>(d, std::vector<mpq_class>(d, 0)));
  for (const auto& s : a.table()) mu[s.i][s.j][s.k] = s.value;
  return mu;
}

}  // namespace testing_helpers
