#pragma once

#include <cstddef>
#include <functional>

#include "cyclab/sparse.hpp"

namespace cyclab {

/// Worker count used by parallel_for; 0 selects the hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, n). Every index is processed exactly once and
/// bodies must only write to per-index state, so results do not depend on
/// the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// rows x cols matrix whose column x is column(x), built in parallel.
template <class F>
SparseMatrix build_columns(Index rows, Index cols, F column) {
  std::vector<SparseVector> out(cols);
  parallel_for(cols, [&](std::size_t x) { out[x] = column(x); });
  return SparseMatrix::from_columns(rows, std::move(out));
}

}  // namespace cyclab
