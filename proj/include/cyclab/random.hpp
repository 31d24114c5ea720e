#pragma once

#include <cstdint>
#include <random>

#include "cyclab/double_complex.hpp"

namespace cyclab {

/// Seeded generator with a portable bounded draw, so a seed yields the same
/// objects on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi].
  long between(long lo, long hi);
  /// Nonzero integer in [-bound, bound].
  long nonzero(long bound);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Random invertible n x n integer matrix and its inverse.
std::pair<SparseMatrix, SparseMatrix> random_invertible(Rng& rng, Index n);

/// Random bounded complex in degrees 0..top with dims <= max_dim; each d_{n+1}
/// has columns drawn from ker d_n.
ChainComplex random_chain_complex(Rng& rng, int top, Index max_dim);

/// Random first-quadrant double complex within bounds: a direct sum of dots,
/// squares and zigzags, followed by a random change of basis in every spot.
DoubleComplex random_double_complex(Rng& rng, int max_p, int max_q, Index max_dim);

}  // namespace cyclab
