#pragma once

#include <optional>
#include <vector>

#include "cyclab/complex.hpp"

namespace cyclab {

/// First-quadrant double complex on spots 0 <= p <= max_p, 0 <= q <= max_q.
///
/// vert(p,q) : (p,q) -> (p,q-1) and horiz(p,q) : (p,q) -> (p-1,q); both
/// carry their own signs so that squares anticommute. When the stored grid is
/// a truncation of an infinite object, `complete_through` is the largest total
/// degree n for which every spot with p + q <= n is stored.
class DoubleComplex {
 public:
  DoubleComplex(int max_p, int max_q);

  int max_p() const { return max_p_; }
  int max_q() const { return max_q_; }
  std::optional<int> complete_through() const { return complete_; }
  void set_complete_through(std::optional<int> n) { complete_ = n; }

  Index dim(int p, int q) const;
  void set_dim(int p, int q, Index d);
  /// Zero matrices of the right shape for spots outside the grid or edges.
  const SparseMatrix& vert(int p, int q) const;
  const SparseMatrix& horiz(int p, int q) const;
  void set_vert(int p, int q, SparseMatrix m);
  void set_horiz(int p, int q, SparseMatrix m);

  /// d_v² = 0, d_h² = 0 and anticommuting squares, exactly.
  CheckReport verify() const;

 private:
  std::size_t slot(int p, int q) const { return static_cast<std::size_t>(p) * (max_q_ + 1) + q; }
  bool inside(int p, int q) const { return p >= 0 && q >= 0 && p <= max_p_ && q <= max_q_; }

  int max_p_;
  int max_q_;
  std::optional<int> complete_;
  std::vector<Index> dims_;
  std::vector<SparseMatrix> vert_;
  std::vector<SparseMatrix> horiz_;
  SparseMatrix empty_;
};

/// Tot_n = ⊕_{p+q=n} with p ascending. Bounded when the grid is the whole
/// object, otherwise cut at `complete_through`.
ChainComplex total_complex(const DoubleComplex& dc);

/// Offset of spot (p, n-p) inside Tot_n.
std::vector<Index> total_offsets(const DoubleComplex& dc, int n);

struct SpectralPage {
  int r = 0;
  /// dims[p][q] = dim E^r_{p,q}.
  std::vector<std::vector<std::size_t>> dims;
  /// rank of d^r : E^r_{p,q} -> E^r_{p-r,q+r-1}.
  std::vector<std::vector<std::size_t>> d_rank;
};

/// Pages E^0..E^max_page of the column filtration of the stored grid
/// (zero outside it). Throws InvariantViolation if the grid is not a
/// double complex or if a page disagrees with the homology of the previous one.
std::vector<SpectralPage> spectral_sequence(const DoubleComplex& dc, int max_page);

/// Page index after which every differential vanishes.
int stable_page(const DoubleComplex& dc);

/// Σ_{p+q=n} dim E^∞_{p,q} against the Betti numbers of the total complex.
CheckReport convergence_check(const DoubleComplex& dc);

/// ξ_n(k) = min{k, n + ((k - n) mod 2)}, with the mod taken in {0, 1}.
int xi_shape(int n, int k);
/// ξ_n(0..max_k) against 0, 1, ..., n, n+1, n, n+1, ...
CheckReport xi_check(int n, int max_k);

}  // namespace cyclab
