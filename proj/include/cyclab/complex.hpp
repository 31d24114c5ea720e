#pragma once

#include <memory>
#include <vector>

#include "cyclab/linalg.hpp"
#include "cyclab/report.hpp"

namespace cyclab {

/// Chain complex C_0 <- C_1 <- ... <- C_top over Q.
///
/// `bounded` means the complex is genuinely zero above `top`. An unbounded
/// complex is a truncation: d_{top+1} is unknown, so homology in degree
/// `top` is only an upper bound.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// diffs[n-1] is d_n : C_n -> C_{n-1}, shape dims[n-1] x dims[n].
  ChainComplex(std::vector<Index> dims, std::vector<SparseMatrix> diffs, bool bounded = true);

  int top() const { return static_cast<int>(dims_.size()) - 1; }
  bool bounded() const { return bounded_; }
  Index dim(int n) const;
  const std::vector<Index>& dims() const { return dims_; }
  /// d_n for 1 <= n <= top.
  const SparseMatrix& d(int n) const { return diffs_[n - 1]; }
  /// d_n for any n; zero outside the stored range.
  SparseMatrix differential(int n) const;
  /// Highest degree whose homology is exact rather than an upper bound.
  int reliable_top() const { return bounded_ ? top() : top() - 1; }

 private:
  std::vector<Index> dims_;
  std::vector<SparseMatrix> diffs_;
  bool bounded_ = true;
};

/// Degrees 0..max_degree of c, still bounded only when nothing was cut.
ChainComplex truncate(const ChainComplex& c, int max_degree);

/// d_{n-1} d_n = 0 for each stored degree; the first nonzero entry is the witness.
CheckReport verify_complex(const ChainComplex& c);
/// Throws InvariantViolation when verify_complex fails.
void require_complex(const ChainComplex& c, const std::string& what);

struct HomologyResult {
  std::vector<std::size_t> betti;
  /// reliable[n] is false for the truncation degree of an unbounded complex.
  std::vector<bool> reliable;
  std::vector<std::vector<SparseVector>> cycle_reps;
  std::vector<Subspace> boundaries;
  bool has_reps = false;
  /// Per degree: boundaries then representatives, tagged by representative index.
  std::vector<std::shared_ptr<const Echelon>> class_solver;

  /// Coordinates of the class of cycle z in the representative basis.
  std::vector<Rational> class_coordinates(int n, const SparseVector& z) const;
  /// Betti numbers of reliable degrees.
  std::vector<std::size_t> reliable_betti() const;
};

struct HomologyOptions {
  bool representatives = true;
};

HomologyResult homology(const ChainComplex& c, HomologyOptions opts = {});

/// Per-degree components f_n : source_n -> target_n for n <= top.
struct ChainMap {
  std::shared_ptr<const ChainComplex> source;
  std::shared_ptr<const ChainComplex> target;
  std::vector<SparseMatrix> components;

  int top() const { return static_cast<int>(components.size()) - 1; }
};

ChainMap identity_map(std::shared_ptr<const ChainComplex> c);
ChainMap compose(const ChainMap& g, const ChainMap& f);
CheckReport verify_chain_map(const ChainMap& f);

struct InducedMap {
  std::vector<SparseMatrix> matrices;
  std::vector<bool> quasi_iso;
  /// Degrees computed: those reliable in both source and target.
  int top = -1;
};

/// Throws InvariantViolation when f is not a chain map.
InducedMap induced_map_on_homology(const ChainMap& f);
InducedMap induced_map_on_homology(const ChainMap& f, const HomologyResult& hs, const HomologyResult& ht);

/// (a ⊗ b)_n = ⊕_{p+q=n} a_p ⊗ b_q, p ascending, basis i * dim b_q + j,
/// d(x ⊗ y) = dx ⊗ y + (-1)^p x ⊗ dy.
ChainComplex tensor_complexes(const ChainComplex& a, const ChainComplex& b);
CheckReport kunneth_check(const ChainComplex& a, const ChainComplex& b);

/// Euler characteristic check on a bounded complex.
CheckReport euler_check(const ChainComplex& c, const HomologyResult& h);

}  // namespace cyclab
