#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cyclab/cyclic.hpp"
#include "cyclab/lie.hpp"

namespace cyclab {

/// Permutation of {0..k-1} by its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ShapeError unless `image` is a bijection.
  explicit Permutation(std::vector<Index> image);
  static Permutation identity(Index k);
  /// The cycle begin -> begin+1 -> ... -> end-1 -> begin inside Σ_k.
  static Permutation cycle(Index k, Index begin, Index end);

  Index degree() const { return image_.size(); }
  Index operator()(Index i) const { return image_[i]; }
  const std::vector<Index>& image() const { return image_; }
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const { return sign_; }
  /// Disjoint cycles including fixed points, each starting at its smallest element.
  const std::vector<std::vector<Index>>& cycles() const { return cycles_; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.image_ < b.image_; }

 private:
  std::vector<Index> image_;
  std::vector<std::vector<Index>> cycles_;
  int sign_ = 1;
};

/// Σ_k in lexicographic order of image arrays; position = permutation_rank.
std::vector<Permutation> all_permutations(Index k);
Index permutation_rank(const Permutation& p);
Index factorial(Index k);

// Invariant theory of gl_n(Q) ---------------------------------------------

/// Basis of gl_n(Q)^{⊗k}: lexicographic in (g_1, ..., g_k), g = e_rs at r*n+s.
struct TraceInvariantMap {
  Index n = 0;
  Index k = 0;
  /// g ↦ Σ_σ T(σ)(g) σ, from n^{2k} to k! (basis of Q[Σ_k] by permutation_rank).
  SparseMatrix phi;
  /// σ ↦ e_{0σ(0)} ⊗ ... ⊗ e_{k-1,σ(k-1)}, a right inverse of phi; only for n >= k.
  std::optional<SparseMatrix> lift;
  Index coinvariant_dim = 0;
  std::size_t rank = 0;
  bool annihilates_relations = false;
};

/// Builds φ_n and measures it: relations X·g are checked exactly against φ,
/// the coinvariant dimension comes from the weight-zero part of the relation span.
TraceInvariantMap trace_invariant_map(Index n, Index k);
/// φ well-defined, and bijective on coinvariants exactly when n >= k.
CheckReport trace_map_check(Index n, Index k);
/// φ(σ·g) = σ φ(g) σ^{-1} on basis tensors; exhaustive up to 10^4 pairs.
CheckReport equivariance_check(Index n, Index k, std::uint64_t seed);

// The θ map -----------------------------------------------------------------

/// (Q[Σ_N] ⊗ A^{⊗N})_{Σ_N} with σ·(π ⊗ x) = sgn(σ) σπσ^{-1} ⊗ σ·x,
/// (σ·x)_{σ(i)} = x_i. Basis: one surviving orbit per element.
class WBasis {
 public:
  WBasis(Index algebra_dim, int degree);
  int degree() const { return degree_; }
  Index size() const { return reps_.size(); }
  /// Class of π ⊗ x (x flat in A^{⊗N}): basis index and sign, or nullopt when it vanishes.
  std::optional<std::pair<Index, int>> classify(const Permutation& pi, Index x) const;
  /// Orbit representative (permutation rank, flat tensor index) of basis element i.
  std::pair<Index, Index> representative(Index i) const { return reps_[i]; }

 private:
  Index dim_a_;
  int degree_;
  Index tensor_size_;
  std::vector<Permutation> perms_;
  /// Per pair (rank π) * tensor_size + x: basis index or -1, and sign.
  std::vector<long> index_;
  std::vector<signed char> sign_;
  std::vector<std::pair<Index, Index>> reps_;
};

struct WComplex {
  ChainComplex complex;
  std::vector<WBasis> bases;
};

/// ⊕_N W_N for N <= max_degree with the CE differential of gl_N(A) carried
/// over through the trace map. A truncation.
WComplex w_complex(const Algebra& a, int max_degree);

/// Free graded-commutative algebra on C^λ_{k-1}(A) placed in degree k, with
/// the Leibniz extension of the cyclic differential.
struct LambdaCyclicComplex {
  ChainComplex complex;
  ConnesComplex connes;
  /// Generators by degree: generator (k, i) is free coordinate i of C^λ_{k-1}.
  std::vector<Index> generator_count;
  /// Per degree: monomials as sorted lists of (k, i).
  std::vector<std::vector<std::vector<std::pair<int, Index>>>> monomials;
};

LambdaCyclicComplex lambda_cyclic_complex(const Algebra& a, int max_degree);

struct ThetaResult {
  ChainMap map;
  WComplex w;
  LambdaCyclicComplex domain;
};

/// θ(u_1 ··· u_l) = [(cycle blocks) ⊗ u_1 ⊗ ... ⊗ u_l].
ThetaResult theta_map(const Algebra& a, int max_degree);
/// θ a chain map, bijective in every degree through max_degree.
CheckReport theta_check(const Algebra& a, int max_degree);

// Stable range ----------------------------------------------------------------

/// Dimensions of the free graded-commutative algebra on gens (gens[d] in
/// degree d, gens[0] must be 0): exterior on odd, polynomial on even degrees.
std::vector<Index> graded_free_commutative_dims(const std::vector<Index>& gens, int max_degree);

/// H_r(gl_n(A)) against the free graded-commutative algebra on H^λ_{•-1}(A),
/// for r <= max_r with r+1 <= n (unital) or 2r+1 <= n (H-unital route).
CheckReport lqt_stable_check(const Algebra& a, Index n, int max_r, bool non_unital_route);

// Weights and symmetric group modules ------------------------------------

using Partition = std::vector<int>;
using WeightVector = std::vector<long>;

/// All partitions of m, reverse lexicographic.
std::vector<Partition> partitions(int m);
/// (α_1, ..., α_l, 0, ..., 0, -β_l', ..., -β_1); ShapeError when l(α)+l(β) > n.
WeightVector weight_vector(const Partition& alpha, const Partition& beta, Index n);

struct WeightComponent {
  WeightVector weight;
  Partition alpha;
  Partition beta;
  /// M_μ: weight μ, killed by every e_ij with i < j.
  Subspace highest;
  /// U(gl_n) · M_μ.
  Subspace module;
  Rational weyl_dimension;
};

struct WeightDecomposition {
  Index n = 0;
  int k = 0;
  Index total_dim = 0;
  std::vector<WeightComponent> components;
};

/// Decomposition of Λ^k(gl_n(A)) under the gl_n(Q) action on the matrix leg.
WeightDecomposition weight_decomposition(const Algebra& a, Index n, int k);
/// Components sum to the total, module dimensions match dim M_μ · Weyl dimension
/// and the modules are independent.
CheckReport weight_decomposition_check(const Algebra& a, Index n, int k);

/// Rows of 1-based entries.
using Tableau = std::vector<std::vector<int>>;

std::vector<Tableau> standard_tableaux(const Partition& shape);
Index hook_length_count(const Partition& shape);

struct SpechtModule {
  Partition shape;
  int m = 0;
  std::vector<Tableau> tableaux;
  /// tabloids[t][i] = 0-based row of the number i+1.
  std::vector<std::vector<int>> tabloids;
  std::map<std::vector<int>, Index> tabloid_index;
  /// Column T: the polytabloid e_T in tabloid coordinates.
  SparseMatrix polytabloids;
  /// Matrix of the transposition (i i+1), i = 0..m-2, in the standard basis.
  std::vector<SparseMatrix> generators;

  Index dim() const { return tableaux.size(); }
  /// Matrix of σ ∈ Σ_m in the standard basis.
  SparseMatrix action(const Permutation& sigma) const;

 private:
  friend SpechtModule specht_module(const Partition& shape);
  std::shared_ptr<const Echelon> solver_;
};

SpechtModule specht_module(const Partition& shape);
/// Standard-tableau count, hook-length value and span rank agree; the action
/// is a homomorphism and the generators satisfy the Coxeter relations.
CheckReport specht_check(const Partition& shape);

/// ζ_rs(a_1 ⊗ ... ⊗ a_p) = Σ (e_{r i_2} ⊗ a_1) ⊗ ... ⊗ (e_{i_p s} ⊗ a_p), with
/// 1-based r, s; terms are tuples of gl_n(A) basis indices.
std::vector<std::vector<Index>> zeta(const std::vector<Index>& word, Index r, Index s, Index n, Index algebra_dim);

/// ψ on M_{[α,β]_n}(Λ^d gl_n(A)) for d <= max_degree: images are highest
/// weight vectors, ψ is constant on Σ_m orbits, and in degrees d <= n/2 the
/// image is all of M_μ with dimension equal to the domain coinvariants.
CheckReport psi_restriction_check(const Algebra& a, Index n, const Partition& alpha, const Partition& beta,
                                  int max_degree);

}  // namespace cyclab
