#pragma once

#include <string>
#include <vector>

#include "cyclab/algebra.hpp"
#include "cyclab/complex.hpp"

namespace cyclab {

/// Finite-dimensional Lie algebra over Q by structure constants.
/// Construction verifies antisymmetry and the Jacobi identity.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(Index dim, const std::vector<StructureConstant>& table, std::vector<std::string> names = {});
  /// brackets[i * dim + j] = [e_i, e_j].
  LieAlgebra(Index dim, std::vector<SparseVector> brackets, std::vector<std::string> names, bool validate = true);

  Index dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const SparseVector& bracket(Index i, Index j) const { return brackets_[i * dim_ + j]; }
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  /// Matrix of ad(x) on the basis.
  SparseMatrix ad(const SparseVector& x) const;
  std::vector<StructureConstant> table() const;

 private:
  void validate() const;

  Index dim_ = 0;
  std::vector<SparseVector> brackets_;
  std::vector<std::string> names_;
};

namespace lie_algebras {
LieAlgebra abelian(Index dim);
/// Basis e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
}  // namespace lie_algebras

/// Index of the basis element e_rs ⊗ a_t of gl_n(A), rows/cols 0-based.
inline Index gl_index(Index n, Index dim_a, Index r, Index s, Index t) { return (r * n + s) * dim_a + t; }

/// gl_n(A) = M_n(A) with the commutator bracket
/// [e_rs⊗a, e_uv⊗b] = δ_su e_rv⊗ab − δ_vr e_us⊗ba.
LieAlgebra gl_n_of(const Algebra& a, Index n);

/// Strictly increasing k-subsets of {0..n-1} in lexicographic order.
class ExteriorBasis {
 public:
  ExteriorBasis(Index n, int k);
  Index size() const { return size_; }
  int degree() const { return k_; }
  Index ambient() const { return n_; }
  std::vector<Index> subset(Index flat) const;
  Index index(const std::vector<Index>& sorted) const;

 private:
  Index n_;
  int k_;
  Index size_;
  std::vector<std::vector<Index>> binom_;
};

/// Sorts `idx` in place; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(std::vector<Index>& idx);

/// The wedge e_{idx_0} ∧ ... ∧ e_{idx_{k-1}} in the basis of Λ^k.
SparseVector wedge_of(const ExteriorBasis& basis, std::vector<Index> idx);

/// Λ^0..Λ^max_degree with d(g_1∧…∧g_k) = Σ_{i<j} (−1)^{i+j−1} [g_i,g_j]∧…ĝ_i…ĝ_j…
/// (1-based positions). Bounded when max_degree >= dim.
ChainComplex ce_complex(const LieAlgebra& g, int max_degree);
/// d on Λ^k as a matrix Λ^k -> Λ^{k-1}.
SparseMatrix ce_differential(const LieAlgebra& g, int k);

/// Extension of a linear operator X on g to Λ^k as a derivation.
SparseMatrix lift_derivation(const SparseMatrix& x, Index n, int k);

/// Action matrices ρ(X_b) on a module, one per basis element of `acting`.
struct LieModuleAction {
  LieAlgebra acting;
  Index module_dim = 0;
  std::vector<SparseMatrix> matrices;
};

/// ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)] on all basis pairs.
CheckReport verify_action(const LieModuleAction& action);

/// gl_n(Q) acting on Λ^k(gl_n(A)) through the adjoint action on the matrix
/// leg and the trivial action on A.
LieModuleAction gln_action_on_chains(const Algebra& a, Index n, int k);

struct CoinvariantResult {
  ChainComplex complex;
  ChainMap quotient;
};

/// Degreewise coinvariants C_k / span{ρ_k(X) v}, with the induced
/// differential. actions[k] holds the matrices acting on C_k.
CoinvariantResult coinvariant_complex(std::shared_ptr<const ChainComplex> c,
                                      const std::vector<std::vector<SparseMatrix>>& actions);

/// X·c = d(X∧c) + X∧dc on sampled pairs, X from `elements` (vectors in g),
/// c basis chains of degree k. Exhaustive up to 10^4 pairs, else a seeded
/// sample of 10^4.
CheckReport homotopy_identity_check(const LieAlgebra& g, const std::vector<SparseVector>& elements, int k,
                                    std::uint64_t seed);

/// The elements e_rs ⊗ 1 of gl_n(A) for unital A.
std::vector<SparseVector> scalar_matrix_units(const Algebra& a, Index n);

}  // namespace cyclab
