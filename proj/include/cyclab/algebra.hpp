#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclab/linalg.hpp"

namespace cyclab {

class Rng;

/// Structure constant: e_i * e_j has coefficient `value` on e_k.
struct StructureConstant {
  Index i, j, k;
  Rational value;
};

/// Finite-dimensional associative algebra over Q given by its multiplication
/// table. Construction verifies associativity and the unit claim.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Index dim, const std::vector<StructureConstant>& table, std::optional<SparseVector> unit = std::nullopt,
          std::vector<std::string> names = {});
  /// products[i * dim + j] = e_i e_j.
  Algebra(Index dim, std::vector<SparseVector> products, std::optional<SparseVector> unit,
          std::vector<std::string> names);

  Index dim() const { return dim_; }
  bool unital() const { return unit_.has_value(); }
  const SparseVector& unit() const;
  const std::vector<std::string>& names() const { return names_; }
  const SparseVector& product(Index i, Index j) const { return products_[i * dim_ + j]; }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  std::vector<StructureConstant> table() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.products_ == b.products_ && a.unit_ == b.unit_;
  }

 private:
  void validate() const;

  Index dim_ = 0;
  std::vector<SparseVector> products_;
  std::optional<SparseVector> unit_;
  std::vector<std::string> names_;
};

namespace algebras {
Algebra field();
/// Q[ε]/(ε²), basis {1, ε}.
Algebra dual_numbers();
/// Q[x]/(x^m), basis {1, x, ..., x^{m-1}}.
Algebra truncated_polynomial(Index m);
/// M_m(Q), basis e_ab at index a*m + b.
Algebra matrix_algebra(Index m);
/// Group algebra of Z/m, basis g^0..g^{m-1}.
Algebra cyclic_group(Index m);
Algebra direct_sum(const Algebra& a, const Algebra& b);
/// All products zero; never unital (dim >= 1).
Algebra zero_multiplication(Index dim);
/// {e, x}: ee = e, ex = x, xe = 0, xx = 0.
Algebra left_unital();
/// Same algebra in the basis given by the columns of the invertible g.
Algebra change_of_basis(const Algebra& a, const SparseMatrix& g);
/// Subalgebra generated by `generators` (closure under products, no unit added).
Algebra generated_subalgebra(const Algebra& ambient, const std::vector<SparseVector>& generators);
/// A random algebra of dimension <= max_dim: a built-in family or a generated
/// subalgebra of a small matrix algebra, in a random basis.
Algebra random_algebra(Rng& rng, Index max_dim);
}  // namespace algebras

/// Flat index of a multi-index (i_0, ..., i_{k-1}) in A^{⊗k}, lexicographic.
class TensorPowerBasis {
 public:
  TensorPowerBasis(Index algebra_dim, int power);
  Index size() const { return size_; }
  int power() const { return power_; }
  Index encode(const std::vector<Index>& multi) const;
  std::vector<Index> decode(Index flat) const;

 private:
  Index dim_;
  int power_;
  Index size_;
};

/// dim(A)^(k+1), guarded by the resource limit.
Index chain_dim(const Algebra& a, int degree);

/// Default degree bound for a builder on A.
int default_max_degree(const Algebra& a);

}  // namespace cyclab
