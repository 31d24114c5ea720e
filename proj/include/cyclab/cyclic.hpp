#pragma once

#include "cyclab/algebra.hpp"
#include "cyclab/double_complex.hpp"

namespace cyclab {

// Operators on the chain spaces C_n = A^{⊗(n+1)}.

/// Hochschild b : C_n -> C_{n-1}, n >= 1.
SparseMatrix hochschild_b(const Algebra& a, int n);
/// b' (b without the wrap-around summand) : C_n -> C_{n-1}, n >= 1.
SparseMatrix bar_b(const Algebra& a, int n);
/// τ(a_0 ⊗ ... ⊗ a_n) = (-1)^n a_n ⊗ a_0 ⊗ ... ⊗ a_{n-1} on C_n.
SparseMatrix cyclic_tau(Index algebra_dim, int n);
/// N = Σ_{j=0}^{n} τ^j on C_n.
SparseMatrix norm_operator(Index algebra_dim, int n);
/// 1 - τ on C_n.
SparseMatrix one_minus_tau(Index algebra_dim, int n);
/// s(x) = 1 ⊗ x : C_n -> C_{n+1}. Requires a unit.
SparseMatrix extra_degeneracy(const Algebra& a, int n);
/// B = (1 - τ) s N : C_n -> C_{n+1}. Requires a unit.
SparseMatrix connes_B(const Algebra& a, int n);

/// Degrees 0..max_degree (a truncation).
ChainComplex hochschild_complex(const Algebra& a, int max_degree);
ChainComplex bar_complex(const Algebra& a, int max_degree);

struct ConnesComplex {
  ChainComplex complex;
  /// projection[n] : C_n -> C^λ_n.
  std::vector<SparseMatrix> projection;
  std::vector<SparseMatrix> section;
};

/// C^λ_n = C_n / span{v - τ v}, with the induced b. Throws InvariantViolation
/// if b does not descend.
ConnesComplex connes_complex(const Algebra& a, int max_degree);

/// CC on spots 0 <= p <= max_p, 0 <= q <= max_q.
DoubleComplex cyclic_bicomplex(const Algebra& a, int max_p, int max_q);
/// (b,B) bicomplex: spot (p,q) is C_{q-p} for q >= p. Requires a unit.
DoubleComplex bB_bicomplex(const Algebra& a, int max_p, int max_q);

/// Tot(CC) -> C^λ, projection onto column 0, in degrees both have computed.
ChainMap column_zero_projection(std::shared_ptr<const ChainComplex> cc_total,
                                std::shared_ptr<const ChainComplex> connes,
                                const std::vector<SparseMatrix>& projection);

/// Exact operator identities through degree max_degree: b² = 0, b'² = 0,
/// τ^{n+1} = 1, (1-τ)N = N(1-τ) = 0, b(1-τ) = (1-τ)b', Nb = b'N and, for
/// unital A, B² = 0 and bB + Bb = 0.
CheckReport cyclic_identities_check(const Algebra& a, int max_degree);

/// Betti numbers of the bar complex in degrees 0..max_degree. The verdict
/// requires all of them to vanish; the first failing positive degree is
/// reported in `params["first_failure"]`.
CheckReport h_unitality_check(const Algebra& a, int max_degree);

/// Total betti of CC, betti of C^λ and (unital A) total betti of the (b,B)
/// complex through `degree`, plus the column-0 projection quasi-isomorphism.
CheckReport quasi_iso_check(const Algebra& a, int degree);

}  // namespace cyclab
