#include "cyclab/algebra.hpp"

#include "cyclab/errors.hpp"
#include "cyclab/random.hpp"

namespace cyclab {

namespace {

std::vector<SparseVector> products_from_table(Index dim, const std::vector<StructureConstant>& table) {
  std::vector<std::vector<Entry>> raw(dim * dim);
  for (const auto& s : table) {
    if (s.i >= dim || s.j >= dim || s.k >= dim) {
      throw ParseError("structure constant (" + std::to_string(s.i) + "," + std::to_string(s.j) + "," +
                       std::to_string(s.k) + ") outside dimension " + std::to_string(dim));
    }
    raw[s.i * dim + s.j].push_back({s.k, s.value});
  }
  std::vector<SparseVector> out;
  for (auto& r : raw) out.push_back(SparseVector::from_entries(std::move(r)));
  return out;
}

std::vector<std::string> default_names(Index dim) {
  std::vector<std::string> names;
  for (Index i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

}  // namespace

Algebra::Algebra(Index dim, const std::vector<StructureConstant>& table, std::optional<SparseVector> unit,
                 std::vector<std::string> names)
    : Algebra(dim, products_from_table(dim, table), std::move(unit), std::move(names)) {}

Algebra::Algebra(Index dim, std::vector<SparseVector> products, std::optional<SparseVector> unit,
                 std::vector<std::string> names)
    : dim_(dim), products_(std::move(products)), unit_(std::move(unit)), names_(std::move(names)) {
  if (names_.empty()) names_ = default_names(dim_);
  validate();
}

const SparseVector& Algebra::unit() const {
  if (!unit_) throw InvariantViolation("algebra has no unit");
  return *unit_;
}

SparseVector Algebra::multiply(const SparseVector& x, const SparseVector& y) const {
  Accumulator acc;
  for (const auto& a : x) {
    for (const auto& b : y) acc.add(product(a.index, b.index), a.value * b.value);
  }
  return acc.finish();
}

std::vector<StructureConstant> Algebra::table() const {
  std::vector<StructureConstant> out;
  for (Index i = 0; i < dim_; ++i) {
    for (Index j = 0; j < dim_; ++j) {
      for (const auto& e : product(i, j)) out.push_back({i, j, e.index, e.value});
    }
  }
  return out;
}

void Algebra::validate() const {
  if (products_.size() != dim_ * dim_) throw ShapeError("multiplication table has the wrong size");
  if (names_.size() != dim_) throw ParseError("basis has " + std::to_string(names_.size()) + " names for dimension " +
                                              std::to_string(dim_));
  for (const auto& p : products_) {
    if (p.extent() > dim_) throw ParseError("product outside the algebra");
  }
  for (Index i = 0; i < dim_; ++i) {
    for (Index j = 0; j < dim_; ++j) {
      for (Index k = 0; k < dim_; ++k) {
        SparseVector left = multiply(product(i, j), SparseVector::unit(k));
        SparseVector right = multiply(SparseVector::unit(i), product(j, k));
        if (!(left == right)) {
          throw InvariantViolation("associativity fails on (" + names_[i] + ", " + names_[j] + ", " + names_[k] +
                                   ")");
        }
      }
    }
  }
  if (unit_) {
    if (unit_->extent() > dim_) throw ParseError("unit outside the algebra");
    for (Index i = 0; i < dim_; ++i) {
      auto e = SparseVector::unit(i);
      if (!(multiply(*unit_, e) == e) || !(multiply(e, *unit_) == e)) {
        throw InvariantViolation("declared unit fails on " + names_[i]);
      }
    }
  }
}

Index chain_dim(const Algebra& a, int degree) {
  Index d = 1;
  for (int i = 0; i <= degree; ++i) {
    if (a.dim() != 0 && d > kResourceLimit / a.dim() + 1) {
      check_resource(kResourceLimit + 1, "A^(tensor " + std::to_string(degree + 1) + ")");
    }
    d *= a.dim();
  }
  check_resource(d, "A^(tensor " + std::to_string(degree + 1) + ")");
  return d;
}

int default_max_degree(const Algebra& a) {
  if (a.dim() <= 2) return 4;
  if (a.dim() <= 4) return 3;
  return 2;
}

TensorPowerBasis::TensorPowerBasis(Index algebra_dim, int power) : dim_(algebra_dim), power_(power), size_(1) {
  for (int i = 0; i < power; ++i) size_ *= dim_;
}

Index TensorPowerBasis::encode(const std::vector<Index>& multi) const {
  Index flat = 0;
  for (Index i : multi) flat = flat * dim_ + i;
  return flat;
}

std::vector<Index> TensorPowerBasis::decode(Index flat) const {
  std::vector<Index> multi(power_);
  for (int k = power_ - 1; k >= 0; --k) {
    multi[k] = flat % dim_;
    flat /= dim_;
  }
  return multi;
}

namespace algebras {

Algebra field() { return Algebra(1, {{0, 0, 0, 1}}, SparseVector::unit(0), {"1"}); }

Algebra dual_numbers() {
  return Algebra(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, SparseVector::unit(0), {"1", "eps"});
}

Algebra truncated_polynomial(Index m) {
  if (m == 0) throw ShapeError("truncated polynomial algebra needs m >= 1");
  std::vector<StructureConstant> t;
  std::vector<std::string> names;
  for (Index i = 0; i < m; ++i) {
    names.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
    for (Index j = 0; i + j < m; ++j) t.push_back({i, j, i + j, 1});
  }
  return Algebra(m, t, SparseVector::unit(0), names);
}

Algebra matrix_algebra(Index m) {
  if (m == 0) throw ShapeError("matrix algebra needs m >= 1");
  std::vector<StructureConstant> t;
  std::vector<std::string> names;
  std::vector<Entry> unit;
  for (Index a = 0; a < m; ++a) {
    unit.push_back({a * m + a, 1});
    for (Index b = 0; b < m; ++b) {
      names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
      for (Index c = 0; c < m; ++c) t.push_back({a * m + b, b * m + c, a * m + c, 1});
    }
  }
  return Algebra(m * m, t, SparseVector::from_entries(unit), names);
}

Algebra cyclic_group(Index m) {
  if (m == 0) throw ShapeError("cyclic group needs order >= 1");
  std::vector<StructureConstant> t;
  std::vector<std::string> names;
  for (Index i = 0; i < m; ++i) {
    names.push_back("g^" + std::to_string(i));
    for (Index j = 0; j < m; ++j) t.push_back({i, j, (i + j) % m, 1});
  }
  return Algebra(m, t, SparseVector::unit(0), names);
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const Index n = a.dim() + b.dim();
  std::vector<StructureConstant> t = a.table();
  for (auto s : b.table()) t.push_back({s.i + a.dim(), s.j + a.dim(), s.k + a.dim(), s.value});
  std::vector<std::string> names;
  for (const auto& s : a.names()) names.push_back(s + "_L");
  for (const auto& s : b.names()) names.push_back(s + "_R");
  std::optional<SparseVector> unit;
  if (a.unital() && b.unital()) unit = a.unit() + b.unit().shifted(a.dim());
  return Algebra(n, t, unit, names);
}

Algebra zero_multiplication(Index dim) { return Algebra(dim, std::vector<StructureConstant>{}, std::nullopt); }

Algebra left_unital() {
  return Algebra(2, {{0, 0, 0, 1}, {0, 1, 1, 1}}, std::nullopt, {"e", "x"});
}

Algebra change_of_basis(const Algebra& a, const SparseMatrix& g) {
  if (g.rows() != a.dim() || g.cols() != a.dim()) throw ShapeError("basis change has the wrong size");
  const SparseMatrix ginv = inverse(g);
  std::vector<SparseVector> products;
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < a.dim(); ++j) products.push_back(ginv.apply(a.multiply(g.col(i), g.col(j))));
  }
  std::optional<SparseVector> unit;
  if (a.unital()) unit = ginv.apply(a.unit());
  return Algebra(a.dim(), std::move(products), unit, {});
}

namespace {

/// The unit of the algebra with the given products, if there is one.
std::optional<SparseVector> find_unit(Index dim, const std::vector<SparseVector>& products) {
  // Unknown u: sum_k u_k e_k e_i = e_i and sum_k u_k e_i e_k = e_i for all i.
  MatrixBuilder mb(2 * dim * dim, dim);
  std::vector<Entry> rhs;
  for (Index i = 0; i < dim; ++i) {
    for (Index k = 0; k < dim; ++k) {
      mb.add_column(k, products[k * dim + i], 2 * i * dim);
      mb.add_column(k, products[i * dim + k], (2 * i + 1) * dim);
    }
    rhs.push_back({2 * i * dim + i, 1});
    rhs.push_back({(2 * i + 1) * dim + i, 1});
  }
  return solve(mb.build(), SparseVector::from_entries(rhs));
}

}  // namespace

Algebra generated_subalgebra(const Algebra& ambient, const std::vector<SparseVector>& generators) {
  Subspace span(ambient.dim(), generators);
  for (;;) {
    std::vector<SparseVector> all = span.basis();
    for (const auto& x : span.basis()) {
      for (const auto& y : span.basis()) all.push_back(ambient.multiply(x, y));
    }
    Subspace next(ambient.dim(), all);
    if (next.dim() == span.dim()) break;
    span = std::move(next);
  }
  const Index d = span.dim();
  std::vector<SparseVector> products;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      auto coords = span.coordinates(ambient.multiply(span.basis()[i], span.basis()[j]));
      std::vector<Entry> e;
      for (Index k = 0; k < d; ++k) e.push_back({k, coords[k]});
      products.push_back(SparseVector::from_entries(std::move(e)));
    }
  }
  return Algebra(d, products, find_unit(d, products), {});
}

Algebra random_algebra(Rng& rng, Index max_dim) {
  for (;;) {
    Algebra base;
    switch (rng.below(10)) {
      case 0: base = field(); break;
      case 1: base = dual_numbers(); break;
      case 2: base = truncated_polynomial(rng.between(2, 3)); break;
      case 3: base = cyclic_group(rng.between(2, 3)); break;
      case 4: base = direct_sum(field(), field()); break;
      case 5: base = zero_multiplication(rng.between(1, 3)); break;
      case 6: base = left_unital(); break;
      case 7: base = direct_sum(dual_numbers(), field()); break;
      default: {
        // Subalgebra of M_2 generated by one or two random matrices.
        Algebra m2 = matrix_algebra(2);
        std::vector<SparseVector> gens;
        const int count = static_cast<int>(rng.between(1, 2));
        for (int g = 0; g < count; ++g) {
          std::vector<Entry> e;
          for (Index k = 0; k < 4; ++k) e.push_back({k, Rational(rng.between(-2, 2))});
          gens.push_back(SparseVector::from_entries(std::move(e)));
        }
        base = generated_subalgebra(m2, gens);
      }
    }
    if (base.dim() == 0 || base.dim() > max_dim) continue;
    return change_of_basis(base, random_invertible(rng, base.dim()).first);
  }
}

}  // namespace algebras

}  // namespace cyclab
