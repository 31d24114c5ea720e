#include "cyclab/cyclic.hpp"

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"

namespace cyclab {

namespace {

SparseMatrix b_matrix(const Algebra& a, int n, bool wrap) {
  if (n < 1) throw ShapeError("b is defined from degree 1");
  const Index src = chain_dim(a, n);
  const Index dst = chain_dim(a, n - 1);
  TensorPowerBasis in(a.dim(), n + 1);
  TensorPowerBasis out(a.dim(), n);
  return build_columns(dst, src, [&](Index x) {
    auto m = in.decode(x);
    Accumulator acc;
    std::vector<Index> t(n);
    for (int i = 0; i < n; ++i) {
      const Rational sign = i % 2 == 0 ? 1 : -1;
      for (const auto& e : a.product(m[i], m[i + 1])) {
        for (int k = 0; k < i; ++k) t[k] = m[k];
        t[i] = e.index;
        for (int k = i + 2; k <= n; ++k) t[k - 1] = m[k];
        acc.add(out.encode(t), sign * e.value);
      }
    }
    if (wrap) {
      const Rational sign = n % 2 == 0 ? 1 : -1;
      for (const auto& e : a.product(m[n], m[0])) {
        t[0] = e.index;
        for (int k = 1; k < n; ++k) t[k] = m[k];
        acc.add(out.encode(t), sign * e.value);
      }
    }
    return acc.finish();
  });
}

Index power(Index d, int k) {
  Index r = 1;
  for (int i = 0; i < k; ++i) r *= d;
  return r;
}

/// Flat index of τ(x) without sign.
Index rotate(Index x, Index d, int n) {
  // x = (x_0 ... x_n); τ moves x_n to the front.
  const Index last = x % d;
  return last * power(d, n) + x / d;
}

}  // namespace

SparseMatrix hochschild_b(const Algebra& a, int n) { return b_matrix(a, n, true); }
SparseMatrix bar_b(const Algebra& a, int n) { return b_matrix(a, n, false); }

SparseMatrix cyclic_tau(Index d, int n) {
  const Index size = power(d, n + 1);
  check_resource(size, "tensor power");
  const Rational sign = n % 2 == 0 ? 1 : -1;
  std::vector<SparseVector> cols(size);
  for (Index x = 0; x < size; ++x) cols[x] = SparseVector::unit(rotate(x, d, n), sign);
  return SparseMatrix::from_columns(size, std::move(cols));
}

SparseMatrix norm_operator(Index d, int n) {
  const Index size = power(d, n + 1);
  check_resource(size, "tensor power");
  const Rational sign = n % 2 == 0 ? 1 : -1;
  std::vector<SparseVector> cols(size);
  for (Index x = 0; x < size; ++x) {
    Accumulator acc;
    Index y = x;
    Rational s = 1;
    for (int j = 0; j <= n; ++j) {
      acc.add(y, s);
      y = rotate(y, d, n);
      s *= sign;
    }
    cols[x] = acc.finish();
  }
  return SparseMatrix::from_columns(size, std::move(cols));
}

SparseMatrix one_minus_tau(Index d, int n) { return SparseMatrix::identity(power(d, n + 1)) - cyclic_tau(d, n); }

SparseMatrix extra_degeneracy(const Algebra& a, int n) {
  const auto& u = a.unit();
  const Index src = chain_dim(a, n);
  const Index dst = chain_dim(a, n + 1);
  std::vector<SparseVector> cols(src);
  for (Index x = 0; x < src; ++x) {
    std::vector<Entry> e;
    for (const auto& c : u) e.push_back({c.index * src + x, c.value});
    cols[x] = SparseVector::from_entries(std::move(e));
  }
  return SparseMatrix::from_columns(dst, std::move(cols));
}

SparseMatrix connes_B(const Algebra& a, int n) {
  return one_minus_tau(a.dim(), n + 1) * extra_degeneracy(a, n) * norm_operator(a.dim(), n);
}

namespace {

ChainComplex tensor_chain_complex(const Algebra& a, int max_degree, bool wrap) {
  if (max_degree < 0) throw ShapeError("negative degree bound");
  std::vector<Index> dims;
  for (int n = 0; n <= max_degree; ++n) dims.push_back(chain_dim(a, n));
  std::vector<SparseMatrix> diffs;
  for (int n = 1; n <= max_degree; ++n) diffs.push_back(b_matrix(a, n, wrap));
  return ChainComplex(std::move(dims), std::move(diffs), false);
}

}  // namespace

ChainComplex hochschild_complex(const Algebra& a, int max_degree) { return tensor_chain_complex(a, max_degree, true); }
ChainComplex bar_complex(const Algebra& a, int max_degree) { return tensor_chain_complex(a, max_degree, false); }

ConnesComplex connes_complex(const Algebra& a, int max_degree) {
  if (max_degree < 0) throw ShapeError("negative degree bound");
  ConnesComplex out;
  std::vector<Index> dims;
  std::vector<SparseMatrix> ones(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) {
    const Index size = chain_dim(a, n);
    ones[n] = one_minus_tau(a.dim(), n);
    auto q = quotient_structure(image_basis(ones[n]), size);
    dims.push_back(q.projection.rows());
    out.projection.push_back(std::move(q.projection));
    out.section.push_back(std::move(q.section));
  }
  std::vector<SparseMatrix> diffs;
  for (int n = 1; n <= max_degree; ++n) {
    SparseMatrix b = hochschild_b(a, n);
    if (!(out.projection[n - 1] * b * ones[n]).is_zero()) {
      throw InvariantViolation("b does not descend to cyclic coinvariants in degree " + std::to_string(n));
    }
    diffs.push_back(out.projection[n - 1] * b * out.section[n]);
  }
  out.complex = ChainComplex(std::move(dims), std::move(diffs), false);
  return out;
}

DoubleComplex cyclic_bicomplex(const Algebra& a, int max_p, int max_q) {
  DoubleComplex dc(max_p, max_q);
  dc.set_complete_through(std::min(max_p, max_q));
  for (int p = 0; p <= max_p; ++p) {
    for (int q = 0; q <= max_q; ++q) dc.set_dim(p, q, chain_dim(a, q));
  }
  std::vector<SparseMatrix> b(max_q + 1), bp(max_q + 1), t(max_q + 1), nrm(max_q + 1);
  for (int q = 0; q <= max_q; ++q) {
    if (q >= 1) {
      b[q] = hochschild_b(a, q);
      bp[q] = bar_b(a, q).scaled(-1);
    }
    t[q] = one_minus_tau(a.dim(), q);
    if (max_p >= 2) nrm[q] = norm_operator(a.dim(), q);
  }
  for (int p = 0; p <= max_p; ++p) {
    for (int q = 0; q <= max_q; ++q) {
      if (q >= 1) dc.set_vert(p, q, p % 2 == 0 ? b[q] : bp[q]);
      if (p >= 1) dc.set_horiz(p, q, p % 2 == 1 ? t[q] : nrm[q]);
    }
  }
  return dc;
}

DoubleComplex bB_bicomplex(const Algebra& a, int max_p, int max_q) {
  if (!a.unital()) throw InvariantViolation("the (b,B) bicomplex needs a unital algebra");
  DoubleComplex dc(max_p, max_q);
  dc.set_complete_through(std::min(max_q, 2 * max_p + 1));
  for (int p = 0; p <= max_p; ++p) {
    for (int q = p; q <= max_q; ++q) dc.set_dim(p, q, chain_dim(a, q - p));
  }
  std::vector<SparseMatrix> b(max_q + 1), B(max_q + 1);
  for (int n = 0; n <= max_q; ++n) {
    if (n >= 1) b[n] = hochschild_b(a, n);
    if (n + 1 <= max_q) B[n] = connes_B(a, n);
  }
  for (int p = 0; p <= max_p; ++p) {
    for (int q = p; q <= max_q; ++q) {
      const int n = q - p;
      if (n >= 1) dc.set_vert(p, q, b[n]);
      if (p >= 1) dc.set_horiz(p, q, B[n]);
    }
  }
  return dc;
}

ChainMap column_zero_projection(std::shared_ptr<const ChainComplex> cc_total,
                                std::shared_ptr<const ChainComplex> connes,
                                const std::vector<SparseMatrix>& projection) {
  ChainMap f;
  f.source = cc_total;
  f.target = connes;
  const int top = std::min(cc_total->top(), connes->top());
  for (int n = 0; n <= top; ++n) {
    MatrixBuilder mb(connes->dim(n), cc_total->dim(n));
    mb.add_block(projection[n], 0, 0);
    f.components.push_back(mb.build());
  }
  return f;
}

CheckReport cyclic_identities_check(const Algebra& a, int max_degree) {
  CheckReport r;
  r.check = "cyclic_identities";
  r.params = {{"dim", a.dim()}, {"max_degree", max_degree}, {"unital", a.unital()}};
  const Index d = a.dim();
  auto expect_zero = [&](const SparseMatrix& m, const std::string& what, int n) {
    if (!m.is_zero()) r.fail(what + " fails in degree " + std::to_string(n));
  };
  for (int n = 0; n <= max_degree; ++n) {
    const Index size = chain_dim(a, n);
    SparseMatrix t = cyclic_tau(d, n);
    SparseMatrix tp = SparseMatrix::identity(size);
    for (int j = 0; j <= n; ++j) tp = t * tp;
    if (!(tp == SparseMatrix::identity(size))) r.fail("tau^(n+1) != 1 in degree " + std::to_string(n));
    SparseMatrix omt = one_minus_tau(d, n);
    SparseMatrix nrm = norm_operator(d, n);
    expect_zero(omt * nrm, "(1-tau)N = 0", n);
    expect_zero(nrm * omt, "N(1-tau) = 0", n);
    if (n >= 1) {
      SparseMatrix b = hochschild_b(a, n);
      SparseMatrix bp = bar_b(a, n);
      expect_zero(b * one_minus_tau(d, n) - one_minus_tau(d, n - 1) * bp, "b(1-tau) = (1-tau)b'", n);
      expect_zero(norm_operator(d, n - 1) * b - bp * nrm, "Nb = b'N", n);
      if (n >= 2) {
        expect_zero(hochschild_b(a, n - 1) * b, "b^2 = 0", n);
        expect_zero(bar_b(a, n - 1) * bp, "b'^2 = 0", n);
      }
    }
    if (a.unital() && n + 1 <= max_degree) {
      SparseMatrix B = connes_B(a, n);
      if (n + 2 <= max_degree) expect_zero(connes_B(a, n + 1) * B, "B^2 = 0", n);
      SparseMatrix anti = hochschild_b(a, n + 1) * B;
      if (n >= 1) anti = anti + connes_B(a, n - 1) * hochschild_b(a, n);
      expect_zero(anti, "bB + Bb = 0", n);
    }
  }
  return r;
}

CheckReport h_unitality_check(const Algebra& a, int max_degree) {
  CheckReport r;
  r.check = "hunital";
  r.params = {{"dim", a.dim()}, {"max_degree", max_degree}};
  auto h = homology(bar_complex(a, max_degree + 1), {false});
  int first = -1;
  for (int n = 0; n <= max_degree; ++n) {
    r.lhs_dims.push_back(static_cast<long long>(h.betti[n]));
    r.rhs_dims.push_back(0);
    if (h.betti[n] != 0) {
      r.fail("bar homology in degree " + std::to_string(n) + " has dimension " + std::to_string(h.betti[n]));
      if (first < 0 && n >= 1) first = n;
    }
  }
  r.params["first_failure"] = first;
  return r;
}

CheckReport quasi_iso_check(const Algebra& a, int degree) {
  CheckReport r;
  r.check = "quasi_iso";
  r.params = {{"dim", a.dim()}, {"degree", degree}, {"unital", a.unital()}};
  const int D = degree + 1;
  auto cc = cyclic_bicomplex(a, D, D);
  r.absorb(cc.verify());
  auto tot = std::make_shared<const ChainComplex>(total_complex(cc));
  auto connes = connes_complex(a, D);
  auto lam = std::make_shared<const ChainComplex>(connes.complex);
  r.absorb(verify_complex(*tot));
  r.absorb(verify_complex(*lam));
  auto h_tot = homology(*tot);
  auto h_lam = homology(*lam);
  for (int n = 0; n <= degree; ++n) {
    r.lhs_dims.push_back(static_cast<long long>(h_tot.betti[n]));
    r.rhs_dims.push_back(static_cast<long long>(h_lam.betti[n]));
    if (h_tot.betti[n] != h_lam.betti[n]) r.fail("CC and C^lambda differ in degree " + std::to_string(n));
  }
  auto proj = column_zero_projection(tot, lam, connes.projection);
  auto chain = verify_chain_map(proj);
  r.absorb(chain);
  if (chain.verdict) {
    auto induced = induced_map_on_homology(proj, h_tot, h_lam);
    std::vector<bool> qi;
    for (int n = 0; n <= degree; ++n) {
      bool ok = n <= induced.top && induced.quasi_iso[n];
      qi.push_back(ok);
      if (!ok) r.fail("column-0 projection is not a quasi-isomorphism in degree " + std::to_string(n));
    }
    r.params["projection_quasi_iso"] = qi;
  }
  if (a.unital()) {
    auto bb = bB_bicomplex(a, D / 2 + 1, D);
    r.absorb(bb.verify());
    auto h_bb = homology(total_complex(bb), {false});
    std::vector<long long> betti;
    for (int n = 0; n <= degree; ++n) {
      betti.push_back(static_cast<long long>(h_bb.betti[n]));
      if (h_bb.betti[n] != h_tot.betti[n]) r.fail("(b,B) and CC differ in degree " + std::to_string(n));
    }
    r.params["bB_betti"] = betti;
  }
  return r;
}

}  // namespace cyclab
