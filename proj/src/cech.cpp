#include "cyclab/cech.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/random.hpp"

namespace cyclab {

namespace {

PointSet normalized(PointSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string open_name(const CoverModel& m, Index u) {
  std::string s = "open " + std::to_string(u) + " {";
  for (std::size_t i = 0; i < m.open(u).size(); ++i) s += (i ? "," : "") + std::to_string(m.open(u)[i]);
  return s + "}";
}

/// Increasing subsets of {0..n-1} of size k, lexicographic.
std::vector<std::vector<Index>> index_tuples(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  if (k > n) return out;
  std::vector<Index> t(k);
  std::iota(t.begin(), t.end(), Index{0});
  while (true) {
    out.push_back(t);
    Index i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (Index j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

/// Block matrix assembled from (row block, col block, matrix) pieces.
SparseMatrix assemble(const std::vector<Index>& row_offsets, Index rows, const std::vector<Index>& col_offsets,
                      Index cols, const std::vector<std::tuple<Index, Index, SparseMatrix>>& pieces) {
  std::vector<Triplet> trips;
  for (const auto& [rb, cb, m] : pieces)
    for (Index c = 0; c < m.cols(); ++c)
      for (const auto& e : m.col(c)) trips.push_back({row_offsets[rb] + e.index, col_offsets[cb] + c, e.value});
  return SparseMatrix::from_triplets(rows, cols, std::move(trips));
}

std::vector<Index> offsets_of(const std::vector<Index>& sizes) {
  std::vector<Index> off(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + sizes[i];
  return off;
}

/// Exactness of ⊕P(U_ij) → ⊕P(U_i) → P(V) → 0 for the given cover of V.
void check_cover_exact(const FinitePrecosheaf& p, Index v, const std::vector<Index>& parts, CheckReport& r) {
  const auto& m = p.model();
  std::vector<Index> sizes;
  for (Index u : parts) sizes.push_back(p.dim(u));
  auto off = offsets_of(sizes);
  std::vector<std::tuple<Index, Index, SparseMatrix>> beta_pieces;
  for (std::size_t i = 0; i < parts.size(); ++i) beta_pieces.emplace_back(0, i, p.extension(parts[i], v));
  SparseMatrix beta = assemble({0}, p.dim(v), off, off.back(), beta_pieces);

  std::vector<std::tuple<Index, Index, SparseMatrix>> alpha_pieces;
  std::vector<Index> pair_sizes;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      auto w = m.find(intersect(m.open(parts[i]), m.open(parts[j])));
      if (!w) {
        if (!intersect(m.open(parts[i]), m.open(parts[j])).empty())
          throw ShapeError("cosheaf axiom: intersection not stored");
        continue;
      }
      const Index blk = pair_sizes.size();
      pair_sizes.push_back(p.dim(*w));
      alpha_pieces.emplace_back(i, blk, p.extension(*w, parts[i]));
      alpha_pieces.emplace_back(j, blk, p.extension(*w, parts[j]).scaled(-1));
    }
  auto poff = offsets_of(pair_sizes);
  SparseMatrix alpha = assemble(off, off.back(), poff, poff.back(), alpha_pieces);

  const std::size_t rb = rank(beta);
  const std::size_t ra = rank(alpha);
  r.lhs_dims.push_back(static_cast<long long>(rb));
  r.rhs_dims.push_back(static_cast<long long>(p.dim(v)));
  if (rb != p.dim(v)) r.fail(open_name(m, v) + ": sum of extensions has rank " + std::to_string(rb) + " < " +
                             std::to_string(p.dim(v)));
  if (!(beta * alpha).is_zero()) r.fail(open_name(m, v) + ": composite is nonzero");
  if (ra != off.back() - rb)
    r.fail(open_name(m, v) + ": not exact in the middle (image " + std::to_string(ra) + ", kernel " +
           std::to_string(off.back() - rb) + ")");
}

}  // namespace

// CoverModel ---------------------------------------------------------------

CoverModel::CoverModel(Index points, std::vector<PointSet> opens, std::vector<Index> cover)
    : points_(points), cover_(std::move(cover)) {
  for (auto& o : opens) {
    o = normalized(std::move(o));
    for (Index x : o)
      if (x >= points_) throw InvariantViolation("open contains point " + std::to_string(x) + " outside the ground set");
    if (lookup_.count(o)) throw InvariantViolation("open stored twice");
    lookup_[o] = opens_.size();
    opens_.push_back(o);
  }
  PointSet all(points_);
  std::iota(all.begin(), all.end(), Index{0});
  auto w = find(all);
  if (!w) throw InvariantViolation("the ground set is not a stored open");
  whole_ = *w;
  if (cover_.empty()) throw InvariantViolation("empty cover");
  std::set<Index> covered;
  for (Index c : cover_) {
    if (c >= opens_.size()) throw InvariantViolation("cover refers to open " + std::to_string(c));
    covered.insert(opens_[c].begin(), opens_[c].end());
  }
  if (covered.size() != points_) throw InvariantViolation("cover does not cover the ground set");
  // Iterated intersections, grown one cover element at a time.
  std::set<PointSet> frontier;
  for (Index c : cover_) frontier.insert(opens_[c]);
  std::set<PointSet> seen = frontier;
  while (!frontier.empty()) {
    std::set<PointSet> next;
    for (const auto& s : frontier)
      for (Index c : cover_) {
        auto t = intersect(s, opens_[c]);
        if (t.empty() || seen.count(t)) continue;
        if (!find(t)) throw InvariantViolation("an intersection of cover elements is not stored");
        seen.insert(t);
        next.insert(t);
      }
    frontier = std::move(next);
  }
}

CoverModel CoverModel::from_cover(Index points, const std::vector<PointSet>& cover_sets) {
  std::vector<PointSet> opens;
  std::set<PointSet> seen;
  std::vector<Index> cover;
  auto add = [&](PointSet s) {
    s = normalized(std::move(s));
    if (seen.insert(s).second) opens.push_back(s);
    return static_cast<Index>(std::find(opens.begin(), opens.end(), s) - opens.begin());
  };
  for (const auto& c : cover_sets) cover.push_back(add(c));
  for (std::size_t k = 2; k <= cover_sets.size(); ++k)
    for (const auto& t : index_tuples(cover_sets.size(), k)) {
      PointSet s = normalized(cover_sets[t[0]]);
      for (std::size_t i = 1; i < t.size(); ++i) s = intersect(s, normalized(cover_sets[t[i]]));
      if (!s.empty()) add(s);
    }
  PointSet all(points);
  std::iota(all.begin(), all.end(), Index{0});
  add(all);
  return CoverModel(points, std::move(opens), std::move(cover));
}

namespace {

std::set<PointSet> generated_lattice(const std::vector<PointSet>& cover_sets) {
  std::set<PointSet> all;
  for (const auto& c : cover_sets) all.insert(normalized(c));
  while (true) {
    std::set<PointSet> next = all;
    for (const auto& a : all)
      for (const auto& b : all) {
        auto i = intersect(a, b);
        if (!i.empty()) next.insert(i);
        PointSet u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        next.insert(u);
      }
    if (next.size() == all.size()) return all;
    all = std::move(next);
  }
}

}  // namespace

CoverModel CoverModel::lattice_from_cover(Index points, const std::vector<PointSet>& cover_sets) {
  auto model = from_cover(points, cover_sets);
  std::vector<PointSet> opens = model.opens_;
  for (const auto& s : generated_lattice(cover_sets))
    if (!model.find(s)) opens.push_back(s);
  return CoverModel(points, std::move(opens), model.cover_);
}

bool CoverModel::lattice_complete() const {
  std::vector<PointSet> sets;
  for (Index c : cover_) sets.push_back(opens_[c]);
  for (const auto& s : generated_lattice(sets))
    if (!find(s)) return false;
  return true;
}

std::optional<Index> CoverModel::find(const PointSet& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool CoverModel::subset(Index u, Index v) const {
  return std::includes(opens_[v].begin(), opens_[v].end(), opens_[u].begin(), opens_[u].end());
}

std::optional<Index> CoverModel::intersection(const std::vector<Index>& cover_positions) const {
  PointSet s = opens_[cover_[cover_positions.at(0)]];
  for (std::size_t i = 1; i < cover_positions.size(); ++i) s = intersect(s, opens_[cover_[cover_positions[i]]]);
  if (s.empty()) return std::nullopt;
  auto id = find(s);
  if (!id) throw ShapeError("missing intersection data");
  return id;
}

std::vector<Index> CoverModel::small_opens() const {
  std::vector<Index> out;
  for (Index u = 0; u < opens_.size(); ++u)
    for (Index c : cover_)
      if (subset(u, c)) {
        out.push_back(u);
        break;
      }
  return out;
}

// FinitePrecosheaf ---------------------------------------------------------------

FinitePrecosheaf::FinitePrecosheaf(std::shared_ptr<const CoverModel> model, std::vector<Index> dims,
                                   std::map<std::pair<Index, Index>, SparseMatrix> maps)
    : model_(std::move(model)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const auto& m = *model_;
  if (dims_.size() != m.open_count()) throw ShapeError("precosheaf needs one dimension per open");
  for (const auto& [uv, map] : maps_) {
    auto [u, v] = uv;
    if (u >= m.open_count() || v >= m.open_count() || u == v || !m.subset(u, v))
      throw ShapeError("extension map on a pair that is not a strict inclusion");
    if (map.rows() != dims_[v] || map.cols() != dims_[u]) throw ShapeError("extension map has the wrong shape");
  }
  // Fill remaining inclusions by increasing size gap.
  std::vector<std::pair<Index, Index>> missing;
  for (Index u = 0; u < m.open_count(); ++u)
    for (Index v = 0; v < m.open_count(); ++v)
      if (u != v && m.subset(u, v) && !maps_.count({u, v})) missing.emplace_back(u, v);
  std::stable_sort(missing.begin(), missing.end(), [&](auto a, auto b) {
    return m.open(a.second).size() - m.open(a.first).size() < m.open(b.second).size() - m.open(b.first).size();
  });
  for (auto [u, v] : missing) {
    bool done = false;
    for (Index w = 0; w < m.open_count() && !done; ++w) {
      if (w == u || w == v || !m.subset(u, w) || !m.subset(w, v)) continue;
      auto a = maps_.find({u, w});
      auto b = maps_.find({w, v});
      if (a == maps_.end() || b == maps_.end()) continue;
      maps_[{u, v}] = b->second * a->second;
      done = true;
    }
    if (!done)
      throw ShapeError("no extension map from " + open_name(m, u) + " to " + open_name(m, v));
  }
}

SparseMatrix FinitePrecosheaf::extension(Index u, Index v) const {
  if (u == v) return SparseMatrix::identity(dims_[u]);
  auto it = maps_.find({u, v});
  if (it == maps_.end()) throw ShapeError("no inclusion between the requested opens");
  return it->second;
}

CheckReport functoriality_check(const FinitePrecosheaf& p) {
  CheckReport r;
  r.check = "functoriality";
  const auto& m = p.model();
  long long chains = 0;
  for (const auto& [uv, map] : p.maps())
    for (Index w = 0; w < m.open_count(); ++w) {
      auto [u, v] = uv;
      if (w == v || !m.subset(v, w)) continue;
      ++chains;
      if (p.extension(v, w) * map != p.extension(u, w))
        r.fail("chain " + open_name(m, u) + " ⊂ " + open_name(m, v) + " ⊂ " + open_name(m, w));
    }
  r.params["chains"] = chains;
  return r;
}

CheckReport naturality_check(const CosheafMorphism& f) {
  CheckReport r;
  r.check = "naturality";
  const auto& m = f.source->model();
  if (f.source->model_ptr() != f.target->model_ptr() && m.opens() != f.target->model().opens())
    throw ShapeError("morphism between precosheaves on different models");
  if (f.components.size() != m.open_count()) throw ShapeError("morphism needs one component per open");
  for (Index u = 0; u < m.open_count(); ++u) {
    const auto& c = f.components[u];
    if (c.rows() != f.target->dim(u) || c.cols() != f.source->dim(u))
      throw ShapeError("morphism component has the wrong shape at " + open_name(m, u));
  }
  for (const auto& [uv, map] : f.source->maps()) {
    auto [u, v] = uv;
    if (f.target->extension(u, v) * f.components[u] != f.components[v] * map)
      r.fail("square " + open_name(m, u) + " ⊂ " + open_name(m, v) + " does not commute");
  }
  return r;
}

CheckReport cosheaf_axiom_check(const FinitePrecosheaf& p) {
  CheckReport r;
  r.check = "cosheaf_axiom";
  const auto& m = p.model();
  std::vector<Index> checked;
  for (Index v = 0; v < m.open_count(); ++v) {
    std::vector<Index> parts;
    bool stored = true;
    for (Index c : m.cover()) {
      auto t = intersect(m.open(c), m.open(v));
      if (t.empty()) continue;
      auto id = m.find(t);
      if (!id) {
        stored = false;
        break;
      }
      parts.push_back(*id);
    }
    if (!stored) continue;
    // Traces must also have stored pairwise intersections.
    for (std::size_t i = 0; i < parts.size() && stored; ++i)
      for (std::size_t j = i + 1; j < parts.size() && stored; ++j) {
        auto t = intersect(m.open(parts[i]), m.open(parts[j]));
        if (!t.empty() && !m.find(t)) stored = false;
      }
    if (!stored) continue;
    checked.push_back(v);
    check_cover_exact(p, v, parts, r);
  }
  r.params["opens_checked"] = checked;
  return r;
}

CheckReport flabby_check(const FinitePrecosheaf& p) {
  CheckReport r;
  r.check = "flabby";
  const auto& m = p.model();
  long long maps = 0;
  for (const auto& [uv, map] : p.maps()) {
    ++maps;
    if (rank(map) != map.cols())
      r.fail("extension " + open_name(m, uv.first) + " → " + open_name(m, uv.second) + " is not injective");
  }
  r.params["extension_maps"] = maps;
  return r;
}

ChainComplex cech_complex(const FinitePrecosheaf& p) {
  const auto& m = p.model();
  const Index n = m.cover().size();
  // Per degree r: the tuples with nonempty intersection and their opens.
  std::vector<std::vector<std::vector<Index>>> tuples(n);
  std::vector<std::vector<Index>> opens(n);
  std::vector<std::vector<Index>> offsets(n);
  std::vector<Index> dims(n, 0);
  for (Index r = 0; r < n; ++r) {
    std::vector<Index> sizes;
    for (auto& t : index_tuples(n, r + 1)) {
      auto u = m.intersection(t);
      if (!u) continue;
      tuples[r].push_back(t);
      opens[r].push_back(*u);
      sizes.push_back(p.dim(*u));
    }
    offsets[r] = offsets_of(sizes);
    dims[r] = offsets[r].back();
  }
  while (dims.size() > 1 && tuples[dims.size() - 1].empty()) {
    dims.pop_back();
    tuples.pop_back();
  }
  check_resource(std::accumulate(dims.begin(), dims.end(), Index{0}), "Čech complex");
  std::vector<SparseMatrix> diffs;
  for (std::size_t r = 1; r < dims.size(); ++r) {
    std::map<std::vector<Index>, Index> where;
    for (std::size_t i = 0; i < tuples[r - 1].size(); ++i) where[tuples[r - 1][i]] = i;
    std::vector<std::tuple<Index, Index, SparseMatrix>> pieces;
    for (std::size_t b = 0; b < tuples[r].size(); ++b) {
      const auto& t = tuples[r][b];
      for (std::size_t k = 0; k < t.size(); ++k) {
        auto face = t;
        face.erase(face.begin() + k);
        const Index a = where.at(face);
        auto ext = p.extension(opens[r][b], opens[r - 1][a]);
        pieces.emplace_back(a, b, k % 2 == 0 ? ext : ext.scaled(-1));
      }
    }
    diffs.push_back(assemble(offsets[r - 1], dims[r - 1], offsets[r], dims[r], pieces));
  }
  return ChainComplex(std::move(dims), std::move(diffs), true);
}

CheckReport cech_check(const FinitePrecosheaf& p) {
  CheckReport r;
  r.check = "cech";
  r.absorb(functoriality_check(p));
  auto c = cech_complex(p);
  r.absorb(verify_complex(c));
  auto h = homology(c, {false});
  for (auto b : h.betti) r.lhs_dims.push_back(static_cast<long long>(b));
  r.rhs_dims.assign(h.betti.size(), 0);
  r.rhs_dims[0] = static_cast<long long>(p.dim(p.model().whole()));
  const bool cosheaf = cosheaf_axiom_check(p).verdict;
  const bool flabby = flabby_check(p).verdict;
  const bool lattice = p.model().lattice_complete();
  r.params["cosheaf"] = cosheaf;
  r.params["flabby"] = flabby;
  r.params["lattice_complete"] = lattice;
  r.params["cover_size"] = p.model().cover().size();
  r.params["dims"] = c.dims();
  if (cosheaf && flabby && lattice && r.lhs_dims != r.rhs_dims) r.fail("flabby cosheaf with nonzero higher Čech homology");
  if (cosheaf && r.lhs_dims[0] != r.rhs_dims[0]) r.fail("cosheaf whose Čech H_0 differs from P(M)");
  return r;
}

FinitePrecosheaf cokernel_precosheaf(const CosheafMorphism& f, bool require_cosheaf) {
  auto nat = naturality_check(f);
  if (!nat.verdict) throw InvariantViolation("cokernel of a non-natural map: " + nat.details.front());
  const auto& tgt = *f.target;
  const auto& m = tgt.model();
  std::vector<QuotientStructure> q;
  std::vector<Index> dims;
  for (Index u = 0; u < m.open_count(); ++u) {
    q.push_back(quotient_structure(image_basis(f.components[u]), tgt.dim(u)));
    dims.push_back(q.back().projection.rows());
  }
  std::map<std::pair<Index, Index>, SparseMatrix> maps;
  for (const auto& [uv, map] : tgt.maps()) maps[uv] = q[uv.second].projection * map * q[uv.first].section;
  FinitePrecosheaf out(tgt.model_ptr(), std::move(dims), std::move(maps));
  auto fun = functoriality_check(out);
  if (!fun.verdict) throw InvariantViolation("cokernel is not functorial: " + fun.details.front());
  if (require_cosheaf) {
    auto ax = cosheaf_axiom_check(out);
    if (!ax.verdict) throw InvariantViolation("cokernel fails the cosheaf axiom: " + ax.details.front());
  }
  return out;
}

Coresolution cokernel_coresolution(const CosheafMorphism& f) {
  auto q = std::make_shared<FinitePrecosheaf>(cokernel_precosheaf(f));
  std::vector<SparseMatrix> proj;
  for (Index u = 0; u < q->model().open_count(); ++u)
    proj.push_back(quotient_structure(image_basis(f.components[u]), f.target->dim(u)).projection);
  return {q, {CosheafMorphism{f.target, q, std::move(proj)}, f}};
}

CoresolutionResult coresolution_homology(const Coresolution& res) {
  CoresolutionResult out;
  auto& r = out.report;
  r.check = "coresolution";
  if (res.maps.empty()) throw ShapeError("coresolution needs an augmentation");
  const auto& m = res.base->model();
  // terms[k] = P_k, maps[0] : P_0 → P, maps[k] : P_k → P_{k-1}.
  std::vector<std::shared_ptr<const FinitePrecosheaf>> terms;
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    const auto& f = res.maps[k];
    if (k == 0 ? f.target != res.base : f.target != terms[k - 1])
      throw ShapeError("coresolution maps do not chain");
    terms.push_back(f.source);
    r.absorb(naturality_check(f));
    auto fl = flabby_check(*f.source);
    if (!fl.verdict) throw InvariantViolation("coresolution term " + std::to_string(k) + " is not flabby");
    r.absorb(fl);
  }
  auto small = m.small_opens();
  for (Index u : small) {
    // P_L(U) → ... → P_0(U) → P(U) → 0 exact.
    std::vector<const SparseMatrix*> d;
    for (const auto& f : res.maps) d.push_back(&f.components[u]);
    if (rank(*d[0]) != res.base->dim(u)) r.fail(open_name(m, u) + ": augmentation not surjective");
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k + 1 < d.size() && !((*d[k]) * (*d[k + 1])).is_zero()) r.fail(open_name(m, u) + ": composite nonzero");
      const std::size_t kernel = d[k]->cols() - rank(*d[k]);
      const std::size_t incoming = k + 1 < d.size() ? rank(*d[k + 1]) : 0;
      if (kernel != incoming) r.fail(open_name(m, u) + ": not exact at term " + std::to_string(k));
    }
  }
  r.params["opens_checked"] = small;
  r.params["limitation"] = "local exactness checked on stored opens inside a cover element";
  // Global sections: C_k = P_k(M), d_k = maps[k](M) for k >= 1.
  const Index whole = m.whole();
  std::vector<Index> dims;
  for (const auto& t : terms) dims.push_back(t->dim(whole));
  std::vector<SparseMatrix> diffs;
  for (std::size_t k = 1; k < res.maps.size(); ++k) diffs.push_back(res.maps[k].components[whole]);
  ChainComplex global(std::move(dims), std::move(diffs), true);
  out.global = homology(global, {false});
  out.cech = homology(cech_complex(*res.base), {false});
  for (auto b : out.global.betti) r.lhs_dims.push_back(static_cast<long long>(b));
  for (auto b : out.cech.betti) r.rhs_dims.push_back(static_cast<long long>(b));
  const std::size_t len = std::max(r.lhs_dims.size(), r.rhs_dims.size());
  auto padded = [&](std::vector<long long> v) {
    v.resize(len, 0);
    return v;
  };
  if (padded(r.lhs_dims) != padded(r.rhs_dims)) r.fail("global-section homology differs from Čech homology");
  return out;
}

// Models ---------------------------------------------------------------

namespace cech_models {

FinitePrecosheaf extension_by_zero(Rng& rng, Index max_points, Index cover_size) {
  const Index points = static_cast<Index>(rng.between(3, static_cast<long>(max_points)));
  std::vector<PointSet> cover(cover_size);
  for (Index x = 0; x < points; ++x) {
    cover[rng.below(cover_size)].push_back(x);
    for (auto& c : cover)
      if (rng.below(3) == 0) c.push_back(x);
  }
  for (auto& c : cover)
    if (c.empty()) c.push_back(rng.below(points));
  auto model = std::make_shared<CoverModel>(CoverModel::lattice_from_cover(points, cover));
  std::vector<Index> mult(points);
  for (auto& v : mult) v = rng.below(3);
  // Open U: ⊕_{x ∈ U} Q^{mult x}, then a random basis change g_U.
  std::vector<Index> dims;
  std::vector<std::map<Index, Index>> slot(model->open_count());
  std::vector<std::pair<SparseMatrix, SparseMatrix>> basis;
  for (Index u = 0; u < model->open_count(); ++u) {
    Index d = 0;
    for (Index x : model->open(u)) {
      slot[u][x] = d;
      d += mult[x];
    }
    dims.push_back(d);
    basis.push_back(random_invertible(rng, d));
  }
  std::map<std::pair<Index, Index>, SparseMatrix> maps;
  for (Index u = 0; u < model->open_count(); ++u)
    for (Index v = 0; v < model->open_count(); ++v) {
      if (u == v || !model->subset(u, v)) continue;
      std::vector<Triplet> trips;
      for (Index x : model->open(u))
        for (Index i = 0; i < mult[x]; ++i) trips.push_back({slot[v][x] + i, slot[u][x] + i, 1});
      auto e = SparseMatrix::from_triplets(dims[v], dims[u], std::move(trips));
      // Coordinates: y = g_V^{-1} E g_U x.
      maps[{u, v}] = basis[v].second * e * basis[u].first;
    }
  return FinitePrecosheaf(model, std::move(dims), std::move(maps));
}

namespace {

/// Vertex set plus every edge touching it.
PointSet star_of(const std::vector<Index>& vs, Index vertices, const std::vector<std::pair<Index, Index>>& edges) {
  PointSet s(vs.begin(), vs.end());
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (std::find(vs.begin(), vs.end(), edges[e].first) != vs.end() ||
        std::find(vs.begin(), vs.end(), edges[e].second) != vs.end())
      s.push_back(vertices + e);
  return normalized(s);
}

}  // namespace

std::shared_ptr<const CoverModel> graph_model(Index vertices, const std::vector<std::pair<Index, Index>>& edges) {
  std::vector<PointSet> cover;
  for (Index v = 0; v < vertices; ++v) cover.push_back(star_of({v}, vertices, edges));
  return std::make_shared<CoverModel>(CoverModel::from_cover(vertices + edges.size(), cover));
}

std::shared_ptr<const CoverModel> circle_model(Index vertices, bool lattice) {
  if (vertices < 3) throw ShapeError("circle model needs at least 3 vertices");
  auto edges = cycle_edges(vertices);
  std::vector<PointSet> cover;
  for (Index a = 0; a < 3; ++a) {
    const Index begin = a * vertices / 3, end = (a + 1) * vertices / 3;
    std::vector<Index> vs;
    for (Index v = begin; v <= end; ++v) vs.push_back(v % vertices);
    cover.push_back(star_of(vs, vertices, edges));
  }
  const Index points = vertices + edges.size();
  return std::make_shared<CoverModel>(lattice ? CoverModel::lattice_from_cover(points, cover)
                                              : CoverModel::from_cover(points, cover));
}

CosheafMorphism difference_operator(std::shared_ptr<const CoverModel> model, Index vertices,
                                    const std::vector<std::pair<Index, Index>>& edges) {
  // Ω^0_c(U): functions on vertices of U; Ω^1_c(U): functions on edges of U.
  const auto& m = *model;
  auto make = [&](bool edge_points) {
    std::vector<Index> dims;
    std::vector<std::map<Index, Index>> slot(m.open_count());
    for (Index u = 0; u < m.open_count(); ++u) {
      Index d = 0;
      for (Index x : m.open(u))
        if ((x >= vertices) == edge_points) slot[u][x] = d++;
      dims.push_back(d);
    }
    std::map<std::pair<Index, Index>, SparseMatrix> maps;
    for (Index u = 0; u < m.open_count(); ++u)
      for (Index v = 0; v < m.open_count(); ++v) {
        if (u == v || !m.subset(u, v)) continue;
        std::vector<Triplet> trips;
        for (auto [x, i] : slot[u]) trips.push_back({slot[v].at(x), i, 1});
        maps[{u, v}] = SparseMatrix::from_triplets(dims[v], dims[u], std::move(trips));
      }
    return std::make_pair(std::make_shared<FinitePrecosheaf>(model, dims, std::move(maps)), slot);
  };
  auto [omega0, slot0] = make(false);
  auto [omega1, slot1] = make(true);
  std::vector<SparseMatrix> comps;
  for (Index u = 0; u < m.open_count(); ++u) {
    std::vector<Triplet> trips;
    for (auto [x, i] : slot0[u])
      for (std::size_t e = 0; e < edges.size(); ++e) {
        // (df)(e) = f(head) - f(tail) for e = (tail, head).
        if (edges[e].second == x) trips.push_back({slot1[u].at(vertices + e), i, 1});
        if (edges[e].first == x) trips.push_back({slot1[u].at(vertices + e), i, -1});
      }
    comps.push_back(SparseMatrix::from_triplets(omega1->dim(u), omega0->dim(u), std::move(trips)));
  }
  return {omega0, omega1, std::move(comps)};
}

std::pair<Index, std::vector<std::pair<Index, Index>>> random_graph(Rng& rng, Index max_vertices) {
  const Index n = static_cast<Index>(rng.between(2, static_cast<long>(max_vertices)));
  std::vector<std::pair<Index, Index>> edges;
  for (Index v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (rng.below(4) == 0 && std::find(edges.begin(), edges.end(), std::make_pair(u, v)) == edges.end())
        edges.emplace_back(u, v);
  return {n, edges};
}

std::vector<std::pair<Index, Index>> cycle_edges(Index n) {
  std::vector<std::pair<Index, Index>> edges;
  for (Index i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return edges;
}

}  // namespace cech_models

}  // namespace cyclab
