#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cyclab/complex.hpp"

namespace cyclab {

class Rng;

using PointSet = std::vector<Index>;

/// Finite ground set, a family of stored opens and a distinguished cover.
class CoverModel {
 public:
  CoverModel() = default;
  /// Opens are sorted and deduplicated point lists; `cover` holds open ids.
  /// Throws InvariantViolation unless the cover is a cover of the whole
  /// ground set, the ground set itself is stored, and every nonempty
  /// iterated intersection of cover elements is stored.
  CoverModel(Index points, std::vector<PointSet> opens, std::vector<Index> cover);
  /// Stores the cover sets, all their nonempty intersections and the ground set.
  static CoverModel from_cover(Index points, const std::vector<PointSet>& cover_sets);
  /// Stores the whole lattice generated by the cover sets under ∩ and ∪.
  static CoverModel lattice_from_cover(Index points, const std::vector<PointSet>& cover_sets);

  Index points() const { return points_; }
  Index open_count() const { return opens_.size(); }
  const PointSet& open(Index id) const { return opens_[id]; }
  const std::vector<PointSet>& opens() const { return opens_; }
  const std::vector<Index>& cover() const { return cover_; }
  Index whole() const { return whole_; }
  std::optional<Index> find(const PointSet& s) const;
  bool subset(Index u, Index v) const;
  /// Ids of the intersection of the listed cover positions: nullopt when empty.
  std::optional<Index> intersection(const std::vector<Index>& cover_positions) const;
  /// Opens contained in at least one cover element.
  std::vector<Index> small_opens() const;
  /// Every nonempty set built from cover elements by ∩ and ∪ is stored.
  bool lattice_complete() const;

 private:
  Index points_ = 0;
  std::vector<PointSet> opens_;
  std::vector<Index> cover_;
  std::map<PointSet, Index> lookup_;
  Index whole_ = 0;
};

/// Finite-dimensional precosheaf on the stored opens of a model.
class FinitePrecosheaf {
 public:
  FinitePrecosheaf() = default;
  /// `maps` keyed by (U, V) with U ⊊ V. Missing inclusions are filled by
  /// composing through an intermediate open; an inclusion with no stored
  /// intermediate must be given. Throws ShapeError on missing or misshapen maps.
  FinitePrecosheaf(std::shared_ptr<const CoverModel> model, std::vector<Index> dims,
                   std::map<std::pair<Index, Index>, SparseMatrix> maps);

  const CoverModel& model() const { return *model_; }
  std::shared_ptr<const CoverModel> model_ptr() const { return model_; }
  Index dim(Index open) const { return dims_[open]; }
  const std::vector<Index>& dims() const { return dims_; }
  /// ι_U^V for U ⊆ V.
  SparseMatrix extension(Index u, Index v) const;
  const std::map<std::pair<Index, Index>, SparseMatrix>& maps() const { return maps_; }

 private:
  std::shared_ptr<const CoverModel> model_;
  std::vector<Index> dims_;
  std::map<std::pair<Index, Index>, SparseMatrix> maps_;
};

/// Natural transformation: components[U] maps source(U) to target(U).
struct CosheafMorphism {
  std::shared_ptr<const FinitePrecosheaf> source;
  std::shared_ptr<const FinitePrecosheaf> target;
  std::vector<SparseMatrix> components;
};

/// ι_V^W ι_U^V = ι_U^W on every stored chain U ⊆ V ⊆ W.
CheckReport functoriality_check(const FinitePrecosheaf& p);
CheckReport naturality_check(const CosheafMorphism& f);

/// Exactness of ⊕ P(U_i ∩ U_j) → ⊕ P(U_i) → P(V) → 0 for V the ground set
/// and every stored V whose traces U_i ∩ V of the cover are all stored.
CheckReport cosheaf_axiom_check(const FinitePrecosheaf& p);
/// Every extension map injective.
CheckReport flabby_check(const FinitePrecosheaf& p);

/// Č_r = ⊕_{i_0 < ... < i_r} P(U_{i_0} ∩ ... ∩ U_{i_r}), empty intersections omitted.
ChainComplex cech_complex(const FinitePrecosheaf& p);
/// Čech betti against (dim P(M), 0, ...); the verdict demands equality only
/// for flabby cosheaves on lattice-complete models, where injectivity is
/// tested on unions as well.
CheckReport cech_check(const FinitePrecosheaf& p);

/// U ↦ target(U) / im φ_U with induced extensions; throws InvariantViolation
/// when φ is not natural or the result fails the cosheaf axiom.
FinitePrecosheaf cokernel_precosheaf(const CosheafMorphism& f, bool require_cosheaf = true);

/// 0 ← P ← P_0 ← P_1 ← ...: augmentation[0] : P_0 → P, then d_k : P_k → P_{k-1}.
struct Coresolution {
  std::shared_ptr<const FinitePrecosheaf> base;
  std::vector<CosheafMorphism> maps;
};

struct CoresolutionResult {
  HomologyResult global;
  HomologyResult cech;
  /// Full report: flabbiness, naturality, local exactness, agreement.
  CheckReport report;
};

/// coker f ← target ← source, with the quotient projection as augmentation.
Coresolution cokernel_coresolution(const CosheafMorphism& f);

/// Homology of P_•(M). Terms must be flabby and the sequence exact on every
/// open contained in a cover element; agreement with direct Čech homology is checked.
CoresolutionResult coresolution_homology(const Coresolution& r);

namespace cech_models {
/// Functions on points, extension by zero, with point multiplicities and a
/// random basis per open, on the lattice-complete model of a random cover.
FinitePrecosheaf extension_by_zero(Rng& rng, Index max_points = 7, Index cover_size = 3);
/// Face poset of a graph (vertices then edges as points), open stars of
/// vertices as cover elements, opens the stars, edges and the whole set.
std::shared_ptr<const CoverModel> graph_model(Index vertices, const std::vector<std::pair<Index, Index>>& edges);
/// Cycle of `vertices` vertices covered by three arcs; with `lattice` the
/// unions of arcs and overlaps are stored too.
std::shared_ptr<const CoverModel> circle_model(Index vertices, bool lattice = false);
/// Compactly supported 0-forms, 1-forms and the difference operator on a
/// graph-type model: returns (d : Ω⁰ → Ω¹).
CosheafMorphism difference_operator(std::shared_ptr<const CoverModel> model, Index vertices,
                                    const std::vector<std::pair<Index, Index>>& edges);
/// Random connected simple graph with at most max_vertices vertices.
std::pair<Index, std::vector<std::pair<Index, Index>>> random_graph(Rng& rng, Index max_vertices = 6);
/// Edges of the cycle on n vertices, edge i joining i and i+1 mod n.
std::vector<std::pair<Index, Index>> cycle_edges(Index n);
}  // namespace cech_models

}  // namespace cyclab
