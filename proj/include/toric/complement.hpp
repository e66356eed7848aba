#pragma once

#include "toric/cone.hpp"
#include "toric/fan.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace toric {

/// Complete fan cut out by the hyperplane arrangement of a fan's cones.
/// Every cone of the fan is a union of faces of the regions, so a region is
/// either inside |fan| or meets it only along its boundary.
struct ArrangementFan {
  std::size_t rank = 0;
  std::vector<LatticeVector> hyperplanes;  // primitive, first nonzero entry positive, lex-sorted
  std::vector<Cone> regions;               // full-dimensional, lex-sorted by rays
  std::vector<bool> inside;                // region lies in |fan|
};

/// Hyperplanes spanned by facets and span equations of `cones`.
std::vector<LatticeVector> arrangement_hyperplanes(std::span<const Cone> cones);
/// Chambers of a central arrangement, built by successive halfspace splits.
std::vector<Cone> arrangement_chambers(std::size_t rank, std::span<const LatticeVector> hyperplanes);

/// Throws RankTooSmall for rank < 2.
ArrangementFan arrangement(const Fan& fan);

struct ComplementComponent {
  std::size_t id;
  std::vector<std::size_t> region_ids;  // indices into ArrangementFan::regions
  Cone closure_dual;                    // dual of the closure, in M_R
  bool concave;                         // closure_dual == {0}
};

struct ComplementAnalysis {
  ArrangementFan arrangement;
  std::vector<ComplementComponent> components;

  std::size_t n() const noexcept { return components.size(); }
};

/// Connected components of R^p minus |fan|. Two outside regions are joined
/// when their common face has positive dimension and its relative interior
/// misses |fan|: such a point has a whole ball outside the closed set |fan|.
ComplementAnalysis complement_components(const Fan& fan);

/// Intersection of the duals of the given closed regions.
Cone closure_dual(const ArrangementFan& arrangement, std::span<const std::size_t> region_ids);

inline bool is_concave(const ComplementComponent& component) { return component.closure_dual.is_zero(); }

}  // namespace toric
