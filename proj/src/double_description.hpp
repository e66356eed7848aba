#pragma once

#include "toric/linalg.hpp"

#include <span>
#include <vector>

namespace toric::detail {

/// Generator (V-)representation: the cone is span(lineality) + cone(rays).
struct Generators {
  std::vector<LatticeVector> lineality;
  std::vector<LatticeVector> rays;
};

/// Irredundant generators of {x : <a,x> >= 0 for a in inequalities,
/// <e,x> = 0 for e in equations}, by incremental constraint insertion.
/// Rays are primitive representatives of the extreme rays modulo lineality.
Generators double_description(std::size_t rank, std::span<const LatticeVector> inequalities,
                              std::span<const LatticeVector> equations);

}  // namespace toric::detail
