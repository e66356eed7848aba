#pragma once

#include "toric/cone.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace toric {

/// A validated rational polyhedral fan. Immutable after construction.
class Fan {
 public:
  /// Builds and validates the fan generated by the given cones (and their
  /// faces). Non-maximal inputs are absorbed. Throws InvalidFanError listing
  /// every non-strictly-convex cone and every incompatible pair.
  static Fan from_cones(std::size_t rank, std::vector<Cone> cones);

  std::size_t rank() const noexcept { return rank_; }
  /// Inclusion-maximal cones ordered by lex rays.
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }
  /// Face closure ordered by (dimension, lex rays); all_cones()[0] is {0}.
  const std::vector<Cone>& all_cones() const noexcept { return all_cones_; }
  /// Primitive generators u_rho of the rays, lex-sorted.
  const std::vector<LatticeVector>& ray_generators() const noexcept { return rays_; }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.max_cones_ == b.max_cones_;
  }

 private:
  Fan() = default;

  std::size_t rank_ = 0;
  std::vector<Cone> max_cones_;
  std::vector<Cone> all_cones_;
  std::vector<LatticeVector> rays_;
};

/// Fan from ray vectors and index lists of maximal cones. Rays are
/// primitivized; an empty index list denotes the zero cone.
Fan fan_from_max_cones(std::size_t rank, std::span<const std::vector<std::size_t>> cones,
                       std::span<const LatticeVector> rays);

bool support_contains(const Fan& fan, const RationalVector& x);
bool support_contains(const Fan& fan, const LatticeVector& x);

bool is_complete(const Fan& fan);

struct SmoothnessReport {
  bool smooth;
  std::vector<bool> per_cone;  // parallel to max_cones()
};
SmoothnessReport is_smooth_fan(const Fan& fan);

/// |a| is a subset of |b|.
bool support_subset(const Fan& a, const Fan& b);

bool is_subdivision(const Fan& refined, const Fan& coarse);

struct FanMorphism {
  IntMatrix matrix;  // rank(target) x rank(source)
  Fan source;
  Fan target;
};

struct MorphismCheck {
  bool is_morphism;
  /// For each source max cone, the index into target.all_cones() of the
  /// smallest target cone containing its image (absent if none exists).
  std::vector<std::optional<std::size_t>> witness;
};
MorphismCheck is_fan_morphism(const FanMorphism& phi);

Fan stellar_subdivide(const Fan& fan, const LatticeVector& ray);

inline constexpr std::size_t kDefaultResolveLimit = 10000;
Fan resolve(const Fan& fan, std::size_t max_subdivisions = kDefaultResolveLimit);

struct Completion {
  Fan fan;
  bool subdivided;
};
Completion complete_fan(const Fan& fan);

/// Applies an integer matrix to every ray (used for lattice automorphisms).
Fan transform(const Fan& fan, const IntMatrix& u);

}  // namespace toric
