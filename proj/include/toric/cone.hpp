#pragma once

#include "toric/linalg.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace toric {

/// A rational polyhedral cone, stored with both of its representations.
///
/// V-side: primitive extreme rays (chosen orthogonal to the lineality space,
/// lex-sorted) plus an HNF basis of the lineality lattice. H-side: primitive
/// inward facet normals (chosen inside the cone's linear span, lex-sorted)
/// plus an HNF basis of the lattice of equations vanishing on the cone.
/// Two cones are equal exactly when their canonical data agree.
class Cone {
 public:
  /// Nonnegative span of `generators` (may be empty: the zero cone).
  static Cone from_rays(std::size_t rank, std::span<const LatticeVector> generators);
  /// {x : <a,x> >= 0 for every inequality, <e,x> = 0 for every equation}.
  static Cone from_inequalities(std::size_t rank, std::span<const LatticeVector> inequalities,
                                std::span<const LatticeVector> equations = {});
  static Cone zero(std::size_t rank);
  static Cone whole_space(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<LatticeVector>& lineality() const noexcept { return lineality_; }
  const std::vector<LatticeVector>& facet_normals() const noexcept { return facet_normals_; }
  const std::vector<LatticeVector>& span_equations() const noexcept { return span_equations_; }

  std::size_t dim() const noexcept { return rank_ - span_equations_.size(); }
  bool is_strictly_convex() const noexcept { return lineality_.empty(); }
  bool is_zero() const noexcept { return rays_.empty() && lineality_.empty(); }
  bool is_full_dimensional() const noexcept { return span_equations_.empty(); }

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  Cone() = default;
  friend Cone dual(const Cone&);
  friend Cone make_canonical_cone(std::size_t, std::vector<LatticeVector>, std::vector<LatticeVector>,
                                  std::vector<LatticeVector>, std::vector<LatticeVector>);

  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lineality_;
  std::vector<LatticeVector> facet_normals_;
  std::vector<LatticeVector> span_equations_;
};

/// Orders cones by (dimension, rays, lineality); used for deterministic lists.
bool cone_less(const Cone& a, const Cone& b);

/// The dual cone in M_R. Both representations are already stored, so this
/// swaps them.
Cone dual(const Cone& sigma);

/// All faces of a strictly convex cone, from {0} up to sigma itself, ordered
/// by (dimension, lex rays). Throws NotPointed.
std::vector<Cone> faces(const Cone& sigma);

/// Faces of a strictly convex cone as index sets into sigma.rays().
std::vector<std::vector<std::size_t>> face_ray_indices(const Cone& sigma);

bool is_face_of(const Cone& tau, const Cone& sigma);

/// True iff the rays of sigma extend to a Z-basis. Throws NotPointed.
bool is_smooth(const Cone& sigma);

enum class Position { RelativeInterior, Boundary, Outside };

struct Membership {
  bool inside;
  Position position;
};

Membership contains(const Cone& sigma, const RationalVector& x);
Membership contains(const Cone& sigma, const LatticeVector& x);
/// tau is a subset of sigma (checked on tau's generators).
bool is_subcone(const Cone& tau, const Cone& sigma);

Cone intersect(const Cone& sigma, const Cone& tau);
/// sigma intersected with the closed halfspace <h, x> >= 0.
Cone intersect_halfspace(const Cone& sigma, const LatticeVector& h);

/// Sum of the rays; lies in the relative interior. The zero cone gives 0.
RationalVector relint_point(const Cone& sigma);
LatticeVector relint_lattice_point(const Cone& sigma);

/// Lattice points of the half-open parallelepiped {sum l_i u_i : 0 <= l_i < 1}
/// spanned by the rays of a simplicial pointed cone, excluding 0, together
/// with their coefficient vectors.
struct ParallelepipedPoint {
  LatticeVector point;
  RationalVector coefficients;
};
std::vector<ParallelepipedPoint> parallelepiped_points(const Cone& sigma);

/// Lattice index of the rays of a simplicial pointed cone in span(sigma) cap Z^p.
Int multiplicity(const Cone& sigma);

std::string to_string(const Cone& sigma);

}  // namespace toric
