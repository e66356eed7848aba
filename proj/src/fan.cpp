#include "toric/fan.hpp"

#include "toric/complement.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace toric {

namespace {

bool max_cone_less(const Cone& a, const Cone& b) {
  if (a.rays() != b.rays()) return a.rays() < b.rays();
  return a.dim() < b.dim();
}

}  // namespace

Fan Fan::from_cones(std::size_t rank, std::vector<Cone> cones) {
  if (cones.empty()) cones.push_back(Cone::zero(rank));
  for (const auto& c : cones)
    if (c.rank() != rank) throw Error(ErrorKind::DimensionMismatch, "cone " + to_string(c) + " has the wrong rank");

  std::vector<std::string> diagnostics;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (!cones[i].is_strictly_convex())
      diagnostics.push_back("cone " + std::to_string(i) + " " + to_string(cones[i]) + " is not strictly convex");
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!cones[i].is_strictly_convex() || !cones[j].is_strictly_convex() || cones[i] == cones[j]) continue;
      const Cone meet = intersect(cones[i], cones[j]);
      const bool face_i = is_face_of(meet, cones[i]);
      const bool face_j = is_face_of(meet, cones[j]);
      if (face_i && face_j) continue;
      std::string which = !face_i && !face_j ? "either cone"
                          : !face_i          ? "cone " + std::to_string(i)
                                             : "cone " + std::to_string(j);
      diagnostics.push_back("cones " + std::to_string(i) + " and " + std::to_string(j) + ": intersection " +
                            to_string(meet) + " is not a face of " + which);
    }
  if (!diagnostics.empty()) throw InvalidFanError(std::move(diagnostics));

  std::sort(cones.begin(), cones.end(), max_cone_less);
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());

  Fan fan;
  fan.rank_ = rank;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones.size() && maximal; ++j)
      if (i != j && cones[i].dim() < cones[j].dim() && is_subcone(cones[i], cones[j])) maximal = false;
    if (maximal) fan.max_cones_.push_back(cones[i]);
  }

  for (const auto& c : fan.max_cones_) {
    for (auto& f : faces(c)) fan.all_cones_.push_back(std::move(f));
    fan.rays_.insert(fan.rays_.end(), c.rays().begin(), c.rays().end());
  }
  std::sort(fan.all_cones_.begin(), fan.all_cones_.end(), cone_less);
  fan.all_cones_.erase(std::unique(fan.all_cones_.begin(), fan.all_cones_.end()), fan.all_cones_.end());
  std::sort(fan.rays_.begin(), fan.rays_.end());
  fan.rays_.erase(std::unique(fan.rays_.begin(), fan.rays_.end()), fan.rays_.end());
  return fan;
}

Fan fan_from_max_cones(std::size_t rank, std::span<const std::vector<std::size_t>> cones,
                       std::span<const LatticeVector> rays) {
  std::vector<LatticeVector> prim;
  prim.reserve(rays.size());
  for (const auto& r : rays) {
    if (r.size() != rank)
      throw Error(ErrorKind::DimensionMismatch, "ray " + to_string(r) + " does not have length " + std::to_string(rank));
    prim.push_back(primitivize(r).primitive);
  }
  std::vector<Cone> built;
  for (const auto& idx : cones) {
    std::vector<LatticeVector> gens;
    for (auto i : idx) {
      if (i >= prim.size())
        throw Error(ErrorKind::DimensionMismatch, "ray index " + std::to_string(i) + " out of range");
      gens.push_back(prim[i]);
    }
    built.push_back(Cone::from_rays(rank, gens));
  }
  return Fan::from_cones(rank, std::move(built));
}

bool support_contains(const Fan& fan, const RationalVector& x) {
  return std::any_of(fan.max_cones().begin(), fan.max_cones().end(),
                     [&](const Cone& c) { return contains(c, x).inside; });
}

bool support_contains(const Fan& fan, const LatticeVector& x) { return support_contains(fan, to_rational(x)); }

bool is_complete(const Fan& fan) {
  if (fan.rank() == 1) {
    const auto& rays = fan.ray_generators();
    return rays.size() == 2;
  }
  return complement_components(fan).n() == 0;
}

SmoothnessReport is_smooth_fan(const Fan& fan) {
  SmoothnessReport report{true, {}};
  for (const auto& c : fan.max_cones()) {
    const bool s = is_smooth(c);
    report.per_cone.push_back(s);
    report.smooth = report.smooth && s;
  }
  return report;
}

bool support_subset(const Fan& a, const Fan& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::DimensionMismatch, "fans of different rank");
  // On the common arrangement both supports are unions of closed faces, so it
  // suffices to compare one relative-interior point per face.
  std::vector<Cone> all = a.max_cones();
  all.insert(all.end(), b.max_cones().begin(), b.max_cones().end());
  const auto hyperplanes = arrangement_hyperplanes(all);
  std::set<LatticeVector> checked;
  for (const auto& chamber : arrangement_chambers(a.rank(), hyperplanes)) {
    for (const auto& idx : face_ray_indices(chamber)) {
      LatticeVector p(a.rank());
      for (auto i : idx) p = add(p, chamber.rays()[i]);
      if (!checked.insert(p).second) continue;
      if (support_contains(a, p) && !support_contains(b, p)) return false;
    }
  }
  return true;
}

bool is_subdivision(const Fan& refined, const Fan& coarse) {
  if (refined.rank() != coarse.rank()) return false;
  for (const auto& c : refined.max_cones()) {
    const bool covered = std::any_of(coarse.max_cones().begin(), coarse.max_cones().end(),
                                     [&](const Cone& d) { return is_subcone(c, d); });
    if (!covered) return false;
  }
  return support_subset(coarse, refined);
}

MorphismCheck is_fan_morphism(const FanMorphism& phi) {
  if (phi.matrix.rows() != phi.target.rank() || phi.matrix.cols() != phi.source.rank())
    throw Error(ErrorKind::DimensionMismatch, "morphism matrix shape does not match the fans");
  MorphismCheck check{true, {}};
  const auto& targets = phi.target.all_cones();
  for (const auto& c : phi.source.max_cones()) {
    std::vector<LatticeVector> images;
    for (const auto& r : c.rays()) images.push_back(phi.matrix * r);
    std::optional<std::size_t> witness;
    // all_cones is sorted by dimension, so the first hit is the smallest.
    for (std::size_t t = 0; t < targets.size() && !witness; ++t) {
      const bool all_in = std::all_of(images.begin(), images.end(),
                                      [&](const LatticeVector& v) { return contains(targets[t], v).inside; });
      if (all_in) witness = t;
    }
    check.is_morphism = check.is_morphism && witness.has_value();
    check.witness.push_back(witness);
  }
  return check;
}

Fan stellar_subdivide(const Fan& fan, const LatticeVector& ray) {
  if (ray.size() != fan.rank()) throw Error(ErrorKind::DimensionMismatch, "ray has the wrong length");
  const LatticeVector r = primitivize(ray).primitive;
  if (!support_contains(fan, r)) throw Error(ErrorKind::RayOutsideSupport, to_string(r) + " is not in the support");
  if (std::binary_search(fan.ray_generators().begin(), fan.ray_generators().end(), r)) return fan;

  std::vector<Cone> cones;
  for (const auto& c : fan.max_cones()) {
    if (!contains(c, r).inside) {
      cones.push_back(c);
      continue;
    }
    // Join r with every facet that does not contain it.
    for (const auto& n : c.facet_normals()) {
      if (dot(n, r) == 0) continue;
      std::vector<LatticeVector> gens{r};
      for (const auto& u : c.rays())
        if (dot(n, u) == 0) gens.push_back(u);
      cones.push_back(Cone::from_rays(fan.rank(), gens));
    }
  }
  return Fan::from_cones(fan.rank(), std::move(cones));
}

namespace {

// Nonzero lattice point of the half-open parallelepiped with the smallest
// coefficient sum, ties broken lexicographically.
LatticeVector best_parallelepiped_point(const Cone& c) {
  const auto points = parallelepiped_points(c);
  const ParallelepipedPoint* best = nullptr;
  Rat best_sum;
  for (const auto& p : points) {
    Rat s = 0;
    for (const auto& l : p.coefficients) s += l;
    if (!best || s < best_sum || (s == best_sum && p.point < best->point)) {
      best = &p;
      best_sum = s;
    }
  }
  if (!best) throw Error(ErrorKind::Internal, "singular cone without interior parallelepiped points");
  return best->point;
}

}  // namespace

Fan resolve(const Fan& fan, std::size_t max_subdivisions) {
  Fan current = fan;
  for (std::size_t step = 0;; ++step) {
    const Cone* singular = nullptr;
    for (const auto& c : current.max_cones())
      if (!is_smooth(c)) {
        singular = &c;
        break;
      }
    if (!singular) return current;
    if (step >= max_subdivisions)
      throw Error(ErrorKind::IterationLimitExceeded,
                  "resolution did not finish within " + std::to_string(max_subdivisions) + " subdivisions");
    LatticeVector r;
    if (singular->rays().size() != singular->dim()) {
      r = primitivize(relint_lattice_point(*singular)).primitive;
    } else {
      r = best_parallelepiped_point(*singular);
    }
    current = stellar_subdivide(current, r);
  }
}

namespace {

int half_plane(const LatticeVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

Int cross(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool angle_less(const LatticeVector& a, const LatticeVector& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

Completion complete_rank_two(const Fan& fan) {
  std::vector<LatticeVector> rays = fan.ray_generators();
  auto covered = [&](const LatticeVector& a, const LatticeVector& b) {
    for (const auto& c : fan.max_cones())
      if (c.dim() == 2 && cross(a, b) > 0 &&
          std::find(c.rays().begin(), c.rays().end(), a) != c.rays().end() &&
          std::find(c.rays().begin(), c.rays().end(), b) != c.rays().end())
        return true;
    return false;
  };

  for (;;) {
    if (rays.empty()) {
      rays.push_back({1, 0});
      continue;
    }
    std::sort(rays.begin(), rays.end(), angle_less);
    bool inserted = false;
    for (std::size_t i = 0; i < rays.size() && !inserted; ++i) {
      const auto& a = rays[i];
      const auto& b = rays[(i + 1) % rays.size()];
      if (rays.size() > 1 && (covered(a, b) || cross(a, b) > 0)) continue;
      // Reflex, straight or full-turn gap: insert a rotated by 90 degrees.
      rays.push_back({-a[1], a[0]});
      inserted = true;
    }
    if (!inserted) break;
  }

  std::vector<Cone> cones = fan.max_cones();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& a = rays[i];
    const auto& b = rays[(i + 1) % rays.size()];
    if (!covered(a, b)) cones.push_back(Cone::from_rays(2, std::vector<LatticeVector>{a, b}));
  }
  return {Fan::from_cones(2, std::move(cones)), false};
}

}  // namespace

Completion complete_fan(const Fan& fan) {
  if (fan.rank() == 1) {
    std::vector<Cone> cones;
    for (long s : {1L, -1L}) cones.push_back(Cone::from_rays(1, std::vector<LatticeVector>{{s}}));
    return {Fan::from_cones(1, std::move(cones)), false};
  }
  if (is_complete(fan)) return {fan, false};
  if (fan.rank() == 2) return complete_rank_two(fan);
  const auto hyperplanes = arrangement_hyperplanes(fan.max_cones());
  return {Fan::from_cones(fan.rank(), arrangement_chambers(fan.rank(), hyperplanes)), true};
}

Fan transform(const Fan& fan, const IntMatrix& u) {
  std::vector<Cone> cones;
  for (const auto& c : fan.max_cones()) {
    std::vector<LatticeVector> gens;
    for (const auto& r : c.rays()) gens.push_back(u * r);
    cones.push_back(Cone::from_rays(u.rows(), gens));
  }
  return Fan::from_cones(u.rows(), std::move(cones));
}

}  // namespace toric
