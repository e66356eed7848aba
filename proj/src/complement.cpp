#include "toric/complement.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace toric {

namespace {

LatticeVector normalized_hyperplane(const LatticeVector& h) {
  auto p = primitivize(h).primitive;
  for (const auto& x : p) {
    if (x > 0) break;
    if (x < 0) return negated(p);
  }
  return p;
}

enum class Side { NonNegative, NonPositive, Both };

Side side_of(const Cone& region, const LatticeVector& h) {
  for (const auto& l : region.lineality())
    if (dot(h, l) != 0) return Side::Both;
  bool pos = false, neg = false;
  for (const auto& r : region.rays()) {
    const Int v = dot(h, r);
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  if (pos && neg) return Side::Both;
  return neg ? Side::NonPositive : Side::NonNegative;
}

bool region_less(const Cone& a, const Cone& b) {
  if (a.rays() != b.rays()) return a.rays() < b.rays();
  return a.lineality() < b.lineality();
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Relative interior point of the common face of two chambers, or nothing
// when they meet only at the origin.
std::optional<LatticeVector> common_face_point(const Cone& a, const Cone& b) {
  if (a.is_strictly_convex() && b.is_strictly_convex()) {
    // Chambers of a central arrangement meet in a common face, which is
    // generated by their shared rays.
    std::vector<LatticeVector> shared;
    std::set_intersection(a.rays().begin(), a.rays().end(), b.rays().begin(), b.rays().end(),
                          std::back_inserter(shared));
    if (shared.empty()) return std::nullopt;
    LatticeVector sum(a.rank());
    for (const auto& r : shared) sum = add(sum, r);
    return sum;
  }
  const Cone tau = intersect(a, b);
  if (tau.dim() == 0) return std::nullopt;
  return relint_lattice_point(tau);
}

}  // namespace

std::vector<LatticeVector> arrangement_hyperplanes(std::span<const Cone> cones) {
  std::vector<LatticeVector> hs;
  for (const auto& c : cones) {
    for (const auto& n : c.facet_normals()) hs.push_back(normalized_hyperplane(n));
    for (const auto& e : c.span_equations()) hs.push_back(normalized_hyperplane(e));
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

std::vector<Cone> arrangement_chambers(std::size_t rank, std::span<const LatticeVector> hyperplanes) {
  std::vector<Cone> regions{Cone::whole_space(rank)};
  for (const auto& h : hyperplanes) {
    std::vector<Cone> next;
    next.reserve(regions.size() * 2);
    for (auto& region : regions) {
      if (side_of(region, h) != Side::Both) {
        next.push_back(std::move(region));
        continue;
      }
      for (const auto& g : {h, negated(h)}) {
        Cone piece = intersect_halfspace(region, g);
        if (piece.is_full_dimensional()) next.push_back(std::move(piece));
      }
    }
    regions = std::move(next);
  }
  std::sort(regions.begin(), regions.end(), region_less);
  return regions;
}

ArrangementFan arrangement(const Fan& fan) {
  if (fan.rank() < 2) throw Error(ErrorKind::RankTooSmall, "complement analysis needs rank >= 2");
  ArrangementFan arr;
  arr.rank = fan.rank();
  arr.hyperplanes = arrangement_hyperplanes(fan.max_cones());
  arr.regions = arrangement_chambers(fan.rank(), arr.hyperplanes);
  arr.inside.reserve(arr.regions.size());
  for (const auto& r : arr.regions) arr.inside.push_back(support_contains(fan, relint_point(r)));
  return arr;
}

Cone closure_dual(const ArrangementFan& arrangement, std::span<const std::size_t> region_ids) {
  if (region_ids.empty()) return Cone::whole_space(arrangement.rank);
  Cone acc = dual(arrangement.regions[region_ids.front()]);
  for (std::size_t i = 1; i < region_ids.size(); ++i) {
    if (acc.is_zero()) break;
    acc = intersect(acc, dual(arrangement.regions[region_ids[i]]));
  }
  return acc;
}

ComplementAnalysis complement_components(const Fan& fan) {
  ComplementAnalysis out;
  out.arrangement = arrangement(fan);
  const auto& arr = out.arrangement;

  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < arr.regions.size(); ++i)
    if (!arr.inside[i]) outside.push_back(i);

  DisjointSets sets(outside.size());
  for (std::size_t a = 0; a < outside.size(); ++a)
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      if (sets.find(a) == sets.find(b)) continue;
      const auto p = common_face_point(arr.regions[outside[a]], arr.regions[outside[b]]);
      if (p && !support_contains(fan, *p)) sets.unite(a, b);
    }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < outside.size(); ++a) groups[sets.find(a)].push_back(outside[a]);

  std::vector<std::pair<LatticeVector, std::vector<std::size_t>>> keyed;
  for (auto& [root, ids] : groups) {
    LatticeVector key = relint_lattice_point(arr.regions[ids.front()]);
    for (auto id : ids) key = std::min(key, relint_lattice_point(arr.regions[id]));
    keyed.emplace_back(std::move(key), std::move(ids));
  }
  std::sort(keyed.begin(), keyed.end());

  for (auto& [key, ids] : keyed) {
    Cone cd = closure_dual(arr, ids);
    const bool concave = cd.is_zero();
    out.components.push_back(ComplementComponent{out.components.size(), std::move(ids), std::move(cd), concave});
  }
  return out;
}

}  // namespace toric
