#include "double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <utility>

namespace toric::detail {

namespace {

struct Ray {
  LatticeVector v;
  boost::dynamic_bitset<> tight;  // processed inequalities vanishing on v
};

LatticeVector combine(const Int& a, const LatticeVector& x, const Int& b, const LatticeVector& y) {
  LatticeVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
  return is_zero(out) ? out : primitivize(out).primitive;
}

// Removes from `lineality` one direction not orthogonal to `a`, making the
// remaining lineality and all rays orthogonal to `a`. Returns the removed
// direction oriented so that <a, l0> > 0, or nothing if all of the lineality
// already lies in a's hyperplane.
std::optional<LatticeVector> split_lineality(std::vector<LatticeVector>& lineality, std::vector<Ray>& rays,
                                             const LatticeVector& a) {
  std::size_t pick = lineality.size();
  for (std::size_t i = 0; i < lineality.size(); ++i)
    if (dot(a, lineality[i]) != 0) {
      pick = i;
      break;
    }
  if (pick == lineality.size()) return std::nullopt;

  LatticeVector l0 = std::move(lineality[pick]);
  lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pick));
  Int c0 = dot(a, l0);
  if (c0 < 0) {
    l0 = negated(l0);
    c0 = -c0;
  }
  for (auto& l : lineality) {
    const Int c = dot(a, l);
    if (c != 0) l = combine(c0, l, c, l0);
  }
  for (auto& r : rays) {
    const Int c = dot(a, r.v);
    if (c != 0) r.v = combine(c0, r.v, c, l0);
  }
  return l0;
}

}  // namespace

Generators double_description(std::size_t rank, std::span<const LatticeVector> inequalities,
                              std::span<const LatticeVector> equations) {
  std::vector<LatticeVector> lineality;
  for (std::size_t i = 0; i < rank; ++i) {
    LatticeVector e(rank);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (const auto& e : equations) split_lineality(lineality, rays, e);

  const std::size_t total = inequalities.size();
  for (std::size_t k = 0; k < total; ++k) {
    const auto& a = inequalities[k];

    if (auto l0 = split_lineality(lineality, rays, a)) {
      for (auto& r : rays) r.tight.set(k);
      boost::dynamic_bitset<> tight(total);
      for (std::size_t j = 0; j < k; ++j) tight.set(j);
      rays.push_back(Ray{std::move(*l0), std::move(tight)});
      continue;
    }

    std::vector<Int> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      if (value[i] > 0) pos.push_back(i);
      else if (value[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (value[i] == 0) rays[i].tight.set(k);
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] < 0) continue;
      Ray r = rays[i];
      if (value[i] == 0) r.tight.set(k);
      next.push_back(std::move(r));
    }
    // Combinatorial adjacency: p and n span a 2-face iff no third extreme ray
    // is tight on every constraint tight at both.
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        const auto common = rays[p].tight & rays[n].tight;
        bool adjacent = true;
        for (std::size_t i = 0; i < rays.size() && adjacent; ++i)
          if (i != p && i != n && common.is_subset_of(rays[i].tight)) adjacent = false;
        if (!adjacent) continue;
        Ray r{combine(value[p], rays[n].v, value[n], rays[p].v), common};
        r.tight.set(k);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
  }

  Generators g;
  g.lineality = std::move(lineality);
  for (auto& r : rays) g.rays.push_back(std::move(r.v));
  return g;
}

}  // namespace toric::detail
