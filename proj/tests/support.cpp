#include "support.hpp"

#include <algorithm>

namespace testing {

LatticeVector vec(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<LatticeVector> vecs(std::initializer_list<std::initializer_list<long>> xss) {
  std::vector<LatticeVector> out;
  for (auto xs : xss) out.push_back(vec(xs));
  return out;
}

Cone cone(std::size_t rank, std::initializer_list<std::initializer_list<long>> rays) {
  return Cone::from_rays(rank, vecs(rays));
}

Fan fan(std::size_t rank, std::initializer_list<std::initializer_list<long>> rays,
        std::vector<std::vector<std::size_t>> max_cones) {
  return fan_from_max_cones(rank, max_cones, vecs(rays));
}

Fan orthant_fan(std::size_t rank) {
  std::vector<LatticeVector> rays;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < rank; ++i) {
    LatticeVector e(rank);
    e[i] = 1;
    rays.push_back(e);
    all.push_back(i);
  }
  const std::vector<std::vector<std::size_t>> cones{all};
  return fan_from_max_cones(rank, cones, rays);
}

Fan four_ray_fan() {
  return fan(3, {{1, 1, 1}, {1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}
Fan half_plane_fan() { return fan(2, {{1, 0}, {-1, 0}, {0, 1}}, {{0, 2}, {2, 1}}); }
Fan opposite_quadrants_fan() { return fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {2, 3}}); }
Fan triangle_fan() { return fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }
Fan a1_fan() { return fan(2, {{1, 0}, {1, 2}}, {{0, 1}}); }
Fan torus_fan(std::size_t rank) { return Fan::from_cones(rank, {Cone::zero(rank)}); }

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

LatticeVector random_vector(Rng& rng, std::size_t rank, long bound, bool nonzero) {
  while (true) {
    LatticeVector v(rank);
    for (auto& x : v) x = uniform(rng, -bound, bound);
    if (!nonzero || !is_zero(v)) return v;
  }
}

Cone random_cone(Rng& rng, std::size_t rank, std::size_t max_gens, long bound) {
  std::vector<LatticeVector> gens;
  const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_gens)));
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, rank, bound));
  return Cone::from_rays(rank, gens);
}

Cone random_pointed_cone(Rng& rng, std::size_t rank, std::size_t max_gens, long bound) {
  while (true) {
    Cone c = random_cone(rng, rank, max_gens, bound);
    if (c.is_strictly_convex()) return c;
  }
}

IntMatrix random_unimodular(Rng& rng, std::size_t rank) {
  IntMatrix u = IntMatrix::identity(rank);
  if (rank == 1) {
    if (uniform(rng, 0, 1)) u.negate_row(0);
    return u;
  }
  const long steps = uniform(rng, 1, 2 * static_cast<long>(rank));
  for (long s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rank) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rank) - 2));
    if (j >= i) ++j;
    switch (uniform(rng, 0, 3)) {
      case 0: u.swap_rows(i, j); break;
      case 1: u.negate_row(i); break;
      default: u.add_row_multiple(i, j, Int(uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1))); break;
    }
  }
  return u;
}

Fan random_fan(Rng& rng, std::size_t rank) {
  // The complete fan of coordinate orthants.
  std::vector<Cone> orthants;
  for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < rank; ++i) {
      LatticeVector e(rank);
      e[i] = (mask >> i) & 1 ? -1 : 1;
      rays.push_back(e);
    }
    orthants.push_back(Cone::from_rays(rank, rays));
  }
  Fan f = transform(Fan::from_cones(rank, orthants), random_unimodular(rng, rank));

  const long subdivisions = uniform(rng, 0, 2);
  for (long s = 0; s < subdivisions; ++s) {
    const auto& mc = f.max_cones();
    const Cone& c = mc[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(mc.size()) - 1))];
    LatticeVector p(rank);
    for (const auto& r : c.rays()) p = add(p, scaled(r, Int(uniform(rng, 1, 2))));
    f = stellar_subdivide(f, primitivize(p).primitive);
  }

  std::vector<Cone> keep;
  for (const auto& c : f.max_cones()) {
    const long roll = uniform(rng, 0, 9);
    if (roll < 4) {
      keep.push_back(c);
    } else if (roll < 6) {
      auto fs = faces(c);  // a proper face, sometimes
      keep.push_back(fs[static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(fs.size()) - 1))]);
    }
  }
  if (keep.empty()) keep.push_back(f.max_cones().front());
  return Fan::from_cones(rank, keep);
}

LaurentPoly random_laurent(Rng& rng, std::size_t rank, std::size_t max_terms, long bound) {
  LaurentPoly f;
  while (f.is_zero()) {
    const auto k = uniform(rng, 1, static_cast<long>(max_terms));
    for (long i = 0; i < k; ++i) {
      Rat c(uniform(rng, -9, 9), uniform(rng, 1, 5));
      c.canonicalize();
      f.add_term(random_vector(rng, rank, bound, false), c);
    }
  }
  return f;
}

const std::vector<Fan>& corpus() {
  static const std::vector<Fan> fans = [] {
    std::vector<Fan> out;
    for (std::uint64_t i = 0; i < 50; ++i) {
      Rng rng(1000 + i);
      out.push_back(random_fan(rng, i % 2 == 0 ? 2 : 3));
    }
    return out;
  }();
  return fans;
}

}  // namespace testing
