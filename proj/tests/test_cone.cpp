#include <doctest.h>

#include "suites.hpp"
#include "support.hpp"

#include "toric/error.hpp"
#include "toric/hartogs.hpp"
#include "toric/oracles.hpp"

#include <set>

using namespace testing;

namespace {

// Brute-force smoothness in rank 2: search for a completion of the ray
// matrix to a unimodular one.
bool smooth_bruteforce_2d(const std::vector<LatticeVector>& rays) {
  auto det = [](const LatticeVector& u, const LatticeVector& v) { return Int(u[0] * v[1] - u[1] * v[0]); };
  if (rays.size() == 2) return abs(det(rays[0], rays[1])) == 1;
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y)
      if (abs(det(rays[0], vec({x, y}))) == 1) return true;
  return false;
}

}  // namespace

TEST_CASE("cone from rays") {
  const Cone c = cone(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(c.rays() == vecs({{0, 1}, {1, 0}}));
  CHECK(c.lineality().empty());

  const Cone z = Cone::from_rays(2, {});
  CHECK(z.is_zero());
  CHECK(z.dim() == 0);
  CHECK(z.is_strictly_convex());

  const Cone h = cone(2, {{1, 0}, {-1, 0}, {0, 1}});
  CHECK(h.lineality() == vecs({{1, 0}}));
  CHECK(h.rays() == vecs({{0, 1}}));
  CHECK_FALSE(h.is_strictly_convex());

  CHECK(cone(2, {{2, 4}}).rays() == vecs({{1, 2}}));
  CHECK_THROWS_AS(Cone::from_rays(2, vecs({{1, 0, 0}})), Error);
}

TEST_CASE("representations agree") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const Cone c = random_cone(rng, 2 + t % 3, 5, 5);
    for (const auto& r : c.rays()) {
      for (const auto& n : c.facet_normals()) CHECK(dot(n, r) >= 0);
      for (const auto& e : c.span_equations()) CHECK(dot(e, r) == 0);
      CHECK(primitivize(r).scale == 1);
    }
    for (const auto& l : c.lineality()) {
      for (const auto& n : c.facet_normals()) CHECK(dot(n, l) == 0);
      for (const auto& e : c.span_equations()) CHECK(dot(e, l) == 0);
    }
    // Irredundant rays: dropping any one shrinks the cone.
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
      auto gens = c.rays();
      gens.erase(gens.begin() + static_cast<long>(i));
      for (const auto& l : c.lineality()) {
        gens.push_back(l);
        gens.push_back(negated(l));
      }
      CHECK_FALSE(contains(Cone::from_rays(c.rank(), gens), c.rays()[i]).inside);
    }
    CHECK(c.lineality().empty() == c.is_strictly_convex());
  }
}

TEST_CASE("dual examples") {
  const Cone orthant = cone(2, {{1, 0}, {0, 1}});
  CHECK(dual(orthant) == orthant);
  CHECK(dual(cone(2, {{1, 0}, {1, 2}})) == cone(2, {{0, 1}, {2, -1}}));
  const Cone whole = dual(Cone::zero(2));
  CHECK(whole.lineality() == vecs({{1, 0}, {0, 1}}));
  CHECK(whole.rays().empty());
  CHECK(whole == Cone::whole_space(2));
}

TEST_CASE("dual against the lattice-point oracle") {
  const Cone c = cone(2, {{1, 0}, {1, 2}});
  const auto claimed = cone(2, {{0, 1}, {2, -1}});
  const auto pts = oracle::dual_lattice_oracle(c, 6);
  const auto listed = bounded_lattice_points(claimed, 6, true);
  CHECK(pts == std::set<LatticeVector>(listed.begin(), listed.end()));
}

TEST_CASE("dual membership matches pointwise evaluation") {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const Cone c = random_cone(rng, 2 + t % 2, 4, 5);
    const Cone d = dual(c);
    for (int k = 0; k < 20; ++k) {
      const auto x = random_vector(rng, c.rank(), 5, false);
      bool pointwise = true;
      for (const auto& r : c.rays()) pointwise = pointwise && dot(x, r) >= 0;
      for (const auto& l : c.lineality()) pointwise = pointwise && dot(x, l) == 0;
      CHECK(contains(d, x).inside == pointwise);
    }
  }
}

TEST_CASE("dual involution on 200 random cones") {
  const auto r = dual_involution_suite(200);
  INFO(r.failure);
  CHECK(r.ok());
}

TEST_CASE("dual antitone and intersection laws") {
  const auto r = dual_antitone_suite(200);
  INFO(r.failure);
  CHECK(r.ok());
}

TEST_CASE("faces") {
  const Cone orthant = cone(2, {{1, 0}, {0, 1}});
  const auto fs = faces(orthant);
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].is_zero());
  CHECK(fs[1] == cone(2, {{0, 1}}));
  CHECK(fs[2] == cone(2, {{1, 0}}));
  CHECK(fs[3] == orthant);
  CHECK(faces(cone(2, {{1, 0}})).size() == 2);
  CHECK(faces(cone(3, {{1, 1, 1}, {1, -1, -1}})).size() == 4);
  CHECK_THROWS_AS(faces(cone(2, {{1, 0}, {-1, 0}})), Error);

  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const Cone c = random_pointed_cone(rng, 2 + t % 2, 4, 4);
    const auto all = faces(c);
    for (const auto& f : all) {
      CHECK(is_face_of(f, c));
      for (const auto& g : faces(f)) CHECK(std::find(all.begin(), all.end(), g) != all.end());
    }
    if (c.rays().size() == c.dim()) CHECK(all.size() == (std::size_t{1} << c.dim()));
  }
}

TEST_CASE("is_face_of") {
  const Cone orthant = cone(2, {{1, 0}, {0, 1}});
  CHECK(is_face_of(Cone::zero(2), orthant));
  CHECK(is_face_of(cone(2, {{1, 0}}), orthant));
  CHECK_FALSE(is_face_of(cone(2, {{1, 1}}), orthant));
  CHECK_FALSE(is_face_of(cone(2, {{1, 0}, {1, 1}}), orthant));
}

TEST_CASE("dimension and convexity") {
  CHECK(Cone::zero(3).dim() == 0);
  CHECK(cone(3, {{1, 1, 1}, {1, -1, -1}}).dim() == 2);
  CHECK(Cone::whole_space(2).dim() == 2);
  CHECK(cone(2, {{1, 0}, {0, 1}}).is_strictly_convex());
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(cone(2, {{1, 0}, {0, 1}})));
  CHECK_FALSE(is_smooth(cone(2, {{1, 0}, {1, 2}})));
  CHECK_FALSE(is_smooth(cone(3, {{1, 1, 1}, {1, -1, -1}})));
  CHECK(is_smooth(Cone::zero(2)));
  CHECK_THROWS_AS(is_smooth(Cone::whole_space(2)), Error);

  // Every 2D cone with small rays against the determinant test.
  std::size_t checked = 0;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -4; c <= 4; ++c)
        for (long d = -4; d <= 4; ++d) {
          if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
          const Cone s = Cone::from_rays(2, vecs({{a, b}, {c, d}}));
          if (!s.is_strictly_convex()) continue;
          CHECK(is_smooth(s) == smooth_bruteforce_2d(s.rays()));
          ++checked;
        }
  CHECK(checked > 1000);
}

TEST_CASE("containment") {
  const Cone orthant = cone(2, {{1, 0}, {0, 1}});
  auto m = contains(orthant, vec({1, 1}));
  CHECK(m.inside);
  CHECK(m.position == Position::RelativeInterior);
  m = contains(orthant, vec({1, 0}));
  CHECK(m.inside);
  CHECK(m.position == Position::Boundary);
  m = contains(orthant, vec({-1, 2}));
  CHECK_FALSE(m.inside);
  CHECK(m.position == Position::Outside);
  CHECK(contains(orthant, RationalVector{Rat(1, 3), Rat(0)}).inside);
}

TEST_CASE("intersection") {
  const Cone orthant = cone(2, {{1, 0}, {0, 1}});
  CHECK(intersect(orthant, cone(2, {{1, 0}, {1, -2}})) == cone(2, {{1, 0}}));
  CHECK(intersect(orthant, orthant) == orthant);
  CHECK(intersect(cone(2, {{1, 0}, {1, 1}}), cone(2, {{1, 2}, {0, 1}})).is_zero());
}

TEST_CASE("relative interior points") {
  CHECK(relint_point(cone(2, {{1, 0}, {0, 1}})) == to_rational(vec({1, 1})));
  CHECK(relint_point(cone(2, {{1, 0}})) == to_rational(vec({1, 0})));
  CHECK(relint_point(cone(2, {{1, 0}, {-1, 0}, {0, 1}})) == to_rational(vec({0, 1})));
  CHECK(relint_point(Cone::zero(2)) == to_rational(vec({0, 0})));

  Rng rng(24);
  for (int t = 0; t < 50; ++t) {
    const Cone c = random_cone(rng, 2 + t % 3, 4, 4);
    CHECK(contains(c, relint_point(c)).position == Position::RelativeInterior);
  }
}

TEST_CASE("parallelepiped points and multiplicity") {
  const Cone a1 = cone(2, {{1, 0}, {1, 2}});
  const auto pts = parallelepiped_points(a1);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].point == vec({1, 1}));
  CHECK(multiplicity(a1) == 2);
  CHECK(multiplicity(cone(2, {{1, 0}, {1, 5}})) == 5);
  CHECK(parallelepiped_points(cone(2, {{1, 0}, {0, 1}})).empty());
}
