#include <doctest.h>

#include "suites.hpp"
#include "support.hpp"

#include "toric/error.hpp"
#include "toric/hartogs.hpp"
#include "toric/oracles.hpp"

#include <map>

using namespace testing;

namespace {

// m is a nonnegative integer combination of gens (dual of a full-dimensional
// pointed cone, so the search terminates along a grading).
bool representable(const LatticeVector& m, const std::vector<LatticeVector>& gens, const Cone& semigroup_cone,
                   std::map<LatticeVector, bool>& memo) {
  if (is_zero(m)) return true;
  if (!contains(semigroup_cone, m).inside) return false;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  bool ok = false;
  for (const auto& g : gens) {
    const auto rest = sub(m, g);
    if (contains(semigroup_cone, rest).inside && representable(rest, gens, semigroup_cone, memo)) {
      ok = true;
      break;
    }
  }
  return memo[m] = ok;
}

LaurentPoly poly(std::initializer_list<std::pair<std::initializer_list<long>, long>> terms) {
  LaurentPoly f;
  for (const auto& [e, c] : terms) f.add_term(vec(e), Rat(c));
  return f;
}

}  // namespace

TEST_CASE("Hilbert basis examples") {
  CHECK(hilbert_basis(cone(2, {{1, 0}, {0, 1}})).generators == vecs({{0, 1}, {1, 0}}));
  CHECK(hilbert_basis(cone(2, {{1, 0}, {1, 2}})).generators == vecs({{0, 1}, {1, 0}, {2, -1}}));
  CHECK(hilbert_basis(Cone::zero(2)).generators == vecs({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
  CHECK(hilbert_basis(cone(2, {{1, 0}})).generators == vecs({{0, -1}, {0, 1}, {1, 0}}));
  CHECK_THROWS_AS(hilbert_basis(cone(2, {{1, 0}, {-1, 0}})), Error);
}

TEST_CASE("Hilbert basis agrees with brute force") {
  const auto r = hilbert_oracle_suite(100, 6);
  INFO(r.failure);
  CHECK(r.ok());
}

TEST_CASE("Hilbert basis generates, is minimal, and generates M as a group") {
  Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rank = 2 + t % 2;
    Cone sigma = random_pointed_cone(rng, rank, 4, 3);
    const auto gens = hilbert_basis(sigma).generators;
    const Cone d = dual(sigma);

    // Group generation: invariant factors all 1 and full rank.
    const auto s = smith_normal_form(IntMatrix::from_columns(rank, gens));
    for (std::size_t i = 0; i < rank; ++i) CHECK(s.D(i, i) == 1);

    if (!sigma.is_full_dimensional()) continue;
    std::map<LatticeVector, bool> memo;
    for (const auto& m : bounded_lattice_points(d, 6, false)) CHECK(representable(m, gens, d, memo));
    // Minimality: no generator splits into two nonzero bounded elements.
    for (const auto& g : gens)
      for (const auto& y : bounded_lattice_points(d, 6, false)) {
        if (y == g) continue;
        CHECK_FALSE((contains(d, sub(g, y)).inside && !is_zero(sub(g, y))));
      }
    // Saturation spot check: c m representable implies m representable.
    for (const auto& m : bounded_lattice_points(d, 2, false))
      for (long c = 2; c <= 3; ++c)
        if (representable(scaled(m, Int(c)), gens, d, memo)) CHECK(representable(m, gens, d, memo));
  }
}

TEST_CASE("chart equations") {
  auto eq = chart_equations(cone(2, {{1, 0}, {1, 2}}));
  REQUIRE(eq.equations.size() == 1);
  CHECK(eq.equations[0].a == vec({1, 0, 1}));
  CHECK(eq.equations[0].b == vec({0, 2, 0}));
  CHECK_FALSE(eq.saturated);

  CHECK(chart_equations(cone(2, {{1, 0}, {0, 1}})).equations.empty());

  // Units give a relation with an empty side: z1 z2 - 1.
  eq = chart_equations(cone(2, {{1, 0}}));
  CHECK(eq.generators == vecs({{0, -1}, {0, 1}, {1, 0}}));
  REQUIRE(eq.equations.size() == 1);
  CHECK(eq.equations[0].a == vec({1, 1, 0}));
  CHECK(eq.equations[0].b == vec({0, 0, 0}));

  Rng rng(52);
  for (int t = 0; t < 50; ++t) {
    const auto e = chart_equations(random_pointed_cone(rng, 2 + t % 2, 4, 3));
    for (const auto& b : e.equations) {
      LatticeVector lhs(e.generators[0].size()), rhs(lhs.size());
      for (std::size_t i = 0; i < e.generators.size(); ++i) {
        CHECK((b.a[i] == 0 || b.b[i] == 0));
        lhs = add(lhs, scaled(e.generators[i], b.a[i]));
        rhs = add(rhs, scaled(e.generators[i], b.b[i]));
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("face localization") {
  const Cone orthant = cone(2, {{1, 0}, {0, 1}});
  CHECK(face_localization(orthant, cone(2, {{1, 0}})) == vec({0, 1}));
  CHECK(face_localization(orthant, Cone::zero(2)) == vec({1, 1}));
  CHECK(face_localization(cone(2, {{1, 0}, {1, 2}}), cone(2, {{1, 0}})) == vec({0, 1}));
  CHECK_THROWS_AS(face_localization(orthant, cone(2, {{1, 1}})), Error);

  // Points of dual(tau) lie in S_sigma + N(-m0), within a bounded search.
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const Cone sigma = random_pointed_cone(rng, 2, 3, 3);
    if (!sigma.is_full_dimensional()) continue;
    const Cone d = dual(sigma);
    const auto gens = hilbert_basis(sigma).generators;
    std::map<LatticeVector, bool> memo;
    for (const auto& tau : faces(sigma)) {
      const auto m0 = face_localization(sigma, tau);
      CHECK(contains(d, m0).inside);
      for (const auto& x : bounded_lattice_points(dual(tau), 4, true)) {
        bool found = false;
        for (long k = 0; k <= 40 && !found; ++k) found = representable(add(x, scaled(m0, Int(k))), gens, d, memo);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("valuations") {
  CHECK(valuation_monomial(vec({1, 0}), vec({2, 3})) == 2);
  CHECK(valuation_monomial(vec({2, 0}), vec({2, 3})) == 2);
  CHECK(valuation_monomial(vec({0, 1}), vec({1, -1})) == -1);
  CHECK_THROWS_AS(valuation_monomial(vec({0, 0}), vec({1, 1})), Error);

  const auto f = poly({{{1, 0}, 1}, {{1, -1}, 1}});
  CHECK(valuation_poly(vec({0, 1}), f) == -1);
  CHECK(valuation_poly(vec({1, 0}), f) == 1);
  CHECK(valuation_poly(vec({1, 1}), poly({{{0, 0}, 1}, {{1, 1}, 1}})) == 0);
  CHECK_THROWS_AS(valuation_poly(vec({1, 0}), LaurentPoly{}), Error);

  const auto r = valuation_suite(100);
  INFO(r.failure);
  CHECK(r.ok());
}

TEST_CASE("Laurent polynomial arithmetic") {
  auto f = poly({{{1, 0}, 1}, {{0, 1}, -1}});
  auto g = poly({{{1, 0}, -1}, {{0, 1}, 1}});
  CHECK((f + g).is_zero());
  CHECK((f * poly({{{0, 0}, 1}})) == f);
  f.add_term(vec({1, 0}), Rat(-1));
  CHECK(f.support() == vecs({{0, 1}}));
}

TEST_CASE("support dual") {
  CHECK(support_dual(orthant_fan(2)) == cone(2, {{1, 0}, {0, 1}}));
  CHECK(support_dual(half_plane_fan()) == cone(2, {{0, 1}}));
  CHECK(support_dual(torus_fan(2)) == Cone::whole_space(2));
}

TEST_CASE("extendability") {
  auto e = extends_to_variety(orthant_fan(2), poly({{{0, 0}, 1}, {{1, 1}, 1}}));
  CHECK(e.extends);
  e = extends_to_variety(orthant_fan(2), poly({{{1, 0}, 1}, {{1, -1}, 1}}));
  CHECK_FALSE(e.extends);
  // valuations are parallel to ray_generators: (0,1) then (1,0)
  CHECK(e.valuations == std::vector<Int>{-1, 1});
  CHECK(extends_to_variety(torus_fan(2), poly({{{-3, 5}, 2}})).extends);
  CHECK_THROWS_AS(extends_to_variety(orthant_fan(2), LaurentPoly{}), Error);

  const auto r = extendability_suite(100);
  INFO(r.failure);
  CHECK(r.ok());
}

TEST_CASE("orbits") {
  const auto rec = orbit_report(orthant_fan(2));
  REQUIRE(rec.size() == 4);
  std::vector<std::size_t> dims;
  for (const auto& r : rec) dims.push_back(r.orbit_dim);
  CHECK(dims == std::vector<std::size_t>{2, 1, 1, 0});
  for (const auto& r : rec) CHECK_FALSE(r.in_boundary);

  const Fan t = triangle_fan();
  const Fan o = orthant_fan(2);
  const auto rel = orbit_report(t, &o);
  for (const auto& r : rel) {
    const Cone& c = t.all_cones()[r.cone_id];
    CHECK(r.in_boundary == !support_contains(o, relint_point(c)));
  }
  CHECK(orbit_report(torus_fan(2)).size() == 1);
  CHECK(orbit_report(torus_fan(2))[0].orbit_dim == 2);
  CHECK_THROWS_AS(orbit_report(o, &t), Error);
}
