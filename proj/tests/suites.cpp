#include "suites.hpp"

#include "support.hpp"

#include "toric/complement.hpp"
#include "toric/error.hpp"
#include "toric/hartogs.hpp"
#include "toric/oracles.hpp"

#include <algorithm>
#include <set>

namespace testing {

namespace {

std::set<LatticeVector> bounded(const Cone& c, unsigned bound) {
  auto pts = bounded_lattice_points(c, bound, true);
  return {pts.begin(), pts.end()};
}

}  // namespace

SuiteResult dual_involution_suite(std::size_t cases) {
  SuiteResult r;
  Rng rng(11);
  for (; r.cases < cases; ++r.cases) {
    const std::size_t rank = 2 + r.cases % 3;
    const Cone c = random_cone(rng, rank, 5, 5);
    if (!(dual(dual(c)) == c)) {
      r.failure = "dual(dual(" + to_string(c) + ")) = " + to_string(dual(dual(c)));
      break;
    }
  }
  return r;
}

SuiteResult dual_antitone_suite(std::size_t cases) {
  SuiteResult r;
  Rng rng(12);
  for (; r.cases < cases; ++r.cases) {
    const std::size_t rank = 2 + r.cases % 3;
    const Cone sigma = random_cone(rng, rank, 3, 5);
    auto gens = sigma.rays();
    for (const auto& l : sigma.lineality()) {
      gens.push_back(l);
      gens.push_back(negated(l));
    }
    gens.push_back(random_vector(rng, rank, 5));
    const Cone tau = Cone::from_rays(rank, gens);
    if (!is_subcone(sigma, tau) || !is_subcone(dual(tau), dual(sigma))) {
      r.failure = "antitone fails for " + to_string(sigma) + " in " + to_string(tau);
      break;
    }
    if (rank <= 3) {
      // (sigma cap rho)^dual is the Minkowski sum of the duals.
      const Cone rho = random_cone(rng, rank, 3, 5);
      std::vector<LatticeVector> sum;
      for (const Cone& d : {dual(sigma), dual(rho)}) {
        sum.insert(sum.end(), d.rays().begin(), d.rays().end());
        for (const auto& l : d.lineality()) {
          sum.push_back(l);
          sum.push_back(negated(l));
        }
      }
      if (!(dual(intersect(sigma, rho)) == Cone::from_rays(rank, sum))) {
        r.failure = "dual of intersection of " + to_string(sigma) + " and " + to_string(rho);
        break;
      }
    }
  }
  return r;
}

SuiteResult gl_invariance_suite(std::size_t cases) {
  SuiteResult r;
  Rng rng(13);
  const auto& fans = corpus();
  for (; r.cases < cases; ++r.cases) {
    const Fan& f = fans[r.cases % fans.size()];
    const Fan g = transform(f, random_unimodular(rng, f.rank()));
    const auto a = complement_components(f);
    const auto b = complement_components(g);
    auto flags = [](const ComplementAnalysis& x) {
      std::multiset<bool> s;
      for (const auto& c : x.components) s.insert(c.concave);
      return s;
    };
    const bool same = a.n() == b.n() && flags(a) == flags(b) &&
                      hartogs_verdict(a).verdict == hartogs_verdict(b).verdict &&
                      is_smooth_fan(f).smooth == is_smooth_fan(g).smooth && is_complete(f) == is_complete(g) &&
                      f.all_cones().size() == g.all_cones().size();
    if (!same) {
      r.failure = "corpus fan " + std::to_string(r.cases % fans.size()) + " changes under a unimodular map";
      break;
    }
  }
  return r;
}

SuiteResult dual_oracle_suite(std::size_t cases, unsigned bound) {
  SuiteResult r;
  Rng rng(14);
  for (; r.cases < cases; ++r.cases) {
    const std::size_t rank = 2 + r.cases % 2;
    const Cone c = random_cone(rng, rank, 4, 5);
    if (oracle::dual_lattice_oracle(c, bound) != bounded(dual(c), bound)) {
      r.failure = "bounded dual lattice points differ for " + to_string(c);
      break;
    }
  }
  return r;
}

SuiteResult hilbert_oracle_suite(std::size_t cases, unsigned bound) {
  SuiteResult r;
  Rng rng(15);
  // Cones whose basis leaves the search box are not decidable by the
  // bounded oracle; they are drawn again.
  std::size_t attempts = 0;
  while (r.cases < cases && attempts++ < 50 * cases) {
    const std::size_t rank = 2 + attempts % 2;
    const Cone c = random_pointed_cone(rng, rank, 3, 3);
    const auto hb = hilbert_basis(c).generators;
    if (std::any_of(hb.begin(), hb.end(), [&](const LatticeVector& g) { return inf_norm(g) > bound; })) continue;
    ++r.cases;
    const std::set<LatticeVector> fast(hb.begin(), hb.end());
    if (fast != oracle::hilbert_bruteforce(c, bound)) {
      r.failure = "Hilbert basis disagrees with brute force for " + to_string(c);
      break;
    }
  }
  if (r.ok() && r.cases < cases) r.failure = "too few decidable cones drawn";
  return r;
}

SuiteResult component_oracle_suite() {
  SuiteResult r;
  const auto& fans = corpus();
  for (; r.cases < fans.size(); ++r.cases) {
    const auto n = complement_components(fans[r.cases]).n();
    oracle::OracleConfig cfg;
    cfg.seed = 77 + r.cases;
    const auto s = oracle::component_sampling_oracle(fans[r.cases], cfg);
    if (!s.stable || s.count != n) {
      r.failure = "corpus fan " + std::to_string(r.cases) + ": exact n = " + std::to_string(n) + ", sampled " +
                  std::to_string(s.count) + (s.stable ? " (stable)" : " (unstable)");
      break;
    }
  }
  return r;
}

SuiteResult valuation_suite(std::size_t cases) {
  SuiteResult r;
  Rng rng(16);
  for (; r.cases < cases; ++r.cases) {
    const std::size_t rank = 2 + r.cases % 2;
    const auto f = random_laurent(rng, rank, 4, 3);
    const auto g = random_laurent(rng, rank, 4, 3);
    const auto rho = random_vector(rng, rank, 4);
    const Int vf = valuation_poly(rho, f), vg = valuation_poly(rho, g);
    if (valuation_poly(rho, f * g) != vf + vg) {
      r.failure = "v(fg) != v(f) + v(g) along " + to_string(rho);
      break;
    }
    const auto s = f + g;
    if (!s.is_zero() && valuation_poly(rho, s) < std::min(vf, vg)) {
      r.failure = "v(f+g) < min(v(f), v(g)) along " + to_string(rho);
      break;
    }
  }
  return r;
}

SuiteResult extendability_suite(std::size_t cases) {
  SuiteResult r;
  Rng rng(17);
  const auto& fans = corpus();
  std::size_t yes = 0;
  for (; r.cases < cases; ++r.cases) {
    const Fan& f = fans[r.cases % fans.size()];
    LaurentPoly p;
    if (r.cases % 2 == 0) {
      // Half the polynomials are built from exponents that do extend.
      const auto pts = bounded_lattice_points(support_dual(f), 3, true);
      for (long k = 0; k < 3; ++k)
        p.add_term(pts[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pts.size()) - 1))], Rat(uniform(rng, 1, 5)));
    } else {
      p = random_laurent(rng, f.rank(), 3, 2);
    }
    bool a;
    try {
      a = extends_to_variety(f, p).extends;  // checks two of the three routes itself
    } catch (const Error& e) {
      r.failure = e.what();
      break;
    }
    yes += a;
    if (a != extends_on_every_chart(f, p)) {
      r.failure = "chart-wise extendability disagrees on corpus fan " + std::to_string(r.cases % fans.size());
      break;
    }
  }
  if (r.ok() && (yes == 0 || yes == r.cases)) r.failure = "degenerate sample: extendability never varied";
  return r;
}

}  // namespace testing
