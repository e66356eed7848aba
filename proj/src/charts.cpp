#include "toric/charts.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

// Pulling triangulation: cone from the lex-first ray over a triangulation of
// each facet that misses it. Uses only the cone's own rays.
std::vector<Cone> pulling_triangulation(const Cone& c) {
  if (c.rays().size() == c.dim()) return {c};
  const auto& apex = c.rays().front();
  std::vector<Cone> pieces;
  for (const auto& n : c.facet_normals()) {
    if (dot(n, apex) == 0) continue;
    std::vector<LatticeVector> facet;
    for (const auto& r : c.rays())
      if (dot(n, r) == 0) facet.push_back(r);
    for (const auto& piece : pulling_triangulation(Cone::from_rays(c.rank(), facet))) {
      auto gens = piece.rays();
      gens.push_back(apex);
      pieces.push_back(Cone::from_rays(c.rank(), gens));
    }
  }
  return pieces;
}

// Hilbert basis of a pointed cone: rays and parallelepiped points of a
// triangulation generate the semigroup; keep the irreducible ones.
std::vector<LatticeVector> pointed_hilbert_basis(const Cone& c) {
  std::set<LatticeVector> candidates(c.rays().begin(), c.rays().end());
  for (const auto& piece : pulling_triangulation(c))
    for (auto& p : parallelepiped_points(piece)) candidates.insert(std::move(p.point));

  // x is reducible iff x - y lies in the cone for some other candidate y:
  // the candidates contain the Hilbert basis, and a pointed cone has no
  // nonzero x - y with y - x also inside.
  std::vector<LatticeVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      if (contains(c, sub(x, y)).inside) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

// Representative of x modulo the lattice spanned by the HNF rows `units`.
LatticeVector reduce_modulo(LatticeVector x, const std::vector<LatticeVector>& units) {
  for (const auto& h : units) {
    std::size_t c = 0;
    while (h[c] == 0) ++c;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x[c].get_mpz_t(), h[c].get_mpz_t());
    if (q != 0) x = sub(x, scaled(h, q));
  }
  return x;
}

}  // namespace

SemigroupBasis hilbert_basis(const Cone& sigma) {
  if (!sigma.is_strictly_convex()) throw Error(ErrorKind::NotPointed, "Hilbert basis of " + to_string(sigma));
  const std::size_t p = sigma.rank();
  const Cone d = dual(sigma);
  const auto& units = d.lineality();
  const std::size_t k = units.size();

  std::vector<LatticeVector> gens;
  for (const auto& u : units) {
    gens.push_back(u);
    gens.push_back(negated(u));
  }

  if (k == 0) {
    auto hb = pointed_hilbert_basis(d);
    gens.insert(gens.end(), hb.begin(), hb.end());
  } else if (k < p) {
    // Unimodular coordinates y = x V in which the unit lattice is the span of
    // the first k coordinates; the pointed quotient lives in the rest.
    const auto snf = smith_normal_form(IntMatrix::from_rows(p, units));
    const IntMatrix& v = snf.V;
    const IntMatrix t = unimodular_inverse(v);
    std::vector<LatticeVector> quotient_rays;
    for (const auto& r : d.rays()) {
      LatticeVector z(p - k);
      for (std::size_t j = k; j < p; ++j)
        for (std::size_t i = 0; i < p; ++i) z[j - k] += r[i] * v(i, j);
      quotient_rays.push_back(std::move(z));
    }
    const Cone quotient = Cone::from_rays(p - k, quotient_rays);
    for (const auto& z : pointed_hilbert_basis(quotient)) {
      LatticeVector x(p);
      for (std::size_t j = 0; j < p - k; ++j)
        for (std::size_t c = 0; c < p; ++c) x[c] += z[j] * t(k + j, c);
      gens.push_back(reduce_modulo(std::move(x), units));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return {sigma, std::move(gens)};
}

ChartEquations chart_equations(const Cone& sigma) {
  ChartEquations out;
  out.generators = hilbert_basis(sigma).generators;
  const auto a = IntMatrix::from_columns(sigma.rank(), out.generators);
  for (const auto& k : kernel_lattice(a)) {
    BinomialEquation eq{LatticeVector(k.size()), LatticeVector(k.size())};
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] > 0) eq.a[i] = k[i];
      else eq.b[i] = -k[i];
    }
    out.equations.push_back(std::move(eq));
  }
  return out;
}

LatticeVector face_localization(const Cone& sigma, const Cone& tau) {
  if (!is_face_of(tau, sigma)) throw Error(ErrorKind::NotAFace, to_string(tau) + " is not a face of " + to_string(sigma));
  LatticeVector m0(sigma.rank());
  for (const auto& m : hilbert_basis(sigma).generators) {
    const bool vanishes = std::all_of(tau.rays().begin(), tau.rays().end(),
                                      [&](const LatticeVector& r) { return dot(m, r) == 0; });
    if (vanishes) m0 = add(m0, m);
  }
  return m0;
}

void LaurentPoly::add_term(const LatticeVector& exponent, const Rat& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

std::vector<LatticeVector> LaurentPoly::support() const {
  std::vector<LatticeVector> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h = f;
  for (const auto& [e, c] : g.terms_) h.add_term(e, c);
  return h;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h;
  for (const auto& [e1, c1] : f.terms_)
    for (const auto& [e2, c2] : g.terms_) h.add_term(add(e1, e2), c1 * c2);
  return h;
}

Int valuation_monomial(const LatticeVector& rho, const LatticeVector& exponent) {
  return dot(primitivize(rho).primitive, exponent);
}

Int valuation_poly(const LatticeVector& rho, const LaurentPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "valuation of the zero polynomial");
  const auto u = primitivize(rho).primitive;
  std::optional<Int> best;
  for (const auto& [e, c] : f.terms()) {
    Int v = dot(u, e);
    if (!best || v < *best) best = v;
  }
  return *best;
}

Cone support_dual(const Fan& fan) { return dual(Cone::from_rays(fan.rank(), fan.ray_generators())); }

Extendability extends_to_variety(const Fan& fan, const LaurentPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "extendability of the zero polynomial");
  const Cone sd = support_dual(fan);
  bool by_exponents = true;
  for (const auto& [e, c] : f.terms()) {
    if (e.size() != fan.rank()) throw Error(ErrorKind::DimensionMismatch, "exponent " + to_string(e) + " has the wrong length");
    by_exponents = by_exponents && contains(sd, e).inside;
  }
  Extendability out{true, {}};
  for (const auto& u : fan.ray_generators()) {
    out.valuations.push_back(valuation_poly(u, f));
    out.extends = out.extends && out.valuations.back() >= 0;
  }
  if (out.extends != by_exponents)
    throw Error(ErrorKind::Internal, "exponent membership and ray valuations disagree");
  return out;
}

bool extends_on_every_chart(const Fan& fan, const LaurentPoly& f) {
  for (const auto& c : fan.max_cones()) {
    const Cone d = dual(c);
    for (const auto& [e, coeff] : f.terms())
      if (!contains(d, e).inside) return false;
  }
  return true;
}

std::vector<OrbitRecord> orbit_report(const Fan& fan, const Fan* relative_to) {
  if (relative_to && (relative_to->rank() != fan.rank() || !support_subset(*relative_to, fan)))
    throw Error(ErrorKind::IncompatibleFans, "the reference fan's support is not contained in the fan's support");
  std::vector<OrbitRecord> out;
  const auto& cones = fan.all_cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const bool boundary = relative_to && !support_contains(*relative_to, relint_point(cones[i]));
    out.push_back({i, fan.rank() - cones[i].dim(), boundary});
  }
  return out;
}

}  // namespace toric
