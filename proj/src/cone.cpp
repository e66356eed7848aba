#include "toric/cone.hpp"

#include "double_description.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace toric {

namespace {

void check_lengths(std::size_t rank, std::span<const LatticeVector> vs) {
  for (const auto& v : vs)
    if (v.size() != rank)
      throw Error(ErrorKind::DimensionMismatch,
                  "vector " + to_string(v) + " does not have length " + std::to_string(rank));
}

std::vector<LatticeVector> sorted_unique(std::vector<LatticeVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Representatives of `vs` modulo span(basis), chosen orthogonal to it.
std::vector<LatticeVector> reduced(const std::vector<LatticeVector>& vs, const std::vector<LatticeVector>& basis) {
  std::vector<LatticeVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    auto p = project_away(v, basis);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  return sorted_unique(std::move(out));
}

std::vector<LatticeVector> with_negatives(std::span<const LatticeVector> vs) {
  std::vector<LatticeVector> out(vs.begin(), vs.end());
  for (const auto& v : vs) out.push_back(negated(v));
  return out;
}

Rat fractional_part(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(fl);
}

}  // namespace

Cone make_canonical_cone(std::size_t rank, std::vector<LatticeVector> lineality, std::vector<LatticeVector> rays,
                         std::vector<LatticeVector> dual_lineality, std::vector<LatticeVector> dual_rays) {
  Cone c;
  c.rank_ = rank;
  c.lineality_ = saturated_basis(rank, lineality);
  c.span_equations_ = saturated_basis(rank, dual_lineality);
  c.rays_ = reduced(rays, c.lineality_);
  c.facet_normals_ = reduced(dual_rays, c.span_equations_);
  return c;
}

Cone Cone::from_rays(std::size_t rank, std::span<const LatticeVector> generators) {
  check_lengths(rank, generators);
  auto dual_gens = detail::double_description(rank, generators, {});
  auto primal = detail::double_description(rank, dual_gens.rays, dual_gens.lineality);
  return make_canonical_cone(rank, std::move(primal.lineality), std::move(primal.rays),
                             std::move(dual_gens.lineality), std::move(dual_gens.rays));
}

Cone Cone::from_inequalities(std::size_t rank, std::span<const LatticeVector> inequalities,
                             std::span<const LatticeVector> equations) {
  check_lengths(rank, inequalities);
  check_lengths(rank, equations);
  auto primal = detail::double_description(rank, inequalities, equations);
  auto dual_gens = detail::double_description(rank, primal.rays, primal.lineality);
  return make_canonical_cone(rank, std::move(primal.lineality), std::move(primal.rays),
                             std::move(dual_gens.lineality), std::move(dual_gens.rays));
}

Cone Cone::zero(std::size_t rank) { return from_rays(rank, {}); }

Cone Cone::whole_space(std::size_t rank) { return from_inequalities(rank, {}, {}); }

bool cone_less(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.rays() != b.rays()) return a.rays() < b.rays();
  return a.lineality() < b.lineality();
}

Cone dual(const Cone& sigma) {
  Cone d;
  d.rank_ = sigma.rank_;
  d.rays_ = sigma.facet_normals_;
  d.lineality_ = sigma.span_equations_;
  d.facet_normals_ = sigma.rays_;
  d.span_equations_ = sigma.lineality_;
  return d;
}

std::vector<std::vector<std::size_t>> face_ray_indices(const Cone& sigma) {
  if (!sigma.is_strictly_convex()) throw Error(ErrorKind::NotPointed, "faces of " + to_string(sigma));
  const auto& rays = sigma.rays();
  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& n : sigma.facet_normals()) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (dot(n, rays[i]) == 0) z.push_back(i);
    facet_sets.push_back(std::move(z));
  }
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  // Every face is an intersection of facets.
  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    const auto face = queue.front();
    queue.pop_front();
    for (const auto& z : facet_sets) {
      std::vector<std::size_t> sub;
      std::set_intersection(face.begin(), face.end(), z.begin(), z.end(), std::back_inserter(sub));
      if (seen.insert(sub).second) queue.push_back(std::move(sub));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Cone> faces(const Cone& sigma) {
  std::vector<Cone> out;
  for (const auto& idx : face_ray_indices(sigma)) {
    std::vector<LatticeVector> gens;
    for (auto i : idx) gens.push_back(sigma.rays()[i]);
    out.push_back(Cone::from_rays(sigma.rank(), gens));
  }
  std::sort(out.begin(), out.end(), cone_less);
  return out;
}

Membership contains(const Cone& sigma, const RationalVector& x) {
  if (x.size() != sigma.rank()) throw Error(ErrorKind::DimensionMismatch, "point has wrong length");
  for (const auto& e : sigma.span_equations())
    if (dot(e, x) != 0) return {false, Position::Outside};
  bool strict = true;
  for (const auto& n : sigma.facet_normals()) {
    const Rat v = dot(n, x);
    if (v < 0) return {false, Position::Outside};
    if (v == 0) strict = false;
  }
  return {true, strict ? Position::RelativeInterior : Position::Boundary};
}

Membership contains(const Cone& sigma, const LatticeVector& x) { return contains(sigma, to_rational(x)); }

bool is_subcone(const Cone& tau, const Cone& sigma) {
  if (tau.rank() != sigma.rank()) return false;
  for (const auto& r : tau.rays())
    if (!contains(sigma, r).inside) return false;
  for (const auto& l : tau.lineality())
    if (!contains(sigma, l).inside || !contains(sigma, negated(l)).inside) return false;
  return true;
}

bool is_face_of(const Cone& tau, const Cone& sigma) {
  if (!is_subcone(tau, sigma)) return false;
  // The smallest face containing tau is cut out by the facets vanishing on it.
  std::vector<LatticeVector> eqs = sigma.span_equations();
  for (const auto& n : sigma.facet_normals()) {
    bool vanishes = true;
    for (const auto& r : tau.rays()) vanishes = vanishes && dot(n, r) == 0;
    for (const auto& l : tau.lineality()) vanishes = vanishes && dot(n, l) == 0;
    if (vanishes) eqs.push_back(n);
  }
  return Cone::from_inequalities(sigma.rank(), sigma.facet_normals(), eqs) == tau;
}

bool is_smooth(const Cone& sigma) {
  if (!sigma.is_strictly_convex()) throw Error(ErrorKind::NotPointed, "smoothness of " + to_string(sigma));
  const auto& rays = sigma.rays();
  if (rays.size() != sigma.dim()) return false;
  if (rays.empty()) return true;
  const auto s = smith_normal_form(IntMatrix::from_rows(sigma.rank(), rays));
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

Cone intersect(const Cone& sigma, const Cone& tau) {
  if (sigma.rank() != tau.rank()) throw Error(ErrorKind::DimensionMismatch, "intersection of cones of different rank");
  std::vector<LatticeVector> ineqs = sigma.facet_normals();
  ineqs.insert(ineqs.end(), tau.facet_normals().begin(), tau.facet_normals().end());
  std::vector<LatticeVector> eqs = sigma.span_equations();
  eqs.insert(eqs.end(), tau.span_equations().begin(), tau.span_equations().end());
  return Cone::from_inequalities(sigma.rank(), ineqs, eqs);
}

Cone intersect_halfspace(const Cone& sigma, const LatticeVector& h) {
  std::vector<LatticeVector> ineqs = sigma.facet_normals();
  ineqs.push_back(h);
  return Cone::from_inequalities(sigma.rank(), ineqs, sigma.span_equations());
}

RationalVector relint_point(const Cone& sigma) { return to_rational(relint_lattice_point(sigma)); }

LatticeVector relint_lattice_point(const Cone& sigma) {
  LatticeVector sum(sigma.rank());
  for (const auto& r : sigma.rays()) sum = add(sum, r);
  return sum;
}

namespace {

struct SimplicialLattice {
  std::vector<LatticeVector> basis;  // basis of span(sigma) cap Z^p
  IntMatrix coords;                  // row i: ray i in that basis
};

SimplicialLattice simplicial_lattice(const Cone& sigma) {
  if (!sigma.is_strictly_convex()) throw Error(ErrorKind::NotPointed, to_string(sigma));
  const auto& rays = sigma.rays();
  if (rays.size() != sigma.dim())
    throw Error(ErrorKind::Internal, "parallelepiped of non-simplicial cone " + to_string(sigma));
  SimplicialLattice s;
  s.basis = saturated_basis(sigma.rank(), rays);
  const std::size_t d = rays.size();
  const auto bt = IntMatrix::from_columns(sigma.rank(), s.basis);
  s.coords = IntMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto c = solve_rational(bt, to_rational(rays[i]));
    for (std::size_t j = 0; j < d; ++j) s.coords(i, j) = (*c)[j].get_num();
  }
  return s;
}

}  // namespace

Int multiplicity(const Cone& sigma) {
  if (sigma.rays().empty()) return 1;
  return abs(determinant(simplicial_lattice(sigma).coords));
}

std::vector<ParallelepipedPoint> parallelepiped_points(const Cone& sigma) {
  std::vector<ParallelepipedPoint> out;
  if (sigma.rays().empty()) return out;
  const auto lat = simplicial_lattice(sigma);
  const std::size_t d = lat.basis.size();
  const std::size_t p = sigma.rank();
  // Row lattice of coords is (rows of D) * Q^{-1}, so w * Q^{-1} with
  // 0 <= w_i < D_ii runs over Z^d modulo the ray lattice.
  const auto snf = smith_normal_form(lat.coords);
  const auto q_inv = unimodular_inverse(snf.V);
  const auto ut = IntMatrix::from_columns(p, sigma.rays());

  std::vector<Int> w(d, 0);
  for (;;) {
    LatticeVector y(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) y[j] += w[i] * q_inv(i, j);
    LatticeVector v(p);
    for (std::size_t j = 0; j < d; ++j) v = add(v, scaled(lat.basis[j], y[j]));
    auto lambda = *solve_rational(ut, to_rational(v));
    RationalVector point(p);
    for (std::size_t i = 0; i < d; ++i) {
      lambda[i] = fractional_part(lambda[i]);
      for (std::size_t j = 0; j < p; ++j) point[j] += lambda[i] * sigma.rays()[i][j];
    }
    if (!is_zero(lambda)) {
      LatticeVector ip(p);
      for (std::size_t j = 0; j < p; ++j) ip[j] = point[j].get_num();
      out.push_back({std::move(ip), std::move(lambda)});
    }
    std::size_t k = 0;
    while (k < d) {
      w[k] += 1;
      if (w[k] < snf.D(k, k)) break;
      w[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  return out;
}

std::string to_string(const Cone& sigma) {
  if (sigma.is_zero()) return "{0}";
  std::string s = "Cone(";
  for (std::size_t i = 0; i < sigma.rays().size(); ++i) {
    if (i) s += ",";
    s += to_string(sigma.rays()[i]);
  }
  s += ")";
  if (!sigma.lineality().empty()) {
    s += "+lin(";
    for (std::size_t i = 0; i < sigma.lineality().size(); ++i) {
      if (i) s += ",";
      s += to_string(sigma.lineality()[i]);
    }
    s += ")";
  }
  return s;
}

}  // namespace toric
