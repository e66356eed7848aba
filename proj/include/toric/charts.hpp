#pragma once

#include "toric/cone.hpp"
#include "toric/fan.hpp"

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

namespace toric {

/// Minimal generating set of S_sigma = dual(sigma) cap M.
///
/// When sigma is not full-dimensional, S_sigma contains the units
/// sigma^perp cap M; those enter as plus/minus an HNF basis, and every other
/// generator is reduced modulo the unit lattice against that basis.
struct SemigroupBasis {
  Cone cone;
  std::vector<LatticeVector> generators;  // lex-sorted
};

/// Throws NotPointed.
SemigroupBasis hilbert_basis(const Cone& sigma);

/// z^a - z^b = 0 over the chart generators: sum a_i m_i = sum b_i m_i.
struct BinomialEquation {
  LatticeVector a;
  LatticeVector b;
};

inline constexpr std::string_view kUnsaturatedCaveat =
    "binomials come from a lattice-kernel basis; they cut out the chart on the torus but need not "
    "generate the full (saturated) toric ideal";

struct ChartEquations {
  std::vector<LatticeVector> generators;  // the Hilbert basis m_1..m_g
  std::vector<BinomialEquation> equations;
  bool saturated = false;
};

/// Throws NotPointed.
ChartEquations chart_equations(const Cone& sigma);

/// m0 in S_sigma with tau = sigma cap m0^perp, chosen as the sum of the
/// Hilbert basis elements vanishing on tau. Throws NotAFace.
LatticeVector face_localization(const Cone& sigma, const Cone& tau);

/// Laurent polynomial with exact rational coefficients; no zero terms stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  void add_term(const LatticeVector& exponent, const Rat& coefficient);
  const std::map<LatticeVector, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<LatticeVector> support() const;

  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<LatticeVector, Rat> terms_;
};

/// <u_rho, I>. Throws ZeroVector.
Int valuation_monomial(const LatticeVector& rho, const LatticeVector& exponent);
/// min over the support of f. Throws ZeroVector, ZeroPolynomial.
Int valuation_poly(const LatticeVector& rho, const LaurentPoly& f);

/// |fan|^dual = {I : <u_rho, I> >= 0 for every ray}.
Cone support_dual(const Fan& fan);

struct Extendability {
  bool extends;
  std::vector<Int> valuations;  // parallel to fan.ray_generators()
};

/// Whether f extends from the torus to X_fan. Decided both by exponent
/// membership in support_dual and by per-ray valuations; a disagreement
/// throws Internal. Throws ZeroPolynomial.
Extendability extends_to_variety(const Fan& fan, const LaurentPoly& f);
/// Third route: every exponent lies in dual(sigma) for every maximal sigma.
bool extends_on_every_chart(const Fan& fan, const LaurentPoly& f);

struct OrbitRecord {
  std::size_t cone_id;  // index into fan.all_cones()
  std::size_t orbit_dim;
  bool in_boundary;
};

/// One record per cone. With `relative_to`, in_boundary flags cones whose
/// relative interior lies outside |relative_to|; requires
/// |relative_to| subset of |fan| (IncompatibleFans otherwise).
std::vector<OrbitRecord> orbit_report(const Fan& fan, const Fan* relative_to = nullptr);

}  // namespace toric
