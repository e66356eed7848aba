#pragma once

// Brute-force and randomized cross-checks. Nothing in the production path
// calls into this module; it exists to falsify it.

#include "toric/cone.hpp"
#include "toric/fan.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace toric::oracle {

struct OracleConfig {
  unsigned lattice_bound = 5;
  std::size_t sample_count = 2000;
  std::uint64_t seed = 0x5eed;
};

/// All I with |I|_inf <= bound, nonnegative on every ray of sigma and
/// orthogonal to its lineality.
std::set<LatticeVector> dual_lattice_oracle(const Cone& sigma, unsigned bound);

/// Irreducible elements among the bounded lattice points of dual(sigma).
/// Units are represented by +/- an HNF basis of the unit lattice and every
/// other irreducible is reduced modulo that basis (the same normalization
/// hilbert_basis uses), so the two sets are directly comparable.
std::set<LatticeVector> hilbert_bruteforce(const Cone& sigma, unsigned bound);

/// Facet inequalities and span equations of cone(gens), found by testing
/// every candidate hyperplane through (dim - 1) generators.
struct HRep {
  std::vector<LatticeVector> inequalities;  // <n, x> >= 0
  std::vector<LatticeVector> equations;     // <e, x> = 0
};
HRep facets_bruteforce(std::size_t rank, const std::vector<LatticeVector>& gens);

struct SamplingResult {
  std::size_t count;
  bool stable;  // same count at 2 * sample_count
};

/// Monte-Carlo count of the connected components of R^p minus |fan|, p in {2, 3}.
SamplingResult component_sampling_oracle(const Fan& fan, const OracleConfig& cfg = {});

/// d_k / d_{k-1}, d_k = gcd of the k x k minors.
std::vector<Int> invariant_factors_by_minors(const IntMatrix& a);

/// Every x with |x|_inf <= bound and a x = 0.
std::vector<LatticeVector> kernel_bruteforce(const IntMatrix& a, unsigned bound);

}  // namespace toric::oracle
