#pragma once

// Shared fixtures for the unit tests and the acceptance runner: the named
// example fans, seeded random generators, and the regression corpus.

#include "toric/charts.hpp"
#include "toric/fan.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace toric;
using Rng = std::mt19937_64;

LatticeVector vec(std::initializer_list<long> xs);
std::vector<LatticeVector> vecs(std::initializer_list<std::initializer_list<long>> xss);
Cone cone(std::size_t rank, std::initializer_list<std::initializer_list<long>> rays);
Fan fan(std::size_t rank, std::initializer_list<std::initializer_list<long>> rays,
        std::vector<std::vector<std::size_t>> max_cones);

Fan orthant_fan(std::size_t rank);
Fan four_ray_fan();              // four 2-cones in rank 3
Fan half_plane_fan();         // upper half plane, two quadrants
Fan opposite_quadrants_fan(); // first and third quadrants
Fan triangle_fan();           // complete: (1,0), (0,1), (-1,-1)
Fan a1_fan();                 // Cone((1,0),(1,2))
Fan torus_fan(std::size_t rank);

long uniform(Rng& rng, long lo, long hi);
LatticeVector random_vector(Rng& rng, std::size_t rank, long bound, bool nonzero = true);
/// cone over 1..max_gens random generators with entries in [-bound, bound].
Cone random_cone(Rng& rng, std::size_t rank, std::size_t max_gens, long bound);
Cone random_pointed_cone(Rng& rng, std::size_t rank, std::size_t max_gens, long bound);
/// Product of a few elementary operations; entries stay small.
IntMatrix random_unimodular(Rng& rng, std::size_t rank);
/// Sub-fan of a randomly transformed and subdivided complete fan.
Fan random_fan(Rng& rng, std::size_t rank);
LaurentPoly random_laurent(Rng& rng, std::size_t rank, std::size_t max_terms, long bound);

/// 50 fans, ranks 2 and 3 alternating, fixed seeds.
const std::vector<Fan>& corpus();

}  // namespace testing
