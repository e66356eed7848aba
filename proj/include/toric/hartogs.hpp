#pragma once

#include "toric/complement.hpp"
#include "toric/fan.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace toric {

enum class Verdict { Holds, Fails, Unknown, NotApplicableCompact };

std::string_view to_string(Verdict v) noexcept;

/// Decision on the Hartogs extension phenomenon for X_fan.
///
/// A concave complement component forces the phenomenon (Holds). The
/// converse is only known for a connected complement, so with two or more
/// components and none concave the answer is Unknown. An empty complement
/// means X_fan is compact and the question does not apply.
struct HartogsVerdict {
  Verdict verdict;
  std::optional<std::size_t> witness_component;  // present iff Holds
  std::optional<bool> h1c_trivial;               // present iff n == 1
  std::size_t n;
};

/// Vanishing of H^1_c(X, O) for a fan with connected complement: holds iff
/// the complement is concave. Throws ComplementNotConnected when n != 1.
bool h1c_trivial(const Fan& fan);
bool h1c_trivial(const ComplementAnalysis& analysis);

/// Throws RankTooSmall for rank < 2.
HartogsVerdict hartogs_verdict(const Fan& fan);
HartogsVerdict hartogs_verdict(const ComplementAnalysis& analysis);

/// Nonzero lattice points I of the closure dual of the (unique) complement
/// component with max-norm at most `bound`. These are the exponents that may
/// occur in classes of H^1_c(X, O); the set is empty iff H^1_c vanishes.
struct ObstructionSet {
  unsigned bound;
  std::vector<LatticeVector> exponents;  // ordered by max-norm, then lex
};

ObstructionSet obstruction_exponents(const Fan& fan, unsigned bound);
ObstructionSet obstruction_exponents(const ComplementAnalysis& analysis, unsigned bound);

/// Lattice points of `cone` in the box [-bound, bound]^p, ordered by
/// max-norm, then lex.
std::vector<LatticeVector> bounded_lattice_points(const Cone& cone, unsigned bound, bool include_zero);

}  // namespace toric
