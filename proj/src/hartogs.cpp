#include "toric/hartogs.hpp"

#include "toric/error.hpp"

#include <algorithm>

namespace toric {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Unknown: return "Unknown";
    case Verdict::NotApplicableCompact: return "NotApplicableCompact";
  }
  return "Unknown";
}

namespace {

const ComplementComponent& unique_component(const ComplementAnalysis& analysis) {
  if (analysis.n() != 1)
    throw Error(ErrorKind::ComplementNotConnected,
                "the complement has " + std::to_string(analysis.n()) + " components, expected exactly one");
  return analysis.components.front();
}

}  // namespace

bool h1c_trivial(const ComplementAnalysis& analysis) { return unique_component(analysis).concave; }

bool h1c_trivial(const Fan& fan) { return h1c_trivial(complement_components(fan)); }

HartogsVerdict hartogs_verdict(const ComplementAnalysis& analysis) {
  HartogsVerdict v{Verdict::Unknown, std::nullopt, std::nullopt, analysis.n()};
  if (analysis.n() == 0) {
    v.verdict = Verdict::NotApplicableCompact;
    return v;
  }
  if (analysis.n() == 1) v.h1c_trivial = analysis.components.front().concave;
  for (const auto& c : analysis.components)
    if (c.concave) {
      v.verdict = Verdict::Holds;
      v.witness_component = c.id;
      return v;
    }
  v.verdict = analysis.n() == 1 ? Verdict::Fails : Verdict::Unknown;
  return v;
}

HartogsVerdict hartogs_verdict(const Fan& fan) {
  if (fan.rank() < 2) throw Error(ErrorKind::RankTooSmall, "the Hartogs question needs at least two variables");
  return hartogs_verdict(complement_components(fan));
}

std::vector<LatticeVector> bounded_lattice_points(const Cone& cone, unsigned bound, bool include_zero) {
  std::vector<LatticeVector> out;
  const std::size_t p = cone.rank();
  if (cone.is_zero()) {
    if (include_zero) out.emplace_back(p);
    return out;
  }
  const long b = static_cast<long>(bound);
  std::vector<long> x(p, -b);
  for (;;) {
    LatticeVector v(x.begin(), x.end());
    if ((include_zero || !is_zero(v)) && contains(cone, v).inside) out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < p && x[k] == b) x[k++] = -b;
    if (k == p) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& c) {
    const Int na = inf_norm(a), nc = inf_norm(c);
    if (na != nc) return na < nc;
    return a < c;
  });
  return out;
}

ObstructionSet obstruction_exponents(const ComplementAnalysis& analysis, unsigned bound) {
  const auto& component = unique_component(analysis);
  return {bound, bounded_lattice_points(component.closure_dual, bound, false)};
}

ObstructionSet obstruction_exponents(const Fan& fan, unsigned bound) {
  return obstruction_exponents(complement_components(fan), bound);
}

}  // namespace toric
