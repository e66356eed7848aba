#pragma once

#include "toric/charts.hpp"
#include "toric/fan.hpp"
#include "toric/hartogs.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace toric::io {

/// On-disk fan: {"rank": p, "rays": [[...], ...], "max_cones": [[i, j, ...], ...]}.
/// Integers may be JSON numbers or decimal strings (for big values).
struct FanDocument {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
};

/// Structural checks only (shape, zero rays, index range, duplicates).
/// Throws ParseError.
FanDocument parse_fan_document(const nlohmann::json& j);
FanDocument read_fan_document(const std::filesystem::path& path);
nlohmann::json to_json(const FanDocument& doc);
void write_fan_document(const std::filesystem::path& path, const FanDocument& doc);

/// Throws InvalidFanError for geometric violations.
Fan to_fan(const FanDocument& doc);
FanDocument to_document(const Fan& fan);
/// read_fan_document + to_fan.
Fan parse_fan(const std::filesystem::path& path);

/// {"terms": [{"exponent": [...], "coefficient": "p/q"}, ...]}
LaurentPoly parse_laurent(const nlohmann::json& j);
LaurentPoly read_laurent(const std::filesystem::path& path);
nlohmann::json to_json(const LaurentPoly& f);

nlohmann::json integer_json(const Int& x);
nlohmann::json vector_json(const LatticeVector& v);
nlohmann::json cone_json(const Cone& c);

struct AnalysisOptions {
  std::optional<unsigned> degree_bound;
};

/// Everything `analyze` reports; json and text output are both rendered
/// from this one object.
struct AnalysisReport {
  bool fan_valid = false;
  std::vector<std::string> diagnostics;
  std::size_t rank = 0;
  bool smooth = false;
  std::vector<bool> smooth_cones;
  bool complete = false;
  std::size_t n = 0;
  struct Component {
    std::size_t id;
    std::size_t region_count;
    bool concave;
    std::vector<LatticeVector> closure_dual_rays;
    std::vector<LatticeVector> closure_dual_lineality;
  };
  std::vector<Component> components;
  Verdict verdict = Verdict::Unknown;
  std::optional<std::size_t> witness_component;
  std::optional<bool> h1c_trivial;
  std::optional<unsigned> bound;
  std::optional<std::vector<LatticeVector>> obstruction_exponents;
  /// Free-form extra section (the oracle comparison, when requested).
  std::optional<nlohmann::json> oracles;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Throws RankTooSmall for rank < 2.
AnalysisReport analyze(const Fan& fan, const AnalysisOptions& options);
AnalysisReport invalid_fan_report(const std::vector<std::string>& diagnostics);

}  // namespace toric::io
