#include "toric/io.hpp"

#include "toric/complement.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace toric::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

Int parse_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Int x;
    const auto s = j.get<std::string>();
    if (s.empty() || x.set_str(s, 10) != 0) parse_error(where + ": '" + s + "' is not an integer");
    return x;
  }
  parse_error(where + ": expected an integer");
}

LatticeVector parse_vector(const json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected an array of integers");
  LatticeVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], where));
  return v;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

}  // namespace

FanDocument parse_fan_document(const json& j) {
  FanDocument doc;
  const auto& rank = field(j, "rank");
  if (!rank.is_number_integer() || rank.get<long long>() <= 0) parse_error("'rank' must be a positive integer");
  doc.rank = static_cast<std::size_t>(rank.get<long long>());

  const auto& rays = field(j, "rays");
  if (!rays.is_array()) parse_error("'rays' must be an array");
  std::set<LatticeVector> directions;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string where = "ray " + std::to_string(i);
    auto v = parse_vector(rays[i], where);
    if (v.size() != doc.rank) parse_error(where + " has length " + std::to_string(v.size()) + ", expected rank " + std::to_string(doc.rank));
    if (is_zero(v)) parse_error(where + " is the zero vector");
    if (!directions.insert(primitivize(v).primitive).second) parse_error(where + " duplicates an earlier ray");
    doc.rays.push_back(std::move(v));
  }

  const auto& cones = field(j, "max_cones");
  if (!cones.is_array()) parse_error("'max_cones' must be an array");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string where = "max_cones[" + std::to_string(c) + "]";
    if (!cones[c].is_array()) parse_error(where + " must be an array of ray indices");
    std::vector<std::size_t> idx;
    for (const auto& e : cones[c]) {
      if (!e.is_number_integer() || e.get<long long>() < 0) parse_error(where + ": indices must be nonnegative integers");
      const auto i = static_cast<std::size_t>(e.get<long long>());
      if (i >= doc.rays.size()) parse_error(where + ": index " + std::to_string(i) + " out of range");
      idx.push_back(i);
    }
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) parse_error(where + " repeats a ray index");
    if (!seen.insert(sorted).second) parse_error(where + " duplicates an earlier cone");
    doc.max_cones.push_back(std::move(idx));
  }
  return doc;
}

FanDocument read_fan_document(const std::filesystem::path& path) { return parse_fan_document(read_json(path)); }

json integer_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json vector_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

namespace {
json vectors_json(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}
}  // namespace

json cone_json(const Cone& c) { return json{{"rays", vectors_json(c.rays())}, {"lineality", vectors_json(c.lineality())}}; }

json to_json(const FanDocument& doc) {
  json cones = json::array();
  for (const auto& c : doc.max_cones) cones.push_back(c);
  return json{{"rank", doc.rank}, {"rays", vectors_json(doc.rays)}, {"max_cones", cones}};
}

void write_fan_document(const std::filesystem::path& path, const FanDocument& doc) {
  std::ofstream out(path);
  if (!out) parse_error("cannot write " + path.string());
  out << to_json(doc).dump(2) << "\n";
}

Fan to_fan(const FanDocument& doc) { return fan_from_max_cones(doc.rank, doc.max_cones, doc.rays); }

FanDocument to_document(const Fan& fan) {
  FanDocument doc;
  doc.rank = fan.rank();
  doc.rays = fan.ray_generators();
  for (const auto& c : fan.max_cones()) {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays()) {
      auto it = std::lower_bound(doc.rays.begin(), doc.rays.end(), r);
      idx.push_back(static_cast<std::size_t>(it - doc.rays.begin()));
    }
    doc.max_cones.push_back(std::move(idx));
  }
  return doc;
}

Fan parse_fan(const std::filesystem::path& path) { return to_fan(read_fan_document(path)); }

LaurentPoly parse_laurent(const json& j) {
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) parse_error("'terms' must be an array");
  LaurentPoly f;
  std::optional<std::size_t> rank;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "term " + std::to_string(i);
    auto e = parse_vector(field(terms[i], "exponent"), where);
    if (rank && e.size() != *rank) parse_error(where + ": exponent length differs from earlier terms");
    rank = e.size();
    const auto& cj = field(terms[i], "coefficient");
    Rat c;
    if (cj.is_string()) {
      const auto s = cj.get<std::string>();
      if (s.empty() || c.set_str(s, 10) != 0 || c.get_den() == 0) parse_error(where + ": bad coefficient '" + s + "'");
      c.canonicalize();
    } else {
      c = Rat(parse_integer(cj, where));
    }
    f.add_term(e, c);
  }
  return f;
}

LaurentPoly read_laurent(const std::filesystem::path& path) { return parse_laurent(read_json(path)); }

json to_json(const LaurentPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json{{"exponent", vector_json(e)}, {"coefficient", c.get_str()}});
  return json{{"terms", terms}};
}

AnalysisReport invalid_fan_report(const std::vector<std::string>& diagnostics) {
  AnalysisReport r;
  r.fan_valid = false;
  r.diagnostics = diagnostics;
  return r;
}

AnalysisReport analyze(const Fan& fan, const AnalysisOptions& options) {
  if (fan.rank() < 2) throw Error(ErrorKind::RankTooSmall, "analysis needs rank >= 2");
  AnalysisReport r;
  r.fan_valid = true;
  r.rank = fan.rank();
  const auto smooth = is_smooth_fan(fan);
  r.smooth = smooth.smooth;
  r.smooth_cones = smooth.per_cone;

  const auto analysis = complement_components(fan);
  r.complete = analysis.n() == 0;
  r.n = analysis.n();
  for (const auto& c : analysis.components)
    r.components.push_back({c.id, c.region_ids.size(), c.concave, c.closure_dual.rays(), c.closure_dual.lineality()});

  const auto verdict = hartogs_verdict(analysis);
  r.verdict = verdict.verdict;
  r.witness_component = verdict.witness_component;
  r.h1c_trivial = verdict.h1c_trivial;
  if (options.degree_bound && analysis.n() == 1) {
    r.bound = *options.degree_bound;
    r.obstruction_exponents = obstruction_exponents(analysis, *options.degree_bound).exponents;
  }
  return r;
}

json AnalysisReport::to_json() const {
  json j;
  j["fan_valid"] = fan_valid;
  j["diagnostics"] = diagnostics;
  if (!fan_valid) return j;
  j["rank"] = rank;
  j["smooth"] = smooth;
  j["smooth_cones"] = smooth_cones;
  j["complete"] = complete;
  json comps = json::array();
  for (const auto& c : components)
    comps.push_back(json{{"id", c.id},
                         {"region_count", c.region_count},
                         {"concave", c.concave},
                         {"closure_dual", {{"rays", vectors_json(c.closure_dual_rays)},
                                           {"lineality", vectors_json(c.closure_dual_lineality)}}}});
  j["complement"] = json{{"n", n}, {"components", comps}};
  json h;
  h["verdict"] = std::string(to_string(verdict));
  if (witness_component) h["witness_component"] = *witness_component;
  if (h1c_trivial) h["h1c_trivial"] = *h1c_trivial;
  if (obstruction_exponents) {
    h["bound"] = *bound;
    h["obstruction_exponents"] = vectors_json(*obstruction_exponents);
  }
  j["hartogs"] = h;
  if (oracles) j["oracles"] = *oracles;
  return j;
}

namespace {
std::string list_string(const std::vector<LatticeVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ", ";
    s += to_string(vs[i]);
  }
  return s + "}";
}
const char* yes_no(bool b) { return b ? "yes" : "no"; }
}  // namespace

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  if (!fan_valid) {
    out << "fan valid: no\n";
    for (const auto& d : diagnostics) out << "  " << d << "\n";
    return out.str();
  }
  out << "fan valid: yes (rank " << rank << ")\n";
  out << "smooth: " << yes_no(smooth) << "\n";
  for (std::size_t i = 0; i < smooth_cones.size(); ++i)
    out << "  max cone " << i << ": " << (smooth_cones[i] ? "smooth" : "singular") << "\n";
  out << "complete: " << yes_no(complete) << "\n";
  out << "complement components: " << n << "\n";
  for (const auto& c : components) {
    out << "  component " << c.id << ": " << c.region_count << " region(s), concave: " << yes_no(c.concave)
        << ", closure dual rays " << list_string(c.closure_dual_rays) << " lineality "
        << list_string(c.closure_dual_lineality) << "\n";
  }
  out << "hartogs: " << to_string(verdict);
  if (witness_component) out << " (witness component " << *witness_component << ")";
  out << "\n";
  if (h1c_trivial) out << "H^1_c trivial: " << yes_no(*h1c_trivial) << "\n";
  if (obstruction_exponents)
    out << "obstruction exponents (|I| <= " << *bound << "): " << list_string(*obstruction_exponents) << "\n";
  if (oracles) out << "oracles: " << oracles->dump() << "\n";
  return out.str();
}

}  // namespace toric::io
