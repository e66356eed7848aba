// fanalyze: command-line front end for the fan library.
//
// Exit codes: 0 ok, 1 invalid fan, 2 parse/IO error, 3 unsupported rank,
// 4 internal limit exceeded.

#include "toric/charts.hpp"
#include "toric/complement.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/oracles.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace toric;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalidFan = 1, kParse = 2, kRank = 3, kLimit = 4 };

struct Options {
  std::string fan_path;
  std::optional<std::size_t> cone;
  std::optional<unsigned> degree_bound;
  std::string poly_path;
  std::string relative_to;
  std::string format = "json";
  std::string out_path;
  bool with_oracles = false;
};

bool text_mode(const Options& o) { return o.format == "text"; }

std::string vectors_text(const std::vector<LatticeVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + to_string(vs[i]);
  return s + "}";
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (text_mode(o)) std::cout << text;
  else std::cout << j.dump(2) << "\n";
}

// Cone i of the document, built straight from the document's rays.
Cone document_cone(const io::FanDocument& doc, std::size_t i) {
  if (i >= doc.max_cones.size())
    throw Error(ErrorKind::ParseError, "--cone " + std::to_string(i) + " out of range (" +
                                           std::to_string(doc.max_cones.size()) + " cones)");
  std::vector<LatticeVector> rays;
  for (auto r : doc.max_cones[i]) rays.push_back(doc.rays[r]);
  return Cone::from_rays(doc.rank, rays);
}

std::vector<Cone> selected_cones(const Options& o, const io::FanDocument& doc) {
  if (o.cone) return {document_cone(doc, *o.cone)};
  std::vector<Cone> out;
  for (std::size_t i = 0; i < doc.max_cones.size(); ++i) out.push_back(document_cone(doc, i));
  return out;
}

void write_or_print(const Options& o, const io::FanDocument& doc, json extra, std::string text) {
  if (!o.out_path.empty()) io::write_fan_document(o.out_path, doc);
  extra["fan"] = io::to_json(doc);
  if (!o.out_path.empty()) extra["written_to"] = o.out_path;
  text += "rays: " + vectors_text(doc.rays) + "\nmax cones:";
  for (const auto& c : doc.max_cones) {
    text += " [";
    for (std::size_t i = 0; i < c.size(); ++i) text += (i ? " " : "") + std::to_string(c[i]);
    text += "]";
  }
  emit(o, extra, text + "\n");
}

int run_validate(const Options& o) {
  const auto doc = io::read_fan_document(o.fan_path);
  const Fan fan = io::to_fan(doc);
  json j{{"fan_valid", true}, {"diagnostics", json::array()}, {"rank", fan.rank()},
         {"ray_count", fan.ray_generators().size()}, {"max_cone_count", fan.max_cones().size()},
         {"cone_count", fan.all_cones().size()}};
  std::ostringstream t;
  t << "fan valid: yes (rank " << fan.rank() << ", " << fan.ray_generators().size() << " rays, "
    << fan.max_cones().size() << " maximal cones, " << fan.all_cones().size() << " cones)\n";
  emit(o, j, t.str());
  return kOk;
}

int run_analyze(const Options& o) {
  const Fan fan = io::parse_fan(o.fan_path);
  auto report = io::analyze(fan, {o.degree_bound});
  if (o.with_oracles) {
    json oj;
    if (fan.rank() == 2 || fan.rank() == 3) {
      const auto s = oracle::component_sampling_oracle(fan);
      oj["sampled_components"] = s.count;
      oj["stable"] = s.stable;
      oj["agrees"] = s.count == report.n;
    } else {
      oj["sampled_components"] = nullptr;
      oj["note"] = "sampling oracle covers ranks 2 and 3 only";
    }
    report.oracles = oj;
  }
  emit(o, report.to_json(), report.to_text());
  return kOk;
}

int run_dual(const Options& o) {
  const auto doc = io::read_fan_document(o.fan_path);
  const Fan fan = io::to_fan(doc);
  Cone d = o.cone ? dual(document_cone(doc, *o.cone)) : support_dual(fan);
  json j{{"source", o.cone ? json(*o.cone) : json("support")}, {"dual", io::cone_json(d)}};
  emit(o, j, "dual: " + to_string(d) + "\n");
  return kOk;
}

int run_hilbert(const Options& o) {
  const auto doc = io::read_fan_document(o.fan_path);
  io::to_fan(doc);
  json arr = json::array();
  std::string text;
  const auto cones = selected_cones(o, doc);
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const std::size_t id = o.cone ? *o.cone : k;
    const auto hb = hilbert_basis(cones[k]);
    json gens = json::array();
    for (const auto& g : hb.generators) gens.push_back(io::vector_json(g));
    arr.push_back(json{{"cone", id}, {"generators", gens}});
    text += "cone " + std::to_string(id) + ": " + vectors_text(hb.generators) + "\n";
  }
  emit(o, o.cone ? arr[0] : json(arr), text);
  return kOk;
}

int run_equations(const Options& o) {
  const auto doc = io::read_fan_document(o.fan_path);
  io::to_fan(doc);
  json arr = json::array();
  std::string text;
  const auto cones = selected_cones(o, doc);
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const std::size_t id = o.cone ? *o.cone : k;
    const auto eq = chart_equations(cones[k]);
    json gens = json::array(), eqs = json::array();
    for (const auto& g : eq.generators) gens.push_back(io::vector_json(g));
    text += "cone " + std::to_string(id) + ": generators " + vectors_text(eq.generators) + "\n";
    for (const auto& e : eq.equations) {
      eqs.push_back(json{{"a", io::vector_json(e.a)}, {"b", io::vector_json(e.b)}});
      text += "  z^" + to_string(e.a) + " - z^" + to_string(e.b) + " = 0\n";
    }
    arr.push_back(json{{"cone", id}, {"generators", gens}, {"equations", eqs}, {"saturated", eq.saturated},
                       {"caveat", std::string(kUnsaturatedCaveat)}});
  }
  text += "note: " + std::string(kUnsaturatedCaveat) + "\n";
  emit(o, o.cone ? arr[0] : json(arr), text);
  return kOk;
}

int run_resolve(const Options& o) {
  const Fan fan = io::parse_fan(o.fan_path);
  const Fan r = resolve(fan);
  write_or_print(o, io::to_document(r), json{{"smooth", is_smooth_fan(r).smooth}}, "smooth: yes\n");
  return kOk;
}

int run_complete(const Options& o) {
  const Fan fan = io::parse_fan(o.fan_path);
  const auto c = complete_fan(fan);
  write_or_print(o, io::to_document(c.fan), json{{"subdivided", c.subdivided}},
                 std::string("subdivided: ") + (c.subdivided ? "yes" : "no") + "\n");
  return kOk;
}

int run_orbits(const Options& o) {
  const Fan fan = io::parse_fan(o.fan_path);
  std::optional<Fan> ref;
  if (!o.relative_to.empty()) ref = io::parse_fan(o.relative_to);
  const auto records = orbit_report(fan, ref ? &*ref : nullptr);
  json arr = json::array();
  std::string text;
  for (const auto& r : records) {
    const Cone& c = fan.all_cones()[r.cone_id];
    json e{{"cone_id", r.cone_id}, {"cone", io::cone_json(c)}, {"orbit_dim", r.orbit_dim}};
    if (ref) e["in_boundary"] = r.in_boundary;
    arr.push_back(e);
    text += std::to_string(r.cone_id) + ": " + to_string(c) + " orbit dim " + std::to_string(r.orbit_dim) +
            (ref && r.in_boundary ? " (boundary)" : "") + "\n";
  }
  emit(o, json{{"orbits", arr}}, text);
  return kOk;
}

int run_extends(const Options& o) {
  const Fan fan = io::parse_fan(o.fan_path);
  if (o.poly_path.empty()) throw Error(ErrorKind::ParseError, "extends needs --poly");
  const auto f = io::read_laurent(o.poly_path);
  const auto e = extends_to_variety(fan, f);
  json vals = json::array();
  std::string text = std::string("extends: ") + (e.extends ? "yes" : "no") + "\n";
  for (std::size_t i = 0; i < e.valuations.size(); ++i) {
    vals.push_back(json{{"ray", io::vector_json(fan.ray_generators()[i])}, {"valuation", io::integer_json(e.valuations[i])}});
    text += "  v" + to_string(fan.ray_generators()[i]) + " = " + e.valuations[i].get_str() + "\n";
  }
  emit(o, json{{"extends", e.extends}, {"valuations", vals}}, text);
  return kOk;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidFan:
    case ErrorKind::IncompatibleFans:
    case ErrorKind::NotPointed:
    case ErrorKind::NotAFace:
    case ErrorKind::RayOutsideSupport:
      return kInvalidFan;
    case ErrorKind::RankTooSmall:
      return kRank;
    case ErrorKind::IterationLimitExceeded:
    case ErrorKind::Internal:
    case ErrorKind::ComplementNotConnected:
      return kLimit;
    default:
      return kParse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric fan analysis: complement components, Hartogs verdicts, charts, resolutions."};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("fan", o.fan_path, "fan document (JSON)")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    return sub;
  };
  auto* validate = add("validate", "check that the document describes a fan");
  auto* analyze = add("analyze", "smoothness, completeness, complement components, Hartogs verdict");
  analyze->add_option("--degree-bound", o.degree_bound, "report obstruction exponents up to this max-norm");
  analyze->add_flag("--with-oracles", o.with_oracles)->group("");
  auto* dual_cmd = add("dual", "dual of a maximal cone (or of the support)");
  auto* hilbert = add("hilbert", "Hilbert basis of the chart semigroups");
  auto* equations = add("equations", "binomial chart equations");
  auto* resolve_cmd = add("resolve", "smooth refinement by stellar subdivisions");
  auto* complete_cmd = add("complete", "complete fan containing the given one");
  auto* orbits = add("orbits", "orbit-cone correspondence");
  orbits->add_option("--relative-to", o.relative_to, "flag orbits outside this (sub)fan's support");
  auto* extends = add("extends", "does a Laurent polynomial extend to the variety");
  extends->add_option("--poly", o.poly_path, "Laurent polynomial document")->required();
  for (auto* s : {dual_cmd, hilbert, equations}) s->add_option("--cone", o.cone, "maximal cone index in the document");
  for (auto* s : {resolve_cmd, complete_cmd}) s->add_option("-o,--output", o.out_path, "write the resulting fan here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*validate) return run_validate(o);
    if (*analyze) return run_analyze(o);
    if (*dual_cmd) return run_dual(o);
    if (*hilbert) return run_hilbert(o);
    if (*equations) return run_equations(o);
    if (*resolve_cmd) return run_resolve(o);
    if (*complete_cmd) return run_complete(o);
    if (*orbits) return run_orbits(o);
    if (*extends) return run_extends(o);
  } catch (const InvalidFanError& e) {
    const auto report = io::invalid_fan_report(e.diagnostics());
    if (text_mode(o)) std::cout << report.to_text();
    else std::cout << report.to_json().dump(2) << "\n";
    return kInvalidFan;
  } catch (const Error& e) {
    std::cerr << "fanalyze: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "fanalyze: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
