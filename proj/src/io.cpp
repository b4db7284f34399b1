#include "rectconst/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "rectconst/error.hpp"

namespace rectconst {
namespace {

std::size_t spec_dim(const json& spec) {
  if (!spec.contains("dim")) return 2;
  const json& d = spec.at("dim");
  if (!d.is_number_integer() || d.get<long long>() < 2) throw ParseError("\"dim\" must be an integer >= 2");
  return d.get<std::size_t>();
}

double spec_p(const json& spec) {
  if (!spec.contains("p")) throw ParseError("lp spec needs \"p\"");
  const json& p = spec.at("p");
  if (p.is_string()) {
    const auto s = p.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    throw ParseError("\"p\" must be a number >= 1 or \"inf\"");
  }
  if (!p.is_number()) throw ParseError("\"p\" must be a number >= 1 or \"inf\"");
  const double v = p.get<double>();
  if (!(v >= 1.0)) throw ParseError("\"p\" must be >= 1");
  return v;
}

std::vector<Vector> spec_vertices(const json& spec) {
  if (!spec.contains("vertices") || !spec.at("vertices").is_array()) {
    throw ParseError("polyhedral spec needs a \"vertices\" array");
  }
  std::vector<Vector> out;
  for (const json& v : spec.at("vertices")) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ParseError("each vertex must be a pair of numbers");
    }
    out.push_back(Vector{v[0].get<double>(), v[1].get<double>()});
  }
  return out;
}

json number_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

NormDescriptor parse_norm_spec(const json& spec) {
  if (!spec.is_object() || !spec.contains("type") || !spec.at("type").is_string()) {
    throw ParseError("norm spec must be an object with a string \"type\"");
  }
  const auto type = spec.at("type").get<std::string>();
  try {
    if (type == "euclidean") return NormDescriptor::euclidean(spec_dim(spec));
    if (type == "lp") return NormDescriptor::lp(spec_p(spec), spec_dim(spec));
    if (type == "polyhedral") {
      if (spec.contains("dim") && spec_dim(spec) != 2) throw ParseError("polyhedral norms are planar");
      return NormDescriptor::polyhedral(spec_vertices(spec));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid norm spec: ") + e.what());
  }
  throw ParseError("unknown norm type \"" + type + "\"");
}

NormDescriptor parse_norm_spec_text(const std::string& text) {
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("norm spec is not valid JSON: ") + e.what());
  }
  return parse_norm_spec(spec);
}

NormDescriptor load_norm_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read norm spec " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_norm_spec_text(os.str());
}

json norm_to_json(const NormDescriptor& norm) {
  if (const PolygonNorm* poly = norm.polygon()) {
    json verts = json::array();
    for (const Vector& v : poly->vertices()) verts.push_back({v[0], v[1]});
    return {{"type", "polyhedral"}, {"vertices", verts}};
  }
  if (const LpNorm* lp = norm.lp_norm()) return {{"type", "lp"}, {"p", number_or_string(lp->p)}, {"dim", lp->dim}};
  return {{"type", "euclidean"}, {"dim", norm.dim()}};
}

void to_json(json& j, const Vector& v) { j = std::vector<double>(v.coords().begin(), v.coords().end()); }
void from_json(const json& j, Vector& v) { v = Vector(j.get<std::vector<double>>()); }

void to_json(json& j, const SearchConfig& c) {
  j = {{"theta_resolution", c.theta_resolution}, {"phi_resolution", c.phi_resolution},
       {"t_max", c.t_max}, {"t_grid", c.t_grid}, {"refine_tol", c.refine_tol}, {"tol", c.tol},
       {"threads", c.threads}, {"seed", c.seed}};
}

void from_json(const json& j, SearchConfig& c) {
  j.at("theta_resolution").get_to(c.theta_resolution);
  j.at("phi_resolution").get_to(c.phi_resolution);
  j.at("t_max").get_to(c.t_max);
  j.at("t_grid").get_to(c.t_grid);
  j.at("refine_tol").get_to(c.refine_tol);
  j.at("tol").get_to(c.tol);
  j.at("threads").get_to(c.threads);
  j.at("seed").get_to(c.seed);
}

void to_json(json& j, const MuWitness& w) { j = {{"x", w.x}, {"y", w.y}, {"t", w.t}, {"value", w.value}}; }

void from_json(const json& j, MuWitness& w) {
  j.at("x").get_to(w.x);
  j.at("y").get_to(w.y);
  j.at("t").get_to(w.t);
  j.at("value").get_to(w.value);
}

void to_json(json& j, const OrthoCertificate& c) {
  j = {{"d_minus", c.d_minus}, {"d_plus", c.d_plus}, {"method", method_name(c.method)}, {"tol", c.tol}};
}

void to_json(json& j, const ModulusPoint& p) {
  j = {{"lambda", p.lambda},
       {"star_value", p.star_value},
       {"reciprocal_value", p.reciprocal_value},
       {"value", p.value},
       {"branch", p.branch == ModulusBranch::star ? "star" : "reciprocal"},
       {"method", p.method},
       {"witness", p.witness}};
}

void to_json(json& j, const StarModulus& s) {
  j = {{"lambda", s.lambda}, {"value", s.value}, {"method", s.method}, {"witness", s.witness}};
}

void to_json(json& j, const SegmentReport& s) {
  j = {{"u", s.u}, {"v", s.v}, {"length", s.length}, {"is_max", s.is_max}};
}

void to_json(json& j, const SegmentCheck& s) {
  j = {{"orthogonal", s.orthogonal}, {"certificate", s.certificate}, {"lemma_violation", s.lemma_violation}};
}

void to_json(json& j, const IpsReport& r) {
  j = {{"passed", r.passed},
       {"sup_found", r.sup_found},
       {"witness", r.witness ? json(*r.witness) : json(nullptr)},
       {"lambda_window", {r.window_lo, r.window_hi}},
       {"window_note", "open interval, both ends shrunk by 1e-9"},
       {"threshold", r.threshold}};
}

void to_json(json& j, const FlatnessReport& r) {
  j = {{"l", r.l},
       {"seed", r.seed},
       {"samples", r.samples},
       {"max_segment", r.max_segment},
       {"hypothesis_a", r.hypothesis_a},
       {"conclusion_b", r.conclusion_b},
       {"growth_violation", r.growth_violation},
       {"converse_candidate", r.converse_candidate},
       {"converse_note", "sampling can refute but never certify the growth conclusion"},
       {"min_growth", r.min_growth},
       {"min_x", r.min_x},
       {"min_y", r.min_y},
       {"min_lambda", r.min_lambda}};
}

void to_json(json& j, const ValidationReport& r) {
  j = {{"samples", r.samples}, {"seed", r.seed}, {"passed", r.passed()}, {"violations", r.violations}};
}

void to_json(json& j, const PropertyResult& r) {
  j = {{"name", r.name},
       {"description", r.description},
       {"status", status_name(r.status)},
       {"trials", r.trials},
       {"violations", r.violations},
       {"detail", r.detail}};
}

void to_json(json& j, const RunReport& r) {
  j = {{"command", r.command},
       {"norm", r.norm},
       {"config", r.config},
       {"result", r.result},
       {"elapsed_s", r.elapsed_s},
       {"tool_version", r.tool_version}};
}

void from_json(const json& j, RunReport& r) {
  j.at("command").get_to(r.command);
  r.norm = j.at("norm");
  r.config = j.at("config");
  r.result = j.at("result");
  j.at("elapsed_s").get_to(r.elapsed_s);
  j.at("tool_version").get_to(r.tool_version);
}

std::string serialize_report(const RunReport& r) { return json(r).dump(2) + "\n"; }

RunReport parse_report(const std::string& text) {
  try {
    return json::parse(text).get<RunReport>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_modulus_csv(std::ostream& os, std::span<const ModulusPoint> points) {
  os << "lambda,star_value,value,witness_x1,witness_x2,witness_y1,witness_y2,witness_t\n";
  for (const ModulusPoint& p : points) {
    const MuWitness& w = p.witness;
    os << csv_number(p.lambda) << ',' << csv_number(p.star_value) << ',' << csv_number(p.value) << ','
       << csv_number(w.x[0]) << ',' << csv_number(w.x[1]) << ',' << csv_number(w.y[0]) << ','
       << csv_number(w.y[1]) << ',' << csv_number(w.t) << '\n';
  }
}

}  // namespace rectconst
