#include "rectconst/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rectconst/error.hpp"
#include "rectconst/io.hpp"
#include "rectconst/random.hpp"

namespace rectconst {
namespace {

struct Options {
  std::string norm_path;
  std::string out_path;
  std::string csv_path;
  std::optional<std::string> lambda_grid;
  std::string x_text;
  std::string y_text;
  std::size_t random_polygons = 0;
  std::size_t trials = 1000;
  SearchConfig config;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item.substr(b), &used));
      if (item.find_first_not_of(" \t", b + used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(std::string("cannot parse ") + what + " entry \"" + item + "\"");
    }
  }
  return out;
}

Vector parse_vector(const std::string& text, const NormDescriptor& norm, const char* what) {
  const auto coords = parse_list(text, what);
  if (coords.size() != norm.dim()) {
    throw ParseError(std::string(what) + " needs " + std::to_string(norm.dim()) + " coordinates");
  }
  return Vector(coords);
}

json mu_result(const NormDescriptor& norm, const SearchConfig& config) {
  const bool exact = polyhedral_equivalent(norm).has_value();
  const MuWitness w = rectangular_constant(norm, config);
  const char* method = exact ? "polyhedral-exact" : (norm.dim() == 2 ? "sweep" : "monte-carlo");
  return {{"value", w.value},
          {"method", method},
          {"witness", w},
          {"certificate", is_bj_orthogonal(norm, w.x, w.y, config.tol).certificate}};
}

class Command {
 public:
  Command(std::string name, const Options& opts, std::ostream& out) : name_(std::move(name)), opts_(opts), out_(out) {}

  int emit(json norm, json result) {
    RunReport r;
    r.command = name_;
    r.norm = std::move(norm);
    r.config = opts_.config;
    r.result = std::move(result);
    r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const std::string text = serialize_report(r);
    if (opts_.out_path.empty()) {
      out_ << text;
    } else {
      std::ofstream f(opts_.out_path);
      if (!(f << text)) throw Error("cannot write report to " + opts_.out_path);
    }
    return kExitOk;
  }

 private:
  std::string name_;
  const Options& opts_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

NormDescriptor require_norm(const Options& o) {
  if (o.norm_path.empty()) throw ParseError("--norm is required");
  return load_norm_spec(o.norm_path);
}

int run_mu(const Options& o, std::ostream& out) {
  Command cmd("mu", o, out);
  const NormDescriptor norm = require_norm(o);
  return cmd.emit(norm_to_json(norm), mu_result(norm, o.config));
}

int run_modulus(const Options& o, std::ostream& out) {
  Command cmd("modulus", o, out);
  const NormDescriptor norm = require_norm(o);
  const std::vector<double> grid =
      o.lambda_grid ? parse_list(*o.lambda_grid, "--lambda-grid") : std::vector<double>{0.5, 1.0, 2.0};
  const ModulusCurve curve = modulus_curve(norm, grid, o.config);
  if (!o.csv_path.empty()) {
    std::ofstream f(o.csv_path);
    write_modulus_csv(f, curve.points);
    if (!f) throw Error("cannot write CSV to " + o.csv_path);
  }
  json failures = json::array();
  for (const auto& e : curve.failures) failures.push_back({{"lambda", e.lambda}, {"error", e.message}});
  const int code = cmd.emit(norm_to_json(norm), {{"points", curve.points}, {"failures", failures}});
  return curve.failures.empty() ? code : kExitComputation;
}

int run_ortho(const Options& o, std::ostream& out) {
  Command cmd("ortho", o, out);
  const NormDescriptor norm = require_norm(o);
  const Vector x = parse_vector(o.x_text, norm, "--x");
  const Vector y = parse_vector(o.y_text, norm, "--y");
  const OrthoResult r = is_bj_orthogonal(norm, x, y, o.config.tol);
  return cmd.emit(norm_to_json(norm), {{"x", x}, {"y", y}, {"orthogonal", r.orthogonal}, {"certificate", r.certificate}});
}

int run_segments(const Options& o, std::ostream& out) {
  Command cmd("segments", o, out);
  const NormDescriptor norm = require_norm(o);
  json result = max_segment_length(norm);
  if (const auto poly = polyhedral_equivalent(norm)) {
    json edges = json::array();
    for (const Edge& e : poly->polygon()->edges()) {
      edges.push_back({{"from", e.from}, {"to", e.to}, {"length", eval_norm(*poly, e.to - e.from)}});
    }
    result["edges"] = edges;
  }
  return cmd.emit(norm_to_json(norm), result);
}

int run_ips(const Options& o, std::ostream& out) {
  Command cmd("ips", o, out);
  const NormDescriptor norm = require_norm(o);
  return cmd.emit(norm_to_json(norm), ips_test(norm, o.config));
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Command cmd("verify", o, out);
  std::vector<NormDescriptor> norms;
  json norm_echo;
  if (!o.norm_path.empty()) {
    norms.push_back(load_norm_spec(o.norm_path));
    norm_echo = norm_to_json(norms.front());
  }
  if (o.random_polygons > 0) {
    auto polys = random_polygons(o.random_polygons, o.config.seed);
    norms.insert(norms.end(), polys.begin(), polys.end());
    json gen = {{"random_polygons", o.random_polygons}, {"seed", o.config.seed}};
    norm_echo = norm_echo.is_null() ? gen : json{{"spec", norm_echo}, {"generated", gen}};
  }
  if (norms.empty()) throw ParseError("verify needs --norm or --random-polygons");

  VerifyOptions vo;
  vo.trials = o.trials;
  vo.seed = o.config.seed;
  vo.config = o.config;
  const auto results = run_verification(norms, vo);
  const bool ok = all_passed(results);
  json names = json::array();
  for (const auto& n : norms) names.push_back(n.describe());
  cmd.emit(norm_echo, {{"passed", ok}, {"norms", names}, {"trials", o.trials}, {"properties", results}});
  for (const auto& r : results) {
    if (r.status == PropertyStatus::failed) err << "invariant failed: " << r.name << ": " << r.detail << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birkhoff-James orthogonality, rectangular constant and rectangular modulus of planar normed spaces",
               "rectconst"};
  app.require_subcommand(1, 1);
  Options o;
  SearchConfig& c = o.config;

  app.add_option("--norm", o.norm_path, "norm spec JSON file");
  app.add_option("--out", o.out_path, "write the JSON report here instead of stdout");
  app.add_option("--theta-res", c.theta_resolution, "base points of the sweep")->capture_default_str();
  app.add_option("--phi-res", c.phi_resolution, "cone grid and samples per arc")->capture_default_str();
  app.add_option("--t-max", c.t_max, "half-width of the t-domain")->capture_default_str();
  app.add_option("--refine-tol", c.refine_tol, "golden-section tolerance")->capture_default_str();
  app.add_option("--tol", c.tol, "orthogonality tolerance")->capture_default_str();
  app.add_option("--threads", c.threads, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--seed", c.seed, "seed for sampling and random polygons")->capture_default_str();
  app.fallthrough();

  auto* mu = app.add_subcommand("mu", "rectangular constant");
  auto* mod = app.add_subcommand("modulus", "rectangular modulus over a lambda grid");
  mod->add_option("--lambda-grid", o.lambda_grid, "comma-separated lambdas (default 0.5,1,2)");
  mod->add_option("--csv", o.csv_path, "also write the curve as CSV");
  auto* ortho = app.add_subcommand("ortho", "decide x _|_B y");
  ortho->add_option("--x", o.x_text, "comma-separated coordinates")->required();
  ortho->add_option("--y", o.y_text, "comma-separated coordinates")->required();
  auto* seg = app.add_subcommand("segments", "longest straight segment of the unit sphere");
  auto* ips = app.add_subcommand("ips", "inner-product-space window test");
  auto* ver = app.add_subcommand("verify", "run every invariant on a norm or on random polygons");
  ver->add_option("--random-polygons", o.random_polygons, "number of seeded random polygons");
  ver->add_option("--trials", o.trials, "trials per randomized property")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    c.validate();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (mu->parsed()) return run_mu(o, out);
    if (mod->parsed()) return run_modulus(o, out);
    if (ortho->parsed()) return run_ortho(o, out);
    if (seg->parsed()) return run_segments(o, out);
    if (ips->parsed()) return run_ips(o, out);
    if (ver->parsed()) return run_verify(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitParse;
}

}  // namespace rectconst
