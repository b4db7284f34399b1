#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "oracles.hpp"
#include "rectconst/error.hpp"
#include "rectconst/io.hpp"
#include "rectconst/random.hpp"

using namespace rectconst;

TEST_CASE("norm spec parsing") {
  auto n = parse_norm_spec_text(R"({"type":"euclidean","dim":2})");
  CHECK(n.is_euclidean());
  CHECK(n.dim() == 2);
  n = parse_norm_spec_text(R"({"type":"lp","p":1.5,"dim":3})");
  REQUIRE(n.lp_norm() != nullptr);
  CHECK(n.lp_norm()->p == 1.5);
  CHECK(n.dim() == 3);
  n = parse_norm_spec_text(R"({"type":"lp","p":"inf","dim":2})");
  CHECK(std::isinf(n.lp_norm()->p));
  n = parse_norm_spec_text(R"({"type":"lp","p":"infinity"})");
  CHECK(n.dim() == 2);
  n = parse_norm_spec_text(R"({"type":"polyhedral","vertices":[[1,1],[-1,1]]})");
  REQUIRE(n.polygon() != nullptr);
  CHECK(n.polygon()->vertices().size() == 4);
  CHECK(eval_norm(n, Vector{3.0, -1.0}) == 3.0);
}

TEST_CASE("malformed norm specs are parse errors") {
  for (const char* text : {"", "{", "[]", R"({"dim":2})", R"({"type":"cube"})", R"({"type":"lp","dim":2})",
                           R"({"type":"lp","p":0.5})", R"({"type":"lp","p":"huge"})", R"({"type":"euclidean","dim":1})",
                           R"({"type":"euclidean","dim":2.5})", R"({"type":"polyhedral"})",
                           R"({"type":"polyhedral","vertices":[[1,0,0]]})", R"({"type":"polyhedral","vertices":[[1,0]]})",
                           R"({"type":"polyhedral","vertices":[[1,0],[2,0]]})"}) {
    INFO(text);
    CHECK_THROWS_AS(parse_norm_spec_text(text), ParseError);
  }
  CHECK_THROWS_AS(load_norm_spec("/nonexistent/spec.json"), ParseError);
}

TEST_CASE("norm specs round-trip") {
  std::vector<NormDescriptor> norms{NormDescriptor::euclidean(3), NormDescriptor::lp(2.5, 2), oracle::square(),
                                    oracle::hexagon()};
  for (auto& p : random_polygons(5, 4)) norms.push_back(p);
  for (const auto& n : norms) {
    const json j = norm_to_json(n);
    const auto back = parse_norm_spec(json::parse(j.dump()));
    CHECK(norm_to_json(back) == j);
    CHECK(back.dim() == n.dim());
    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
      const Vector v = random_vector(rng, n.dim());
      CHECK(eval_norm(back, v) == eval_norm(n, v));
    }
  }
  CHECK(norm_to_json(oracle::square())["p"] == "inf");
}

TEST_CASE("run reports round-trip bit-exactly") {
  SearchConfig c;
  c.seed = 99;
  c.refine_tol = 1.0 / 3.0 * 1e-6;
  RunReport r;
  r.command = "mu";
  r.norm = norm_to_json(oracle::hexagon());
  r.config = c;
  const MuWitness w{Vector{0.1, 1.0 / 3.0}, Vector{-std::sqrt(2.0), 1e-300}, 0.7071067811865476, std::acos(-1.0)};
  r.result = {{"witness", w}, {"value", w.value}};
  r.elapsed_s = 0.123456789;
  const std::string text = serialize_report(r);
  const RunReport back = parse_report(text);
  CHECK(back == r);
  CHECK(serialize_report(back) == text);
  CHECK(back.config.get<SearchConfig>().refine_tol == c.refine_tol);
  const auto w2 = back.result.at("witness").get<MuWitness>();
  CHECK(w2.x == w.x);
  CHECK(w2.y == w.y);
  CHECK(w2.t == w.t);
  CHECK(w2.value == w.value);
  const json top = json::parse(text);
  for (const char* key : {"command", "norm", "config", "result", "elapsed_s", "tool_version"}) CHECK(top.contains(key));
  CHECK(top.size() == 6);
  CHECK_THROWS_AS(parse_report("{\"command\":1}"), ParseError);
}

TEST_CASE("csv numbers carry 17 significant digits") {
  CHECK(csv_number(0.1) == "0.10000000000000001");
  CHECK(csv_number(2.5) == "2.5");
  CHECK(std::stod(csv_number(std::sqrt(2.0))) == std::sqrt(2.0));
}

TEST_CASE("modulus csv") {
  std::ostringstream empty;
  write_modulus_csv(empty, {});
  CHECK(empty.str() == "lambda,star_value,value,witness_x1,witness_x2,witness_y1,witness_y2,witness_t\n");

  const std::vector<double> grid{0.5, 1.0, 2.0};
  const auto curve = modulus_curve(oracle::square(), grid);
  std::ostringstream os;
  write_modulus_csv(os, curve.points);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  const double expected[] = {2.5, 3.0, 5.0};
  for (double e : expected) {
    REQUIRE(std::getline(in, line));
    std::vector<double> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(std::stod(cell));
    REQUIRE(cells.size() == 8);
    CHECK(cells[2] == doctest::Approx(e).epsilon(1e-9));
  }
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("result serializers") {
  const json cert = is_bj_orthogonal(oracle::square(), Vector{1.0, 1.0}, Vector{-2.0, 0.0}).certificate;
  CHECK(cert.at("method") == "exact-polyhedral");
  const json ips = IpsReport{true, 1.4, std::nullopt, 0.2, 2.4, 1.5};
  CHECK(ips.at("witness").is_null());
  const json seg = max_segment_length(oracle::square());
  CHECK(seg.at("length") == 2.0);
  const json mp = modulus(oracle::square(), 2.0);
  CHECK(mp.at("branch") == "reciprocal");
}
