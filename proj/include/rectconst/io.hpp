#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "rectconst/norm.hpp"
#include "rectconst/orthogonality.hpp"
#include "rectconst/properties.hpp"
#include "rectconst/rectangular.hpp"
#include "rectconst/sphere.hpp"

namespace rectconst {

inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::json;

// Norm specs:
//   {"type": "euclidean", "dim": 2}
//   {"type": "lp", "p": 1.5, "dim": 2}      ("p" may also be the string "inf")
//   {"type": "polyhedral", "vertices": [[1, 1], [-1, 1]]}
// "dim" defaults to 2. Polyhedral vertices are symmetrized and canonicalized.
// Any malformed or degenerate spec throws ParseError.
NormDescriptor parse_norm_spec(const json& spec);
NormDescriptor parse_norm_spec_text(const std::string& text);
NormDescriptor load_norm_spec(const std::string& path);

// Spec of the descriptor; polyhedral norms list all canonical vertices.
json norm_to_json(const NormDescriptor& norm);

void to_json(json& j, const Vector& v);
void from_json(const json& j, Vector& v);
void to_json(json& j, const SearchConfig& c);
void from_json(const json& j, SearchConfig& c);
void to_json(json& j, const MuWitness& w);
void from_json(const json& j, MuWitness& w);
void to_json(json& j, const OrthoCertificate& c);
void to_json(json& j, const ModulusPoint& p);
void to_json(json& j, const StarModulus& s);
void to_json(json& j, const SegmentReport& s);
void to_json(json& j, const SegmentCheck& s);
void to_json(json& j, const IpsReport& r);
void to_json(json& j, const FlatnessReport& r);
void to_json(json& j, const ValidationReport& r);
void to_json(json& j, const PropertyResult& r);

struct RunReport {
  std::string command;
  json norm;
  json config;
  json result;
  double elapsed_s = 0.0;
  std::string tool_version = kToolVersion;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(json& j, const RunReport& r);
void from_json(const json& j, RunReport& r);

// Pretty-printed report followed by a newline. Doubles are printed with the
// shortest representation that reads back to the same value.
std::string serialize_report(const RunReport& r);
RunReport parse_report(const std::string& text);

// printf "%.17g": 17 significant digits, '.' decimal separator in the C locale.
std::string csv_number(double v);

// Header lambda,star_value,value,witness_x1,witness_x2,witness_y1,witness_y2,witness_t
// then one row per point.
void write_modulus_csv(std::ostream& os, std::span<const ModulusPoint> points);

}  // namespace rectconst
