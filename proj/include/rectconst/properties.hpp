#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rectconst/norm.hpp"
#include "rectconst/rectangular.hpp"

namespace rectconst {

enum class PropertyStatus { passed, failed, skipped };

const char* status_name(PropertyStatus s);

// Outcome of one invariant, aggregated over every norm it applies to.
struct PropertyResult {
  std::string name;
  std::string description;
  std::size_t trials = 0;
  std::size_t violations = 0;
  PropertyStatus status = PropertyStatus::skipped;
  std::string detail;  // summary line, or the first violations
};

struct VerifyOptions {
  std::size_t trials = 1000;  // per randomized property and norm
  std::uint64_t seed = 0;
  SearchConfig config;
};

// Runs every invariant of the library against the given norms. Properties
// that do not apply to a norm (e.g. polygon edges of the Euclidean norm) are
// skipped for it; a property applying to none reports `skipped`.
std::vector<PropertyResult> run_verification(std::span<const NormDescriptor> norms,
                                             const VerifyOptions& options = {});

bool all_passed(std::span<const PropertyResult> results);

}  // namespace rectconst
