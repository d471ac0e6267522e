#pragma once

#include "ccc/limits.hpp"
#include "ccc/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace ccc {

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  Limits limits;
};

// The worked examples and law suites, one report each, in a fixed order.
std::vector<LawReport> run_suite(const SuiteOptions& options = {});

nlohmann::ordered_json suite_json(const std::vector<LawReport>& reports);
bool suite_passed(const std::vector<LawReport>& reports);

}  // namespace ccc
