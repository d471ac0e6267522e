#pragma once

#include "ccc/export.hpp"
#include "ccc/limits.hpp"
#include "ccc/spacefile.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ccc {

struct RunOptions {
  Limits limits;
  std::uint64_t seed = 20240611;
  // Also export every finite poset and space declared.
  std::optional<ExportFormat> export_format;
};

enum class Status { pass, fail, error };
std::string to_string(Status s);

struct QueryResult {
  std::size_t line = 0;
  std::string command;
  Status status = Status::pass;
  std::string value;
  std::string detail;
};

struct ExportEntry {
  std::string name;
  std::string text;
};

struct RunReport {
  std::vector<QueryResult> entries;
  std::vector<ExportEntry> exports;

  bool passed() const;
  std::string text() const;
  nlohmann::ordered_json json() const;
};

// Declarations are evaluated in order; failing ones are reported as errors
// and their dependants fail too.
RunReport run(const SpaceDoc& doc, const RunOptions& options = {});

}  // namespace ccc
