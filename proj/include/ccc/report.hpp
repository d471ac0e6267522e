#pragma once

#include "ccc/subset.hpp"
#include "ccc/topology.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ccc {

enum class Verdict { pass, fail };

// One checked law: how many instances were examined and the first failure.
struct LawReport {
  std::string law;
  std::size_t instances = 0;
  Verdict verdict = Verdict::pass;
  std::optional<std::string> counterexample;

  bool passed() const { return verdict == Verdict::pass; }
  // Keeps the first counterexample only.
  void fail(std::string witness);
  void absorb(const LawReport& other);
};

// Throws LawViolation when the report failed.
void enforce(const LawReport& r);

nlohmann::ordered_json to_json(const LawReport& r);
std::string to_text(const LawReport& r);

std::string format_subset(const Subset& s, const std::vector<std::string>& labels);
std::string describe(const FiniteTopology& t);

}  // namespace ccc
