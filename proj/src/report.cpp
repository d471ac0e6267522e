#include "ccc/report.hpp"

#include "ccc/errors.hpp"

#include <sstream>

namespace ccc {

void LawReport::fail(std::string witness) {
  if (verdict == Verdict::pass) counterexample = std::move(witness);
  verdict = Verdict::fail;
}

void LawReport::absorb(const LawReport& other) {
  instances += other.instances;
  if (!other.passed()) fail(other.law + ": " + other.counterexample.value_or(""));
}

void enforce(const LawReport& r) {
  if (!r.passed()) throw LawViolation(r.law, r.counterexample.value_or(""));
}

nlohmann::ordered_json to_json(const LawReport& r) {
  nlohmann::ordered_json j;
  j["law"] = r.law;
  j["instances"] = r.instances;
  j["verdict"] = r.passed() ? "pass" : "fail";
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

std::string to_text(const LawReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.law << " (" << r.instances << " instances)";
  if (r.counterexample) os << ": " << *r.counterexample;
  return os.str();
}

std::string format_subset(const Subset& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += labels[i];
    first = false;
  });
  return out + "}";
}

std::string describe(const FiniteTopology& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += t.label(i) + " -> " + format_subset(t.nbhd(i), t.labels());
  }
  return out + "]";
}

}  // namespace ccc
