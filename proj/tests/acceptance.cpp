#include "ccc/export.hpp"
#include "ccc/enumerate.hpp"
#include "ccc/report.hpp"
#include "ccc/spacefile.hpp"
#include "ccc/suite.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Suite determinism, golden equality, and text/json round trips of the
// spacefile fixtures and of finite poset/space exports.
ccc::LawReport parser_exporter(const std::vector<ccc::LawReport>& first) {
  ccc::LawReport r{"parser and exporter: round trips and golden suite report"};
  auto check = [&r](bool ok, const std::string& what) {
    ++r.instances;
    if (!ok) r.fail(what);
  };
  const auto a = ccc::suite_json(first).dump(2) + "\n";
  const auto b = ccc::suite_json(ccc::run_suite()).dump(2) + "\n";
  check(a == b, "suite report differs between runs");
  const auto golden = fs::path(CCC_SOURCE_DIR) / "tests" / "golden" / "suite_report.json";
  check(a == slurp(golden), "suite report differs from " + golden.string());

  for (const auto& e : fs::directory_iterator(fs::path(CCC_SOURCE_DIR) / "spacefiles")) {
    if (e.path().extension() != ".ccc" || e.path().filename() == "syntax_fail.ccc") continue;
    const auto name = e.path().filename().string();
    try {
      const auto doc = ccc::parse(slurp(e.path()));
      const auto text = ccc::print(doc);
      const auto again = ccc::parse(text);
      check(again == doc && ccc::print(again) == text, name + ": print/parse not stable");
      for (auto fmt : {ccc::ExportFormat::dot, ccc::ExportFormat::json})
        check(ccc::import_doc(ccc::export_doc(doc, fmt), fmt) == doc, name + ": export round trip");
    } catch (const std::exception& ex) {
      check(false, name + ": " + ex.what());
    }
  }

  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& t : ccc::enumerate_spaces(n, false)) {
      const auto j = nlohmann::json::parse(ccc::export_json(t).dump());
      check(ccc::topology_from_json(j) == t, "space json round trip " + ccc::describe(t));
      const auto& p = t.specialization();
      check(ccc::poset_from_json(nlohmann::json::parse(ccc::export_json(p).dump())) == p,
            "poset json round trip " + ccc::describe(t));
    }
  return r;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  auto reports = ccc::run_suite();
  reports.push_back(parser_exporter(reports));
  bool ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    ok = ok && r.passed();
    std::cout << (r.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << r.law << " ("
              << r.instances << " instances)";
    if (r.counterexample) std::cout << ": " << *r.counterexample;
    std::cout << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << " in " << secs << "s\n";
  return ok ? 0 : 1;
}
