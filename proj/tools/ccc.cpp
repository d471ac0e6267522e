#include "ccc/errors.hpp"
#include "ccc/runner.hpp"
#include "ccc/spacefile.hpp"
#include "ccc/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report_error(const std::string& path, const std::exception& e) {
  std::cerr << path << ": " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence-class coreflections on finite and omega-indexed spaces"};
  app.require_subcommand(1);

  std::string file;
  bool with_suite = false, as_json = false;
  std::string export_fmt;
  std::size_t max_size = ccc::Limits{}.max_points;
  std::uint64_t seed = ccc::SuiteOptions{}.seed;

  auto* run = app.add_subcommand("run", "Evaluate a spacefile and its queries");
  run->add_option("file", file, "Spacefile path")->required();
  run->add_flag("--suite", with_suite, "Also run the built-in law suite");
  run->add_option("--export", export_fmt, "Export finite declarations")->check(CLI::IsMember({"dot", "json"}));
  run->add_option("--max-size", max_size, "Largest ground set listed with explicit opens");
  run->add_option("--seed", seed, "Seed for sampled checks");
  run->add_flag("--json", as_json, "Print the report as JSON");

  auto* fmt = app.add_subcommand("fmt", "Print a spacefile in canonical form");
  fmt->add_option("file", file, "Spacefile path")->required();

  auto* suite = app.add_subcommand("suite", "Run the built-in law suite");
  suite->add_option("--seed", seed, "Seed for sampled checks");
  suite->add_flag("--json", as_json, "Print the report as JSON");

  CLI11_PARSE(app, argc, argv);

  ccc::Limits limits;
  limits.max_points = max_size;

  if (*suite) {
    ccc::SuiteOptions so;
    so.seed = seed;
    const auto reports = ccc::run_suite(so);
    if (as_json) {
      std::cout << ccc::suite_json(reports).dump(2) << "\n";
    } else {
      for (const auto& r : reports) std::cout << ccc::to_text(r) << "\n";
    }
    return ccc::suite_passed(reports) ? 0 : 1;
  }

  ccc::SpaceDoc doc;
  try {
    doc = ccc::parse(read_file(file));
  } catch (const std::exception& e) {
    report_error(file, e);
    return 2;
  }

  if (*fmt) {
    std::cout << ccc::print(doc);
    return 0;
  }

  if (with_suite) {
    ccc::Decl d;
    d.section = ccc::Section::query;
    d.form = "suite";
    doc.decls.push_back(d);
  }
  ccc::RunOptions opts;
  opts.limits = limits;
  opts.seed = seed;
  if (!export_fmt.empty()) opts.export_format = ccc::parse_export_format(export_fmt);
  const auto report = ccc::run(doc, opts);
  if (as_json) std::cout << report.json().dump(2) << "\n";
  else std::cout << report.text();
  return report.passed() ? 0 : 1;
}
