#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "prym/errors.hpp"
#include "prym/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for Prym-map computations"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");

  std::string suite;
  std::string json_path;
  prym::SuiteOptions opt;
  std::uint32_t prime = 0, ext = 0;
  int genus = 0;
  std::string curve;
  bool timings = false;

  verify->add_option("suite", suite, "classes, fano, theta, cubic, quartic or all")
      ->required()
      ->check(CLI::IsMember(prym::suite_names()));
  verify->add_option("--json", json_path, "Write the JSON report to this path");
  verify->add_option("--seed", opt.seed, "Seed for sampled inputs")->capture_default_str();
  verify->add_option("--samples", opt.samples, "Number of sampled coefficient vectors")->capture_default_str();
  auto* prime_opt = verify->add_option("--prime", prime, "Field characteristic (at least 5)");
  auto* ext_opt = verify->add_option("--ext", ext, "Extension degree");
  auto* genus_opt = verify->add_option("--genus", genus, "Genus for the theta suite (at most 4)");
  auto* curve_opt = verify->add_option("--curve", curve, "Form in the JSON interchange format")->check(CLI::ExistingFile);
  verify->add_flag("--timings", timings, "Record per-check runtimes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (*prime_opt) opt.prime = prime;
  if (*ext_opt) opt.ext = ext;
  if (*genus_opt) opt.genus = genus;
  if (*curve_opt) opt.curve = curve;

  prym::VerificationReport report;
  try {
    report = prym::run_suite(suite, opt);
  } catch (const prym::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const prym::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << report.to_json(timings).dump(2) << "\n";
  }
  std::cout << report.to_text(timings);
  return report.all_pass() ? 0 : 1;
}
