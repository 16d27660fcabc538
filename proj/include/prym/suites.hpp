#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/report.hpp"

namespace prym {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::optional<std::uint32_t> prime;
  std::optional<std::uint32_t> ext;
  std::optional<int> genus;
  std::optional<std::string> curve;  // path to a form in the JSON interchange format
};

const std::vector<std::string>& suite_names();  // classes, fano, theta, cubic, quartic, all

// Throws UsageError for an unknown suite or invalid options.
void validate_options(const std::string& suite, const SuiteOptions& opt);

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt);

VerificationReport run_classes(const SuiteOptions& opt);
VerificationReport run_fano(const SuiteOptions& opt);
VerificationReport run_theta(const SuiteOptions& opt);
VerificationReport run_cubic(const SuiteOptions& opt);
VerificationReport run_quartic(const SuiteOptions& opt);

}  // namespace prym
