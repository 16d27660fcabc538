#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace prym {

struct Check {
  std::string check_id;
  std::string paper_anchor;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::optional<std::int64_t> runtime_ms;
};

// Ordered record of checks; pass is exact string equality of canonical forms.
class VerificationReport {
 public:
  std::uint64_t seed = 0;
  std::string toolchain;
  // Replay data (sampled inputs), keyed by check-id prefix.
  nlohmann::json samples = nlohmann::json::object();

  // Throws UsageError on a duplicate check_id.
  Check& add(const std::string& id, const std::string& anchor, const std::string& expected,
             const std::string& computed);
  void merge(VerificationReport&& other);
  // Sorts checks by check_id.
  void normalize();

  const std::vector<Check>& checks() const { return checks_; }
  bool all_pass() const;
  std::size_t failures() const;

  nlohmann::json to_json(bool with_timings) const;
  std::string to_text(bool with_timings) const;

 private:
  std::vector<Check> checks_;
};

std::string toolchain_string();
inline std::string bool_string(bool b) { return b ? "true" : "false"; }

}  // namespace prym
