#include "prym/report.hpp"

#include <algorithm>
#include <sstream>

#include "prym/errors.hpp"

namespace prym {

Check& VerificationReport::add(const std::string& id, const std::string& anchor, const std::string& expected,
                               const std::string& computed) {
  for (const auto& c : checks_)
    if (c.check_id == id) throw UsageError("duplicate check id '" + id + "'");
  checks_.push_back({id, anchor, expected, computed, expected == computed, std::nullopt});
  return checks_.back();
}

void VerificationReport::merge(VerificationReport&& other) {
  for (auto& c : other.checks_) {
    Check& added = add(c.check_id, c.paper_anchor, c.expected, c.computed);
    added.runtime_ms = c.runtime_ms;
  }
  for (auto& [k, v] : other.samples.items()) samples[k] = std::move(v);
}

void VerificationReport::normalize() {
  std::sort(checks_.begin(), checks_.end(), [](const Check& a, const Check& b) { return a.check_id < b.check_id; });
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

nlohmann::json VerificationReport::to_json(bool with_timings) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"check_id", c.check_id},
                        {"paper_anchor", c.paper_anchor},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"pass", c.pass}};
    if (with_timings && c.runtime_ms) j["runtime_ms"] = *c.runtime_ms;
    arr.push_back(std::move(j));
  }
  return {{"checks", arr}, {"seed", seed}, {"toolchain", toolchain}, {"samples", samples}, {"pass", all_pass()}};
}

std::string VerificationReport::to_text(bool with_timings) const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.pass ? "PASS " : "FAIL ") << c.check_id << ": computed " << c.computed;
    if (!c.pass) os << ", expected " << c.expected;
    if (with_timings && c.runtime_ms) os << " (" << *c.runtime_ms << " ms)";
    os << "\n";
  }
  os << checks_.size() - failures() << "/" << checks_.size() << " checks passed (seed " << seed << ")\n";
  return os.str();
}

std::string toolchain_string() {
  std::string s = "prym-verify 1.0.0; C++ " + std::to_string(__cplusplus);
#if defined(__clang__)
  s += "; clang " __clang_version__;
#elif defined(__GNUC__)
  s += "; gcc " __VERSION__;
#endif
  return s;
}

}  // namespace prym
