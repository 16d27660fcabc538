#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "prym/errors.hpp"
#include "prym/report.hpp"
#include "prym/suites.hpp"

using namespace prym;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + PRYM_VERIFY_EXE + "\" " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("prym_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("report bookkeeping") {
  VerificationReport r;
  r.add("b.second", "anchor", "1", "1");
  r.add("a.first", "anchor", "2", "3");
  CHECK_THROWS_AS(r.add("a.first", "anchor", "2", "2"), UsageError);
  CHECK_FALSE(r.all_pass());
  CHECK(r.failures() == 1);
  r.normalize();
  CHECK(r.checks().front().check_id == "a.first");
  CHECK_FALSE(r.checks().front().pass);
  CHECK(r.checks().back().pass);

  VerificationReport other;
  other.add("c.third", "anchor", "x", "x");
  r.merge(std::move(other));
  CHECK(r.checks().size() == 3);
  VerificationReport dup;
  dup.add("c.third", "anchor", "x", "x");
  CHECK_THROWS_AS(r.merge(std::move(dup)), UsageError);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.seed = 7;
  r.toolchain = toolchain_string();
  r.add("x.one", "anchor", "5", "5").runtime_ms = 12;
  const auto plain = r.to_json(false);
  CHECK(plain["pass"] == true);
  CHECK(plain["seed"] == 7);
  CHECK(plain["checks"].size() == 1);
  CHECK_FALSE(plain["checks"][0].contains("runtime_ms"));
  CHECK(plain["checks"][0]["check_id"] == "x.one");
  const auto timed = r.to_json(true);
  CHECK(timed["checks"][0]["runtime_ms"] == 12);
  CHECK(r.to_text(false).find("ms") == std::string::npos);
  CHECK(r.to_text(true).find("12 ms") != std::string::npos);
  CHECK(r.to_text(false).find("1/1 checks passed") != std::string::npos);
}

TEST_CASE("option validation") {
  SuiteOptions o;
  CHECK_NOTHROW(validate_options("all", o));
  CHECK_THROWS_AS(validate_options("nope", o), UsageError);
  o.genus = 5;
  CHECK_THROWS_AS(validate_options("theta", o), UsageError);
  o = {};
  o.prime = 4;
  CHECK_THROWS_AS(validate_options("cubic", o), UsageError);
  o.prime = 9;
  CHECK_THROWS_AS(validate_options("cubic", o), UsageError);
  o = {};
  o.samples = 0;
  CHECK_THROWS_AS(validate_options("cubic", o), UsageError);
  o = {};
  o.ext = 0;
  CHECK_THROWS_AS(validate_options("quartic", o), UsageError);
}

TEST_CASE("suites pass and are deterministic") {
  SuiteOptions o;
  o.samples = 10;
  for (const auto& s : {"classes", "fano", "theta"}) {
    CAPTURE(s);
    auto a = run_suite(s, o), b = run_suite(s, o);
    CHECK(a.all_pass());
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  }
  auto c1 = run_suite("cubic", o), c2 = run_suite("cubic", o);
  CHECK(c1.all_pass());
  CHECK(c1.to_json(false).dump() == c2.to_json(false).dump());
  o.seed = 1;
  CHECK_FALSE(run_suite("cubic", o).to_json(false).dump() == c1.to_json(false).dump());
}

TEST_CASE("command line exit codes") {
  CHECK(run("verify classes") == 0);
  CHECK(run("verify fano --timings") == 0);
  CHECK(run("verify bogus") == 2);
  CHECK(run("") == 2);
  CHECK(run("verify theta --genus 5") == 2);
  CHECK(run("verify cubic --prime 4") == 2);
  CHECK(run("verify cubic --samples 0") == 2);
  CHECK(run("verify quartic --curve /nonexistent/file.json") == 2);
  CHECK(run("verify classes --seed notanumber") == 2);

  const auto path = scratch("classes.json");
  CHECK(run("verify classes --json " + path.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() > 0);
  std::filesystem::remove(path);
}

TEST_CASE("command line with a curve file") {
  const auto path = scratch("surface.json");
  {
    std::ofstream out(path);
    out << R"({"field": {"char": 7}, "vars": ["x", "y", "z", "w"], "degree": 3,
               "terms": [{"exp": [3,0,0,0], "num": "1"}, {"exp": [0,3,0,0], "num": "1"},
                         {"exp": [0,0,3,0], "num": "1"}, {"exp": [0,0,0,3], "num": "1"}]})";
  }
  CHECK(run("verify cubic --samples 2 --curve " + path.string()) == 0);
  CHECK(run("verify cubic --curve " + path.string() + " --prime 11") == 2);
  std::filesystem::remove(path);
}
