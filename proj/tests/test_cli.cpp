#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dualfield/cli.hpp"
#include "dualfield/config.hpp"
#include "dualfield/verify.hpp"

using namespace dualfield;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dualfield");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("dual invariants of a null field") {
  const auto r = run({"dual", "invariants", "--theta", "0", "--E", "1,0,0", "--H", "0,1,0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\nI1=0\nI2=0\n"));
  CHECK(contains(r.out, "status=pass"));
}

TEST_CASE("boost magnitudes") {
  const auto r = run({"hyper", "boost", "--beta", "0.6", "--absE", "1", "--absH", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\nE=2\nH=0.5\n"));
}

TEST_CASE("exit codes") {
  CHECK(run({"nonsense"}).code == cli::kUsage);
  CHECK(run({"dual", "nonsense"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"dual", "transform", "--E", "1,2"}).code == cli::kUsage);
  CHECK(run({"--config", "/nonexistent/dualfield.ini", "cavity", "energy"}).code == cli::kBadConfig);
  const auto bad = write_temp("dualfield_bad.ini", "[constants]\nc = fast\n");
  CHECK(run({"--config", bad.string(), "cavity", "energy"}).code == cli::kBadConfig);
  const auto inconsistent = write_temp("dualfield_inconsistent.ini", "[constants]\neps0 = 1\n");
  CHECK(run({"--config", inconsistent.string(), "cavity", "energy"}).code == cli::kBadConfig);
  // The combined operators fail the Hermiticity check.
  const auto total = run({"qfield", "operators", "--kind", "E_TOTAL", "--z", "0.3"});
  CHECK(total.code == cli::kCheckFailed);
  CHECK(contains(total.out, "status=fail"));
  CHECK(run({"qfield", "operators", "--kind", "E1", "--z", "0.3"}).code == cli::kPass);
}

TEST_CASE("reports") {
  const auto csv = run({"--format", "csv", "cavity", "residual", "--branch", "second"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("kind,name,identity,value,tolerance,pass\n", 0) == 0);
  CHECK(contains(csv.out, "check,faraday_order,"));

  const auto timed = run({"--timing", "algebra", "check"});
  CHECK(contains(timed.out, "wall_time_s="));
  CHECK_FALSE(contains(run({"algebra", "check"}).out, "wall_time_s"));
}

TEST_CASE("verify is deterministic") {
  const auto a = run({"verify", "all", "--seed", "42"});
  const auto b = run({"verify", "all", "--seed", "42"});
  CHECK(a.out == b.out);
  bool all = true;
  for (const auto& c : verify::run_all(42)) all = all && c.pass();
  CHECK(a.code == (all ? cli::kPass : cli::kCheckFailed));
  for (int id = 1; id <= 10; ++id) CHECK(contains(a.out, "criterion_" + std::to_string(id) + "="));
  CHECK(run({"verify", "all", "--seed", "7"}).out != a.out);
}

TEST_CASE("configuration") {
  const auto cfg = config::parse(
      "[cavity]\nlength = 2\nvolume = 3\nfock_dim = 6\n"
      "[constants]\nhbar = 2e-34\n"
      "[mode.1]\nalpha = 2\nmass = 0.5\nc1 = 0.1, 0.2\nc2 = 0.3\n"
      "[mode.2]\nalpha = 1\n");
  CHECK(cfg.length == 2.0);
  CHECK(cfg.fock_dim == 6);
  CHECK(cfg.constants.hbar == 2e-34);
  REQUIRE(cfg.modes.size() == 2);
  CHECK(cfg.modes[0].alpha() == 2);
  CHECK(cfg.modes[0].length() == 2.0);
  CHECK(cfg.modes[0].C1() == cplx(0.1, 0.2));
  CHECK(cfg.modes[0].C2() == cplx(0.3, 0.0));
  CHECK(cfg.modes[1].C1() == cplx(0.0));

  const auto defaults = config::parse("");
  CHECK(defaults.modes.size() == 1);
  CHECK(defaults.constants.c == PhysicalConstants::codata().c);

  const auto limited = config::parse("[cavity]\nmax_modes = 1\n[mode.1]\nalpha = 1\n[mode.2]\nalpha = 2\n");
  CHECK(limited.modes.size() == 1);

  CHECK_THROWS_AS(config::parse("[mode.1]\nalpha = 0\n"), config::ConfigError);
  CHECK_THROWS_AS(config::parse("[mode.1]\nalpha = 1\nc1 = x\n"), config::ConfigError);

  CHECK(config::resolve_path(std::string("a.ini")).value() == "a.ini");
  setenv("DUALFIELD_CONFIG", "from_env.ini", 1);
  CHECK(config::resolve_path(std::nullopt).value() == "from_env.ini");
  unsetenv("DUALFIELD_CONFIG");
  CHECK_FALSE(config::resolve_path(std::nullopt).has_value());

  const auto file = write_temp("dualfield_ok.ini", "[mode.1]\nalpha = 1\nc1 = 0.5\nc2 = 0.5\n");
  CHECK(run({"--config", file.string(), "cavity", "energy"}).code == 0);
}
