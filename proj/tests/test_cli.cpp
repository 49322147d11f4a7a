#include "orbitforms/report.hpp"
#include "orbitforms/suites.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace orbit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("orbitforms-cli-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

Run run(const std::string& args, const std::string& env = {}) {
  const char* bin = std::getenv("ORBITFORMS_BIN");
  REQUIRE_MESSAGE(bin, "ORBITFORMS_BIN is not set");
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = env + " " + bin + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

nlohmann::json run_json(const std::string& args) {
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("config text round-trips exactly") {
  RunConfig c;
  apply_setting(c, "model", "bcn");
  apply_setting(c, "N", "3");
  apply_setting(c, "nu", "22/7");
  apply_setting(c, "nu2", "-1/3");
  apply_setting(c, "f", "1,2");
  apply_setting(c, "tolerance", "1e-9");
  apply_setting(c, "formula", "printed");
  const RunConfig d = parse_config_text(config_to_text(c));
  CHECK(config_to_text(d) == config_to_text(c));
  CHECK(d.model.nu == Rational(22, 7));
  CHECK(d.model.nu2 == Rational(-1, 3));
  CHECK(d.f == CharVector({1, 2}));
  CHECK(d.tolerance == 1e-9);
  CHECK_THROWS_AS(apply_setting(c, "colour", "red"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "nu", "0.3"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("just words"), ConfigError);
  CHECK(parse_config_text("# comment\n\nseed = 9\n").seed == 9);
}

TEST_CASE("reports are deterministic and sorted") {
  RunConfig c;
  c.model = default_parameters();
  c.suite = "flags";
  const auto a = run_suite(c).to_json(c).dump();
  const auto b = run_suite(c).to_json(c).dump();
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == kReportSchema);
  std::vector<std::string> names;
  for (const auto& ch : j["checks"]) names.push_back(ch["name"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
  c.suite = "nope";
  CHECK_THROWS_AS(run_suite(c), UnknownSuite);
}

TEST_CASE("spectrum command") {
  auto j = run_json("spectrum --model bc1 --nu2 1 --nu3 2 --n 4");
  REQUIRE(j["entries"].size() == 5);
  const char* want[] = {"0", "5", "12", "21", "32"};
  for (int p = 0; p < 5; ++p) {
    CHECK(j["entries"][p]["eps"] == want[p]);
    CHECK(parse_rational(j["entries"][p]["eps"].get<std::string>()) == parse_rational(want[p]));
  }
  CHECK(run_json("spectrum --model sutherland --N 3 --nu 1/2 --n 2")["entries"].size() == 6);
  CHECK(run_json("spectrum --model g2 --nu 1 --mu 1 --n 3 --f 1,2")["entries"].size() == 6);
  const Run csv = run("spectrum --model bc1 --nu2 1 --nu3 2 --n 2 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("21") == std::string::npos);
  CHECK(csv.out.find("12") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("verify --suite bogus").code == 2);
  CHECK(run("spectrum --model bc1 --nu2 0.5").code == 2);
  CHECK(run("spectrum --model e8").code == 2);
  CHECK(run("spectrum --model mw --n 2").code == 2);
  CHECK(run("frobnicate").code == 2);
  // A printed formula that disagrees with the operator is an internal inconsistency.
  CHECK(run("spectrum --model sutherland --N 4 --nu 1/3 --n 3 --formula printed").code == 3);
  CHECK(run("verify --suite gauge --model bcn --N 2 --formula printed").code == 1);
}

TEST_CASE("verify examples") {
  CHECK(run("verify --suite flags --model bcn --N 3 --n 6").code == 0);
  const auto alg = run_json("verify --suite algebra --model g2");
  CHECK(alg["summary"]["reported_offset"] == 1);
  const auto cart = run_json("verify --suite cartesian --model bc1 --seed 7");
  CHECK(cart["seed"] == 7);
  bool has_stats = false;
  for (const auto& c : cart["checks"]) has_stats |= c["values"].contains("stddev");
  CHECK(has_stats);
}

TEST_CASE("config file and flag overrides") {
  const fs::path cfg = scratch() / "run.cfg";
  std::ofstream(cfg) << "# bc1 at small level\nmodel=bc1\nnu2=1\nnu3=2\nn=2\n";
  auto j = run_json("spectrum --config " + cfg.string());
  CHECK(j["entries"].size() == 3);
  j = run_json("spectrum --config " + cfg.string() + " --n 4");
  CHECK(j["entries"].size() == 5);
  std::ofstream(cfg) << "model=bc1\nwibble=1\n";
  CHECK(run("spectrum --config " + cfg.string()).code == 2);
}

TEST_CASE("identical runs are byte-identical and the cache never changes results") {
  const std::string args = "verify --suite pi --model g2 --n 3";
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const fs::path cache = scratch() / "cache";
  fs::remove_all(cache);
  const std::string env = "ORBITFORMS_CACHE=" + cache.string();
  const Run fresh = run(args, env);
  CHECK(fs::exists(cache));
  CHECK(std::distance(fs::directory_iterator(cache), fs::directory_iterator()) == 1);
  const Run hit = run(args, env);
  CHECK(fresh.out == a.out);
  CHECK(hit.out == a.out);
  CHECK(hit.code == a.code);
}

TEST_CASE("table command") {
  const auto j = run_json("table");
  bool e7 = false, h4 = false, an = false;
  for (const auto& row : j["rows"]) {
    if (row["model"] == "E7" && row["column"] == "trigonometric minimal")
      e7 = row["components"] == std::vector<int>{1, 2, 2, 2, 3, 3, 4};
    if (row["model"] == "H4" && row["column"] == "rational") h4 = row["components"] == std::vector<int>{1, 5, 8, 12};
    if (row["model"] == "A_N") an = row["vector"] == "(1,...,1)" && !row.contains("components");
  }
  CHECK(e7);
  CHECK(h4);
  CHECK(an);
  CHECK(run("table --format csv").out.rfind("model,column,vector", 0) == 0);
}
