// End-to-end tests of the installed command surface: golden sequence lines,
// oracle comparisons, exit codes, report formats, config/env precedence and
// byte-level determinism.  The binary path arrives via CONGRUENCE_LAB_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + CONGRUENCE_LAB_BIN + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_path(const std::string& tag) {
  return std::filesystem::temp_directory_path() /
         ("conglab-cli-" + tag + "-" + std::to_string(::getpid()));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_duration(std::string s) {
  return std::regex_replace(s, std::regex("\"duration_ms\": [0-9]+"), "\"duration_ms\": 0");
}

} // namespace

TEST_CASE("sequence lines match the published tables byte for byte") {
  CHECK(run("seq genocchi --max 12").out == "1 -1 0 1 0 -3 0 17 0 -155 0 2073\n");
  CHECK(run("seq euler --max 12").out == "1 0 -1 0 5 0 -61 0 1385 0 -50521 0 2702765\n");
  CHECK(run("seq ehat --max 12").out ==
        "1 1 -1 -2 5 16 -61 -272 1385 7936 -50521 -353792 2702765\n");
  CHECK(run("seq eulerian --n 1").out == "1\n");
  CHECK(run("seq eulerian --n 2").out == "1 1\n");
  CHECK(run("seq eulerian --n 3").out == "1 4 1\n");
  CHECK(run("seq eulerian --n 4").out == "1 11 11 1\n");
  CHECK(run("seq eulerian --n 5").out == "1 26 66 26 1\n");
  CHECK(run("seq eulerian --n 6").out == "1 57 302 302 57 1\n");
  CHECK(run("seq eulerian --n 7").out == "1 120 1191 2416 1191 120 1\n");
  CHECK(run("seq tangent --max 9").out == "1 2 16 272 7936\n");
  CHECK(run("seq zigzag --max 6").out == "1 1 1 2 5 16 61\n");
  CHECK(run("seq bernoulli --max 6").out == "1 -1/2 1/6 0 -1/30 0 1/42\n");
}

TEST_CASE("sequence reduction and usage errors") {
  CHECK(run("seq euler --max 8 --mod 7").out == "1 0 6 0 5 0 2 0 6\n");
  CHECK(run("seq eulerian --n 5 --mod 7").out == "1 5 3 5 1\n");
  CHECK(run("seq nope --max 3").code == 2);
  CHECK(run("seq eulerian --max 5").code == 2);  // rows need --n
  CHECK(run("seq bernoulli --max 6 --mod 6").code == 2); // denominator not a unit
}

TEST_CASE("oracle comparisons print both sides and flag the verdict") {
  CHECK(run("oracle dumont --n 4").out == "17 17 OK\n");
  CHECK(run("oracle ascents --n 3").out == "1 4 1 | 1 4 1 OK\n");
  CHECK(run("oracle guns --n 6").out == "2073 2073 OK\n");
  CHECK(run("oracle alternating --n 10").out == "50521 50521 OK\n");
  CHECK(run("oracle newcomb --n 5").out == "1 26 66 26 1 | 1 26 66 26 1 OK\n");
  CHECK(run("oracle words --n 3 --i 2").out == "1 20 48 20 1 | 1 20 48 20 1 OK\n");
  CHECK(run("oracle guns --n 9").code == 2);   // enumeration cap
  CHECK(run("oracle sevens --n 2").code == 2); // unknown oracle
}

TEST_CASE("identity sweep reports the two known discrepancies and exits clean") {
  const RunResult r = run("identities");
  CHECK(r.code == 0);
  CHECK(r.out.find("I01 PASS") != std::string::npos);
  CHECK(r.out.find("I15 DISCREPANCY") != std::string::npos);
  CHECK(r.out.find("lhs=0 rhs=4") != std::string::npos);
  CHECK(r.out.find("I21b DISCREPANCY") != std::string::npos);
  CHECK(r.out.find("lhs=-1 rhs=-5") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("two-squares representations and their preconditions") {
  CHECK(run("represent 13").out == "3 1\n");
  CHECK(run("represent 5").out == "1 1\n");
  CHECK(run("represent 97").out == "9 2\n");
  CHECK(run("represent 7").code == 2);
  CHECK(run("represent 25").code == 2);
}

TEST_CASE("verify subsets, formats and exit codes") {
  const RunResult csv = run("verify --checks C02 --pmin 5 --pmax 7 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == "check,p,params,modulus,lhs,rhs,status,note\n"
                   "C02,5,,5,4,4,PASS,\n"
                   "C02,7,,7,6,6,PASS,\n");
  CHECK(run("verify --pmin 4 --pmax 3").code == 2);
  CHECK(run("verify --checks C99").code == 2);
  CHECK(run("verify --format yaml").code == 2);
  CHECK(run("verify --mod-exp 5").code == 2);
  CHECK(run("verify --suite oracles --format md").code == 0);
}

TEST_CASE("reports land in --out and carry the summary") {
  const auto path = temp_path("out");
  std::filesystem::remove(path);
  const RunResult r = run("verify --checks C12 --pmax 13 --format json --out " + path.string());
  CHECK(r.code == 0);
  const std::string body = slurp(path);
  CHECK(body.find("\"tool\": \"congruence-lab\"") != std::string::npos);
  CHECK(body.find("\"PASS\": 4") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("config file configures, flags override") {
  const auto cfg = temp_path("cfg");
  {
    std::ofstream out(cfg);
    out << R"({"checks": ["C02"], "pmin": 5, "pmax": 7, "format": "csv"})";
  }
  const RunResult from_file = run("verify --config " + cfg.string());
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("C02,5,,5,4,4,PASS") != std::string::npos);
  const RunResult overridden = run("verify --config " + cfg.string() + " --format json");
  CHECK(overridden.out.find("\"check\": \"C02\"") != std::string::npos);
  const auto bad = temp_path("badcfg");
  {
    std::ofstream out(bad);
    out << R"({"surprise": 1})";
  }
  CHECK(run("verify --config " + bad.string()).code == 2);
  std::filesystem::remove(cfg);
  std::filesystem::remove(bad);
}

TEST_CASE("cache directory from the environment, overridden by flags") {
  const auto env_dir = temp_path("envcache");
  const auto flag_dir = temp_path("flagcache");
  std::filesystem::remove_all(env_dir);
  std::filesystem::remove_all(flag_dir);
  const std::string env = "CONGRUENCE_LAB_CACHE=" + env_dir.string();
  CHECK(run("verify --checks C21 --pmax 7 --format md", env).code == 0);
  CHECK(std::filesystem::exists(env_dir / "zigzag" / "5_1.json"));
  CHECK(run("verify --checks C21 --pmax 7 --format md --cache-dir " + flag_dir.string(), env).code == 0);
  CHECK(std::filesystem::exists(flag_dir / "zigzag" / "5_1.json"));
  std::filesystem::remove_all(env_dir);
  std::filesystem::remove_all(flag_dir);
}

TEST_CASE("default-config verify is byte-deterministic modulo duration") {
  const std::string args = "verify --suite genocchi --pmax 61 --format json";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(strip_duration(a.out) == strip_duration(b.out));
  CHECK(a.out.find("\"FAIL\": 0") != std::string::npos);
}
