#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RAMSEY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
  CHECK(run_cli("").exit_code == 64);
  CHECK(run_cli("no-such-command").exit_code == 64);
  CHECK(run_cli("bound --method nope").exit_code == 64);
  CHECK(run_cli("verify --alpha 0").exit_code == 64);  // --beta missing
  CHECK(run_cli("--format csv bound").exit_code == 64);  // no csv form
  CHECK(run_cli("--format csv crossover").exit_code == 64);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "verify"));
  CHECK(contains(r.out, "ramsey-exact"));
}

TEST_CASE("module errors exit with 1") {
  CHECK(run_cli("table --grid 0").exit_code == 1);
  CHECK(run_cli("bound --l-parts 3,0").exit_code == 1);
  CHECK(run_cli("ramsey-exact --k 3 --l-parts 3,3 --n-max 17").exit_code == 1);
}

TEST_CASE("table emits curve csv") {
  RunResult r = run_cli("table --grid 1/4");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "lambda,F,Fprime,M,X,Y,psi,correction,ratio_exponent");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 4);

  RunResult csv = run_cli("--format csv table --grid 1/4");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == r.out);

  RunResult js = run_cli("--format json table --grid 1/4");
  CHECK(js.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][3]["lambda"] == "1");
  CHECK(j["stage"]["beta"] == "3/100");
}

TEST_CASE("bound reports every method by default") {
  RunResult r = run_cli("--format json bound");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 3);
  CHECK(j["l"] == 3);
  CHECK(j["es"] == "6");
  for (const char* key :
       {"es-product", "thm-easy", "cor-easy", "main-exponent"}) {
    CHECK(j.contains(key));
    CHECK(j[key].contains("value"));
    CHECK(j[key].contains("log_value"));
    CHECK(j[key].contains("ratio_to_es"));
    CHECK(j[key].contains("log_ratio_to_es"));
  }
  CHECK(j.contains("diagonal_base"));
  // cor_easy(3,3) / es(3,3) = 297.15194...
  std::string ratio = j["cor-easy"]["ratio_to_es"];
  CHECK(ratio.substr(0, 8) == "297.1519");
}

TEST_CASE("bound rejects two-color methods for multicolor targets") {
  CHECK(run_cli("bound --l-parts 3,3 --method thm-easy").exit_code == 64);
  RunResult r = run_cli("--format json bound --l-parts 3,3 --method multicolor");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["theta"] == "64");
  CHECK(j.contains("thm-easy2"));
  CHECK(j.contains("cor-easy2"));
}

TEST_CASE("json output is stable across runs and canonically formatted") {
  RunResult a = run_cli("--format json bound");
  RunResult b = run_cli("--format json bound");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(a.out == j.dump(2) + "\n");
}

TEST_CASE("single stage verification with a licensed offset") {
  RunResult r = run_cli("verify --alpha 9/100/e --beta 9/200");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "offset license (domination at beta=2/25): pass"));
  CHECK(contains(r.out, "stage alpha=9/100/e beta=9/200: pass"));
}

TEST_CASE("single stage verification refuses an unlicensed offset") {
  RunResult r = run_cli("verify --alpha 1/100/e --beta 3/100");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "stage offset exceeds every proven offset"));
}

TEST_CASE("a starved evaluation budget is inconclusive") {
  RunResult r = run_cli("verify --alpha 0 --beta 2/25 --eval-budget 40");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "inconclusive"));
}

TEST_CASE("clique demo echoes the seed and validates its witness") {
  RunResult r = run_cli("--seed 7 --format json clique-demo");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["seed"] == 7);
  CHECK(j["hypothesis_met"] == true);
  CHECK(j["witness_valid"] == true);
  CHECK(j["witness"].contains("kind"));
}

TEST_CASE("exact ramsey queries in both text forms") {
  RunResult r = run_cli("ramsey-exact --k 3 --l 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "R(3, (3)) = 6"));

  RunResult beyond = run_cli("ramsey-exact --k 4 --l 4 --n-max 5");
  CHECK(beyond.exit_code == 0);
  CHECK(contains(beyond.out, "R(4, (4)) > 5"));
  CHECK(contains(beyond.out, "avoids the targets"));

  RunResult js = run_cli("--format json ramsey-exact --k 2 --l-parts 3,3");
  CHECK(js.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["exact"] == true);
  CHECK(j["value"] == 6);
}

TEST_CASE("crossover reports the root") {
  RunResult r = run_cli("crossover");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "lambda* = 0.698947"));
}

TEST_CASE("piecewise exploration has text and csv forms") {
  RunResult r = run_cli("optimize --piecewise 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "piecewise profile"));
  CHECK(contains(r.out, "uncertified"));
  RunResult csv = run_cli("--format csv optimize --piecewise 2");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.out, "breakpoint,F,M"));
}

TEST_CASE("one optimizer stage lands on the known coefficient") {
  RunResult r = run_cli("--format json optimize --stages 1 --resolution 1/100");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["beta"] == "2/25");
  CHECK(j["status"] == "pass");
}

TEST_CASE("output can be routed to a file") {
  std::string path = "/tmp/ramsey_cli_out_test.json";
  std::remove(path.c_str());
  RunResult r = run_cli("--out " + path + " --format json bound");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json j = nlohmann::json::parse(f);
  CHECK(j["es"] == "6");
  std::remove(path.c_str());
}

TEST_CASE("config files feed defaults and the command line wins") {
  std::string path = "/tmp/ramsey_cli_config_test.ini";
  {
    std::ofstream f(path);
    f << "format=json\nseed=9\n";
  }
  RunResult r = run_cli("--config " + path + " clique-demo");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["seed"] == 9);

  RunResult over = run_cli("--config " + path + " --seed 7 clique-demo");
  CHECK(over.exit_code == 0);
  nlohmann::json jo = nlohmann::json::parse(over.out);
  CHECK(jo["seed"] == 7);
  std::remove(path.c_str());
}
