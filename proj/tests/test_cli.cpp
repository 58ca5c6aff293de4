// End-to-end checks of the command line tool: output shapes, exit codes,
// cache behavior, and determinism across worker counts and prime pools.
// The binary path arrives in QSCHUR_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() {
  if (const char* path = std::getenv("QSCHUR_CLI_PATH")) return path;
#ifdef QSCHUR_CLI_PATH
  return QSCHUR_CLI_PATH;
#else
  REQUIRE_MESSAGE(false, "QSCHUR_CLI_PATH must point at the tool");
  return nullptr;
#endif
}

RunResult run(const std::string& args) {
  const std::string command =
      std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("qschur_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("worked polynomial product, exact bytes") {
  const RunResult r =
      run("--n 2 --r 2 mul '[[1,1],[0,0]]' '[[0,1],[1,0]]'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[{\"matrix\":[[1,1],[0,0]],\"coeff\":[\"0\",\"1\"]}]\n");
}

TEST_CASE("generic product and the zero result") {
  const RunResult good = run(
      "--n 3 --r 2 gmul '[[0,1,0],[0,0,0],[0,0,1]]' "
      "'[[0,0,0],[0,0,1],[0,0,1]]'");
  CHECK(good.exit_code == 0);
  CHECK(Json::parse(good.out) ==
        Json::parse(R"({"result":[[0,0,1],[0,0,0],[0,0,1]]})"));

  const RunResult zero = run(
      "--n 3 --r 2 gmul '[[0,0,0],[0,0,1],[0,0,1]]' "
      "'[[0,1,0],[0,0,0],[0,0,1]]'");
  CHECK(zero.exit_code == 0);
  CHECK(Json::parse(zero.out) == Json::parse(R"({"result":"zero"})"));
}

TEST_CASE("module verbs: theta, gamma, hall, genext") {
  const RunResult th = run("--n 3 --r 2 theta '[[1,2,1]]'");
  CHECK(th.exit_code == 0);
  const Json terms = Json::parse(th.out);
  REQUIRE(terms.is_array());
  CHECK(terms.size() == 3);
  for (const Json& term : terms) {
    CHECK(term.at("coeff") == Json::parse(R"(["1"])"));
    const Json& m = term.at("matrix");
    CHECK(m.at(0).at(1).get<int>() == 1);  // every term covers E_12
  }
  CHECK(run("--n 3 --r 2 gamma '[[1,2,1]]'").out == th.out);
  // Three simple summands cannot fit in two boxes: the image is zero.
  CHECK(Json::parse(run("--n 3 --r 2 gamma '[[1,2,3]]'").out) ==
        Json::array());

  const RunResult unit =
      run("--n 3 --r 2 hall '[[1,3,1]]' '[[1,2,1]]' '[[2,3,1]]'");
  CHECK(unit.exit_code == 0);
  CHECK(Json::parse(unit.out) == Json::parse(R"(["1"])"));
  const RunResult gauss =
      run("--n 3 --r 2 hall '[[1,2,2]]' '[[1,2,1]]' '[[1,2,1]]'");
  CHECK(Json::parse(gauss.out) == Json::parse(R"(["1","1"])"));

  const RunResult ext = run("--n 3 --r 2 genext '[[1,2,1]]' '[[2,3,1]]'");
  CHECK(ext.exit_code == 0);
  CHECK(Json::parse(ext.out) ==
        Json::parse(R"({"n":3,"segments":[[1,3,1]]})"));
}

TEST_CASE("verification suites through the tool") {
  const RunResult ok = run("--n 3 --r 2 verify serre");
  CHECK(ok.exit_code == 0);
  const Json report = Json::parse(ok.out);
  CHECK(report.at("suite") == "serre");
  CHECK(report.at("passed") == true);
  CHECK(report.at("failures") == Json::array());
  CHECK(report.at("cases_run").get<long>() > 0);

  const RunResult sampled =
      run("--n 3 --r 2 verify theta_hom --samples 5 --seed 7");
  CHECK(sampled.exit_code == 0);
  CHECK(Json::parse(sampled.out).at("cases_run").get<long>() == 5);

  CHECK(run("--n 3 --r 2 verify bogus").exit_code == 2);
}

TEST_CASE("invalid inputs exit with code 2") {
  CHECK(run("--n 1 --r 2 mul '[[1]]' '[[1]]'").exit_code == 2);
  CHECK(run("--n 2 --r 0 mul '[[0,0],[0,0]]' '[[0,0],[0,0]]'").exit_code ==
        2);
  // Entry sum disagrees with --r.
  CHECK(run("--n 2 --r 2 mul '[[1,0],[0,0]]' '[[1,1],[0,0]]'").exit_code ==
        2);
  // Matrix size disagrees with --n.
  CHECK(run("--n 3 --r 2 mul '[[1,1],[0,0]]' '[[1,1],[0,0]]'").exit_code ==
        2);
  // Malformed JSON.
  CHECK(run("--n 2 --r 2 mul '[[1,1],[0' '[[1,1],[0,0]]'").exit_code == 2);
  // Missing subcommand.
  CHECK(run("--n 2 --r 2").exit_code == 2);
  // Composite and repeated counting primes.
  CHECK(run("--n 2 --r 2 --primes 4,5 mul '[[1,1],[0,0]]' '[[1,1],[0,0]]'")
            .exit_code == 2);
  CHECK(run("--n 2 --r 2 --primes 5,5 mul '[[1,1],[0,0]]' '[[1,1],[0,0]]'")
            .exit_code == 2);
  // A prime pool too small for the degree bound.
  CHECK(run("--n 2 --r 2 --primes 2,3 mul '[[1,1],[0,0]]' '[[0,1],[1,0]]'")
            .exit_code == 2);
  // Negative multiplicities in a multisegment.
  CHECK(run("--n 3 --r 2 genext '[[1,2,-1]]' '[[1,2,1]]'").exit_code == 2);
}

TEST_CASE("table export and cache round trips") {
  const fs::path dir = fresh_dir("tables");
  const std::string cache1 = (dir / "cache1").string();
  const std::string cache2 = (dir / "cache2").string();
  const std::string out1 = (dir / "t1.json").string();
  const std::string out2 = (dir / "t2.json").string();
  const std::string out3 = (dir / "t3.json").string();

  const RunResult first =
      run("--n 2 --r 2 --cache " + cache1 + " table schur --out " + out1);
  CHECK(first.exit_code == 0);
  const Json summary = Json::parse(first.out);
  CHECK(summary.at("written") == out1);
  CHECK(summary.at("entries").get<int>() == 100);
  CHECK(fs::exists(fs::path(cache1) / "schur_n2_r2.json"));

  // Served from the warm cache: byte-identical table.
  const RunResult second =
      run("--n 2 --r 2 --cache " + cache1 + " table schur --out " + out2);
  CHECK(second.exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
  // Recomputed in a cold cache directory: still byte-identical.
  run("--n 2 --r 2 --cache " + cache2 + " table schur --out " + out3);
  CHECK(slurp(out1) == slurp(out3));
  CHECK(slurp(fs::path(cache1) / "schur_n2_r2.json") ==
        slurp(fs::path(cache2) / "schur_n2_r2.json"));

  const RunResult generic =
      run("--n 2 --r 2 table generic --out " + (dir / "g.json").string());
  CHECK(generic.exit_code == 0);
  const Json gtable = Json::parse(slurp(dir / "g.json"));
  CHECK(gtable.at("kind") == "generic");
  // Six upper triangular matrices with entry sum 2.
  CHECK(gtable.at("entries").size() == 36);

  const RunResult zero =
      run("--n 2 --r 2 table zero --out " + (dir / "z.json").string());
  CHECK(zero.exit_code == 0);
  const Json ztable = Json::parse(slurp(dir / "z.json"));
  // Strict uppers with entry sum 0, 1, or 2: the identity block, the
  // generator, and its square class.
  CHECK(ztable.at("entries").size() == 9);
  fs::remove_all(dir);
}

TEST_CASE("deterministic across worker counts and prime pools") {
  const std::string args = "mul '[[1,1],[0,0]]' '[[0,1],[1,0]]'";
  const std::string base = run("--n 2 --r 2 " + args).out;
  CHECK(run("--n 2 --r 2 --jobs 4 " + args).out == base);
  CHECK(run("--n 2 --r 2 --primes 5,7,11,13,17,19,23,29 " + args).out ==
        base);
  // The environment variables stand in for the flags.
  const fs::path dir = fresh_dir("env");
  const std::string cmd = "QSCHUR_CACHE=" + (dir / "c").string() +
                          " QSCHUR_JOBS=2 " + std::string(cli_path()) +
                          " --n 2 --r 2 " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    out.append(buffer, got);
  CHECK(::pclose(pipe) == 0);
  CHECK(out == base);
  CHECK(fs::exists(dir / "c" / "schur_n2_r2.json"));
  fs::remove_all(dir);
}
