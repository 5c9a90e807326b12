#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI named by HOMLEIB_BIN; skips the suite when it is not set.
const char* cli_path() { return std::getenv("HOMLEIB_BIN"); }

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("cli exit-code contract") {
  if (!cli_path()) return;

  // a valid algebra file
  std::ofstream("/tmp/homleib_cli_ok.json")
      << "{\"name\":\"ex\",\"field\":\"Q\",\"dim\":3,\"basis\":[\"e1\",\"e2\",\"e3\"],"
         "\"bracket\":[[0,1,2,\"1\"]],\"alpha\":[[0,2,\"1\"],[1,1,\"1\"]]}";
  RunResult ok = run_cli("validate /tmp/homleib_cli_ok.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("status: ok") != std::string::npos);

  // violations are mathematical counterexamples: exit 1
  RunResult bad = run_cli("validate catalog:mutant-mult");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("counterexample") != std::string::npos);

  // malformed input: exit 2
  std::ofstream("/tmp/homleib_cli_bad.json") << "{\"dim\":1,\"bracket\":[[0,0,0,\"1/0\"]]}";
  CHECK(run_cli("validate /tmp/homleib_cli_bad.json").exit_code == 2);
  CHECK(run_cli("validate /tmp/does_not_exist.json").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);

  // cap guard: dim 6 with degree 5 wants 6^6 = 46656 cells
  CHECK(run_cli("homology \"catalog:sum(heisenberg(1),heisenberg(1))\" --max-degree 5").exit_code == 2);
}

TEST_CASE("cli verdicts and determinism") {
  if (!cli_path()) return;

  RunResult cap = run_cli("capability /tmp/homleib_cli_ok.json --format json");
  CHECK(cap.exit_code == 0);
  CHECK(cap.output.find("\"capable\": true") != std::string::npos);

  RunResult hopf = run_cli("check catalog:nil3t --suite hopf");
  CHECK(hopf.exit_code == 0);

  RunResult a = run_cli("capability \"catalog:heisenberg(2)\" --format json");
  RunResult b = run_cli("capability \"catalog:heisenberg(2)\" --format json");
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"capable\": false") != std::string::npos);

  // text and json carry the same numeric payload
  RunResult text = run_cli("capability \"catalog:heisenberg(2)\" --format text");
  CHECK(text.output.find("capable: false") != std::string::npos);
  CHECK(text.output.find("dim: 5") != std::string::npos);
}

TEST_CASE("cli catalog surface") {
  if (!cli_path()) return;
  RunResult list = run_cli("catalog list");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("nil3t") != std::string::npos);
  CHECK(list.output.find("heisenberg(2)") != std::string::npos);

  RunResult emit = run_cli("catalog emit nil3t");
  CHECK(emit.exit_code == 0);
  CHECK(emit.output.find("\"bracket\":[[0,1,2,\"1\"]]") != std::string::npos);
}

TEST_CASE("cli product command") {
  if (!cli_path()) return;
  RunResult prod = run_cli("product catalog:nil3t --kind exterior --format json");
  CHECK(prod.exit_code == 0);
  CHECK(prod.output.find("\"lambda_kernel_dim\": 6") != std::string::npos);

  RunResult pair = run_cli("product catalog:nil3t --kind tensor --ideal e3 --ideal e1,e2,e3");
  CHECK(pair.exit_code == 0);

  // a non-ideal spec is a usage error
  CHECK(run_cli("product catalog:nil3t --ideal e1 --ideal e2").exit_code == 2);
}
