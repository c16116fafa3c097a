#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_shell(const std::string& command) {
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(DEGSEQ_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("cli analyze") {
  const RunResult r = run_cli("analyze 4,4,3,3,3,1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "sequence: 4,4,3,3,3,1 (n=6, m=9)\n"
                    "forced edges (1): (1,2)\n"
                    "forbidden edges (0): (none)\n"
                    "forced vertices: {1,2}\n"
                    "threshold sequence: no\n"
                    "max forced clique: 2\n"
                    "bound excludes forced: no\n");

  // positionals may be split on spaces; both spellings emit identical bytes
  CHECK(run_cli("analyze 4 4 3 3 3 1").output == r.output);

  const RunResult json = run_cli("analyze 2,1,1 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"forced_edges\"") != std::string::npos);
  CHECK(json.output.find("\"bound_excludes_forced\": false") != std::string::npos);

  CHECK(run_cli("analyze 3,3,1,1").exit_code == 3);          // not graphic
  CHECK(run_cli("analyze 3,3,1,1").output.find("error:") == 0);
  CHECK(run_cli("analyze 2,nope").exit_code == 2);           // parse error
  CHECK(run_cli("analyze 1,2,1").exit_code == 2);            // not non-increasing
  CHECK(run_cli("analyze").exit_code == 2);                  // missing sequence
  CHECK(run_cli("analyze 2,1,1 --format yaml").exit_code == 2);
}

TEST_CASE("cli sample") {
  const RunResult sis = run_cli("sample 2,2,2 --method sis --seed 7");
  CHECK(sis.exit_code == 0);
  CHECK(sis.output == "1 2\n1 3\n2 3\n");
  CHECK(run_cli("sample 2,2,2 --method sis --seed 7").output == sis.output);

  const RunResult mcmc =
      run_cli("sample 4,4,3,3,3,1 --method mcmc --steps 1000 --seed 1");
  CHECK(mcmc.exit_code == 0);
  CHECK(mcmc.output.find("1 2\n") != std::string::npos);  // forced edge
  CHECK(run_cli("sample 4,4,3,3,3,1 --method mcmc --steps 1000 --seed 1").output ==
        mcmc.output);
  CHECK(run_cli("sample 4,4,3,3,3,1 --seed 2").output !=
        run_cli("sample 4,4,3,3,3,1 --seed 3").output);

  CHECK(run_cli("sample 1,1,1 --method sis").exit_code == 3);  // odd sum
  CHECK(run_cli("sample 2,2,2 --method bogus").exit_code == 2);

  const RunResult json = run_cli("sample 2,2,2 --method sis --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"edge_count\": 3") != std::string::npos);
}

TEST_CASE("cli enumerate") {
  const RunResult r = run_cli("enumerate 2,2,1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1-2 1-3 2-4\n1-2 1-4 2-3\ncount: 2\n");

  CHECK(run_cli("enumerate 0,0").output == "(no edges)\ncount: 1\n");

  const RunResult limited = run_cli("enumerate 4,4,3,3,3,1 --limit 3");
  CHECK(limited.exit_code == 0);
  CHECK(limited.output.find("count: 3 (truncated)") != std::string::npos);
  CHECK(run_cli("enumerate 4,4,3,3,3,1 --limit 9999").output.find(
            "count: 9\n") != std::string::npos);

  const RunResult json = run_cli("enumerate 2,2,1,1 --format json");
  CHECK(json.output.find("\"count\": 2") != std::string::npos);
  CHECK(json.output.find("\"truncated\": false") != std::string::npos);

  CHECK(run_cli("enumerate 1,1,1").exit_code == 3);
}

TEST_CASE("cli verify") {
  const RunResult ok = run_cli("verify --n 4");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("verification sweep: n=4, 11 sequences") == 0);
  CHECK(ok.output.find("result: all theorems hold") != std::string::npos);

  // honest counterexamples: the bound defect at n=2, the clique gaps at n=6
  const RunResult bound = run_cli("verify --n 2");
  CHECK(bound.exit_code == 1);
  CHECK(bound.output.find("bound_theorem            FAIL") != std::string::npos);
  const RunResult clique = run_cli("verify --n 6");
  CHECK(clique.exit_code == 1);
  CHECK(clique.output.find("forced_clique            FAIL") != std::string::npos);

  CHECK(run_cli("verify --n 4 --jobs 3").output == ok.output);
  const RunResult via_env =
      run_shell(std::string("DEGSEQ_JOBS=4 ") + DEGSEQ_CLI_PATH + " verify --n 4");
  CHECK(via_env.exit_code == 0);
  CHECK(via_env.output == ok.output);

  CHECK(run_cli("verify --n 9").exit_code == 2);
  CHECK(run_cli("verify --n 0").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);  // --n is required

  const RunResult json = run_cli("verify --n 2 --format json");
  CHECK(json.exit_code == 1);
  CHECK(json.output.find("\"all_pass\": false") != std::string::npos);
}

TEST_CASE("cli pack-check") {
  const RunResult hit = run_cli("pack-check 4,4,4,1,1,1,1,1,1 0,1,1,0,0,0,0,0,0");
  CHECK(hit.exit_code == 0);
  CHECK(hit.output == "shared forced edge (2,3): cannot pack\n");

  const RunResult miss = run_cli("pack-check 1,1,1,1 1,1,1,1");
  CHECK(miss.exit_code == 0);
  CHECK(miss.output == "no shared-forced-edge obstruction\n");

  CHECK(run_cli("pack-check 3,3,2,2,1,1,1,1,2 2,2,1,1 --pad").output ==
        "no shared-forced-edge obstruction\n");
  CHECK(run_cli("pack-check 2,1,1 2,2,1,1").exit_code == 2);  // length mismatch
  CHECK(run_cli("pack-check 1,1,1 1,1,1").exit_code == 3);    // not graphic

  const RunResult json =
      run_cli("pack-check 4,4,4,1,1,1,1,1,1 0,1,1,0,0,0,0,0,0 --format json");
  CHECK(json.output.find("\"obstruction\": [") != std::string::npos);
  CHECK(run_cli("pack-check 1,1,1,1 1,1,1,1 --format json")
            .output.find("\"obstruction\": null") != std::string::npos);
}

TEST_CASE("cli complement and majorize") {
  CHECK(run_cli("complement 4,4,3,3,3,1").output == "4,2,2,2,1,1\n");
  CHECK(run_cli("complement 0").output == "0\n");
  CHECK(run_cli("majorize 3,1,1,1 2,2,1,1").output == "LeftMajorizes\n");
  CHECK(run_cli("majorize 2,2,1,1 3,1,1,1").output == "RightMajorizes\n");
  CHECK(run_cli("majorize 2,1,1 2,1,1").output == "Equal\n");
  CHECK(run_cli("majorize 2,1,1 1,1,0").output == "UnequalSums\n");
  CHECK(run_cli("majorize 2,1,1 1,1").exit_code == 2);  // length mismatch
  const RunResult json = run_cli("majorize 3,1,1,1 2,2,1,1 --format json");
  CHECK(json.output.find("\"relation\": \"LeftMajorizes\"") != std::string::npos);
}

TEST_CASE("cli top level") {
  CHECK(run_cli("").exit_code == 2);            // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 2);
  const RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("analyze") != std::string::npos);
}
