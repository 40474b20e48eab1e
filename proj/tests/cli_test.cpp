#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("LPBC_CLI");
  REQUIRE_MESSAGE(path != nullptr, "LPBC_CLI must point at the built binary");
  return path;
}

std::string golden_dir() {
  const char* dir = std::getenv("LPBC_GOLDEN_DIR");
  REQUIRE_MESSAGE(dir != nullptr, "LPBC_GOLDEN_DIR must point at tests/golden");
  return dir;
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string command = cli_path() + " " + args;
  if (!stdin_text.empty()) {
    const std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                            "/lpbc_cli_test_input.txt";
    std::ofstream out(tmp);
    out << stdin_text;
    out.close();
    command += " < " + tmp;
  }
  command += " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("construct emits matroid text") {
  const RunResult r = run("construct --uniform 2 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "matroid 3 2\nbasis 1 2\nbasis 1 3\nbasis 2 3\n");
}

TEST_CASE("construct from a lattice path region and list bases") {
  const RunResult constructed = run("construct --lpm", "lpm 3 2\nP EEENN\nQ NNEEE\n");
  CHECK(constructed.exit_code == 0);
  const RunResult listed = run("bases", constructed.output);
  CHECK(listed.exit_code == 0);
  int lines = 0;
  for (char c : listed.output) lines += c == '\n';
  CHECK(lines == 10);  // C(5,2) bases of U_{2,5}
}

TEST_CASE("family construction matches the catalog emit") {
  const RunResult built = run("construct --family B --n 3 --k 3");
  const RunResult emitted = run("catalog emit B3_3");
  CHECK(built.exit_code == 0);
  CHECK(built.output == emitted.output);
}

TEST_CASE("rank and minor subcommands") {
  const RunResult rank = run("rank --set 1,2 -", "matroid 3 2\nbasis 1 2\nbasis 1 3\nbasis 2 3\n");
  CHECK(rank.exit_code == 0);
  CHECK(rank.output == "rank 2\n");
  const RunResult mm = run("minor --contract 1 --delete 5 -", read_file(golden_dir() + "/catalog/U3_7.txt"));
  CHECK(mm.exit_code == 0);
  CHECK(mm.output.rfind("matroid 5 2", 0) == 0);
}

TEST_CASE("dual of U_{2,5}") {
  const RunResult d = run("dual -", run("construct --uniform 2 5").output);
  CHECK(d.exit_code == 0);
  CHECK(d.output.rfind("matroid 5 3", 0) == 0);
}

TEST_CASE("circuits subcommand") {
  const RunResult r = run("circuits -", "graph 2\nlink 1 2\nlink 1 2\nlink 1 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "circuit 1 2 3\n");
}

TEST_CASE("check --class lpbc on the wheel reports the witness and exits 1") {
  const RunResult wheel = run("construct --cycle", "graph 4\nlink 1 2\nlink 1 3\nlink 1 4\nlink 2 3\nlink 2 4\nlink 3 4\n");
  CHECK(wheel.exit_code == 0);
  const RunResult check = run("check --class lpbc -", wheel.output);
  CHECK(check.exit_code == 1);
  CHECK(check.output.rfind("member false\nwitness wheel3\n", 0) == 0);
}

TEST_CASE("check --bicircular on U_{3,7} exits 1") {
  const RunResult check = run("check --bicircular -", run("construct --uniform 3 7").output);
  CHECK(check.exit_code == 1);
  CHECK(check.output == "bicircular false\n");
}

TEST_CASE("check --bicircular prints a graph on success") {
  const RunResult check = run("check --bicircular -", run("construct --uniform 2 4").output);
  CHECK(check.exit_code == 0);
  CHECK(check.output.rfind("bicircular true\ngraph", 0) == 0);
}

TEST_CASE("check --lattice-path passes a region") {
  const RunResult check = run("check --lattice-path -", run("catalog emit U5_7 --rep lpm").output);
  CHECK(check.exit_code == 0);
  CHECK(check.output == "lattice-path true\n");
}

TEST_CASE("catalog list is stable") {
  const RunResult r = run("catalog list");
  CHECK(r.exit_code == 0);
  CHECK(r.output == read_file(golden_dir() + "/cli/catalog_list.txt"));
}

TEST_CASE("catalog emit matches the golden matroids") {
  for (const std::string name : {"U3_7", "A3", "wheel3", "E4"}) {
    const RunResult r = run("catalog emit " + name);
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_file(golden_dir() + "/catalog/" + name + ".txt"));
  }
}

TEST_CASE("parse errors exit 2") {
  const RunResult r = run("bases -", "matroid 3 2\nbasis 1 x\n");
  CHECK(r.exit_code == 2);
}

TEST_CASE("repeated runs are byte-identical and --seed is accepted") {
  const std::string wheel = run("catalog emit wheel3").output;
  const RunResult a = run("check --class lpbc -", wheel);
  const RunResult b = run("--seed 7 check --class lpbc -", wheel);
  CHECK(a.output == b.output);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("budget flags propagate") {
  const RunResult r = run("--node-budget 3 check --lattice-path -", run("catalog emit E4").output);
  CHECK(r.exit_code == 2);
}

TEST_CASE("corpus subcommand emits matroid blocks") {
  const RunResult r = run("corpus --lpm --max-n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("matroid 1 0\nbasis\n") != std::string::npos);
  const RunResult g = run("corpus --graphs --max-edges 3 --max-vertices 2");
  CHECK(g.exit_code == 0);
  CHECK(g.output.find("matroid 3 2") != std::string::npos);
}
