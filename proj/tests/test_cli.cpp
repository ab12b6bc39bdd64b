#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "vcp3/bench.hpp"

namespace {

std::string cli_path() {
  const char* env = std::getenv("VCP3TW_CLI");
  return env ? env : "./tools/vcp3tw";
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/vcp3tw_test_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: vcp3 solve with oracle check") {
  std::string gr = write_temp("p3.gr", "p tw 3 2\ne 1 2\ne 2 3\n");
  auto result =
      run_command(cli_path() + " solve --problem vcp3 --graph " + gr + " --oracle-check");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("size          1") != std::string::npos);
  CHECK(result.output.find("oracle-check  pass") != std::string::npos);
}

TEST_CASE("cli: vcp3 with explicit decomposition file") {
  std::string gr = write_temp("c5.gr", "p tw 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
  std::string td = write_temp("c5.td",
                              "s td 3 3 5\nb 1 1 2 3\nb 2 1 3 4\nb 3 1 4 5\n1 2\n2 3\n");
  auto result = run_command(cli_path() + " solve --problem vcp3 --graph " + gr + " --td " + td +
                            " --oracle-check");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("size          2") != std::string::npos);
}

TEST_CASE("cli: cvcp3 decision") {
  std::string gr = write_temp("k4.gr", "p tw 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  auto result = run_command(cli_path() + " solve --problem cvcp3 --graph " + gr +
                            " --k 2 --seed 7 --reps 20 --oracle-check");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("answer        YES") != std::string::npos);
}

TEST_CASE("cli: exit codes for usage and input failures") {
  auto usage = run_command(cli_path() + " solve --graph /tmp/nonexistent.gr");
  CHECK(usage.exit_code == 2);  // --problem missing

  auto missing =
      run_command(cli_path() + " solve --problem vcp3 --graph /tmp/vcp3tw_does_not_exist.gr");
  CHECK(missing.exit_code == 1);

  std::string bad = write_temp("bad.gr", "p tw 2 1\ne 1 1\n");
  auto malformed = run_command(cli_path() + " solve --problem vcp3 --graph " + bad);
  CHECK(malformed.exit_code == 1);

  std::string gr = write_temp("p4.gr", "p tw 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  std::string invalid_td = write_temp("bad.td", "s td 1 2 4\nb 1 1 2\n");
  auto invalid = run_command(cli_path() + " solve --problem vcp3 --graph " + gr + " --td " +
                             invalid_td);
  CHECK(invalid.exit_code == 1);
  CHECK(invalid.output.find("condition") != std::string::npos);
}

TEST_CASE("cli: identical seeds give byte-identical json reports") {
  std::string gr = write_temp("c6.gr", "p tw 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n");
  std::string j1 = "/tmp/vcp3tw_test_rep1.json";
  std::string j2 = "/tmp/vcp3tw_test_rep2.json";
  const std::string base = cli_path() + " solve --problem cvcp3 --graph " + gr +
                           " --k 2 --seed 42 --reps 5 --json ";
  REQUIRE(run_command(base + j1).exit_code == 0);
  REQUIRE(run_command(base + j2).exit_code == 0);
  const std::string first = slurp(j1);
  CHECK(!first.empty());
  CHECK(first == slurp(j2));
}

TEST_CASE("cli: fast and naive convolution give identical reports") {
  std::string gr = write_temp("w4.gr",
                              "p tw 8 13\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 5 2\ne 5 3\n"
                              "e 6 5\ne 6 3\ne 7 6\ne 7 1\ne 8 7\n");
  auto run_mode = [&](const std::string& mode, const std::string& json) {
    return run_command(cli_path() + " solve --problem vcp3 --graph " + gr + " --convolution " +
                       mode + " --json " + json);
  };
  REQUIRE(run_mode("fast", "/tmp/vcp3tw_test_fast.json").exit_code == 0);
  REQUIRE(run_mode("naive", "/tmp/vcp3tw_test_naive.json").exit_code == 0);
  const std::string fast = slurp("/tmp/vcp3tw_test_fast.json");
  const std::string naive = slurp("/tmp/vcp3tw_test_naive.json");
  // Same answer and witness; only the convolution field may differ.
  auto strip = [](std::string text) {
    const auto pos = text.find("\"convolution\"");
    REQUIRE(pos != std::string::npos);
    text.erase(pos, text.find('\n', pos) - pos);
    return text;
  };
  CHECK(strip(fast) == strip(naive));
}

TEST_CASE("cli: thread count does not change cvcp3 answers") {
  std::string gr = write_temp("c7.gr",
                              "p tw 7 7\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 1 7\n");
  auto answer = [&](int threads) {
    auto r = run_command(cli_path() + " solve --problem cvcp3 --graph " + gr +
                         " --seed 5 --reps 6 --threads " + std::to_string(threads));
    REQUIRE(r.exit_code == 0);
    const auto start = r.output.find("size");
    REQUIRE(start != std::string::npos);
    return r.output.substr(start, r.output.find('\n', start) - start);
  };
  CHECK(answer(1) == answer(3));
}

TEST_CASE("cli: gen writes parseable instances") {
  auto gen = run_command(cli_path() +
                         " gen --family partial-k-tree --n 12 --k 3 --seed 3 --out "
                         "/tmp/vcp3tw_test_gen.gr");
  CHECK(gen.exit_code == 0);
  auto solve = run_command(cli_path() +
                           " solve --problem vcp3 --graph /tmp/vcp3tw_test_gen.gr --td "
                           "/tmp/vcp3tw_test_gen.td --oracle-check");
  CHECK(solve.exit_code == 0);
  CHECK(solve.output.find("oracle-check  pass") != std::string::npos);
}

TEST_CASE("bench csv rows round-trip") {
  std::vector<vcp3::bench::Row> rows;
  vcp3::bench::Row row;
  row.family = "partial-k-tree";
  row.instance = 3;
  row.n = 60;
  row.m = 101;
  row.width = 4;
  row.nice_nodes = 2000;
  row.size = 17;
  row.solve_ms = 12.52215881347;
  row.oracle_ms = -1;
  row.oracle_size = -1;
  rows.push_back(row);
  row.instance = 4;
  row.solve_ms = 0.0000152587890625;
  rows.push_back(row);

  std::ostringstream out;
  vcp3::bench::write_csv(out, rows);
  std::istringstream in(out.str());
  CHECK(vcp3::bench::read_csv(in) == rows);
  CHECK_THROWS_AS(vcp3::bench::from_csv("too,few,fields"), std::invalid_argument);
}
