#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "fixtures.hpp"

namespace {

const std::string cli = CNAT_CLI_PATH;

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs a shell command, capturing stdout (stderr only where the command
// redirects it).
RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("cnat_cli_test_" + name);
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("check reports the five-by-five example") {
  const auto path = write_temp("five.txt", fixtures::five_example_matrix_text());
  const auto result = run(cli + " check " + path.string());
  CHECK(result.status == 0);
  CHECK(result.out.find("CNAT size 5, π = 45213, sign -1") !=
        std::string::npos);
  CHECK(result.out.find("leaf (4,1): left long") != std::string::npos);
  CHECK(result.out.find("leaf (3,2): left short") != std::string::npos);
  CHECK(result.out.find("leaf (2,5): right long") != std::string::npos);
}

TEST_CASE("check flags invalid input with exit 1") {
  const auto path = write_temp("orphan.txt", "10\n01\n");
  const auto result = run(cli + " check " + path.string() + " 2>/dev/null");
  CHECK(result.status == 1);
  CHECK(result.out.find("invalid: OrphanDot(2,2)") != std::string::npos);
}

TEST_CASE("check distinguishes plain NATs from CNATs") {
  const auto path = write_temp("nat.txt", "10\n11\n");
  const auto result = run(cli + " check " + path.string());
  CHECK(result.status == 1);
  CHECK(result.out.find("NAT 2x2, not a CNAT: IncompleteDot(1,1)") !=
        std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run(cli + " 2>/dev/null").status == 2);
  CHECK(run(cli + " enum 2>/dev/null").status == 2);
  CHECK(run(cli + " enum 0 2>/dev/null").status == 2);
  CHECK(run(cli + " enum 3 --format yaml 2>/dev/null").status == 2);
  CHECK(run(cli + " --help >/dev/null").status == 0);
}

TEST_CASE("enum emits the canonical size-3 stream") {
  const auto result = run(cli + " enum 3");
  CHECK(result.status == 0);
  CHECK(result.out ==
        "111\n100\n010\n"
        "\n111\n010\n100\n"
        "\n101\n110\n100\n"
        "\n110\n101\n100\n");
}

TEST_CASE("enum record output is one line per tree") {
  const auto result = run(cli + " enum 4 --format record | wc -l");
  CHECK(result.status == 0);
  CHECK(result.out == "33\n");
}

TEST_CASE("enum beyond the bound fails, env override lifts it") {
  CHECK(run(cli + " enum 9 2>/dev/null >/dev/null").status == 1);
  CHECK(run("CNAT_BOUND=3 " + cli + " enum 4 2>/dev/null >/dev/null").status ==
        1);
  const auto lifted = run("CNAT_BOUND=3 " + cli + " enum 3 | wc -l");
  CHECK(lifted.status == 0);
  CHECK(lifted.out == "15\n");  // 4 blocks of 3 + 3 separators
}

TEST_CASE("enum piped through check validates every record") {
  for (int n : {4, 5, 6}) {
    const auto result = run(cli + " enum " + std::to_string(n) + " | " + cli +
                            " check >/dev/null");
    CHECK(result.status == 0);
  }
  const auto records = run(cli + " enum 5 --format record | " + cli +
                           " check >/dev/null");
  CHECK(records.status == 0);
}

TEST_CASE("count prints labeled tallies") {
  const auto result = run(cli + " count 4");
  CHECK(result.status == 0);
  CHECK(result.out == "T_4 = 33\nT(4;+1) = 17\nT(4;-1) = 16\n");

  const auto jobs = run(cli + " count 5 --jobs 3");
  CHECK(jobs.status == 0);
  CHECK(jobs.out == "T_5 = 456\nT(5;+1) = 228\nT(5;-1) = 228\n");
}

TEST_CASE("verify passes for small sizes") {
  const auto three = run(cli + " verify 3");
  CHECK(three.status == 0);
  CHECK(three.out ==
        "T_3 = 4\nT(3;+1) = 2 (expected 2)\nT(3;-1) = 2 (expected 2)\n"
        "verdict: pass\n");

  const auto six = run(cli + " verify 6");
  CHECK(six.status == 0);
  CHECK(six.out.find("T(6;+1) = 4728 (expected 4728)") != std::string::npos);
  CHECK(six.out.find("verdict: pass") != std::string::npos);

  const auto one = run(cli + " verify 1");
  CHECK(one.status == 0);
  CHECK(one.out.find("not applicable") != std::string::npos);
}

TEST_CASE("phi pipes back to the identity and notes the active pair") {
  const auto path = write_temp("five_phi.txt",
                               fixtures::five_example_matrix_text());
  const auto once = run(cli + " phi " + path.string() + " 2>/dev/null");
  CHECK(once.status == 0);
  CHECK(once.out == "10110\n11001\n01000\n00100\n10000\n");

  const auto twice = run(cli + " phi " + path.string() + " 2>/dev/null | " +
                         cli + " phi 2>/dev/null");
  CHECK(twice.status == 0);
  CHECK(twice.out == fixtures::five_example_matrix_text());

  const auto note = run(cli + " phi " + path.string() + " 2>&1 >/dev/null");
  CHECK(note.out == "active pair (5,3) <-> (4,1) [left]\n");
}

TEST_CASE("phi reports fixed points") {
  const auto path = write_temp("fixed.txt", "11\n10\n");
  const auto result = run(cli + " phi " + path.string() + " 2>&1");
  CHECK(result.status == 0);
  CHECK(result.out.find("fixed point") != std::string::npos);
  CHECK(result.out.find("11\n10\n") != std::string::npos);
}

TEST_CASE("reduce and expand invert each other") {
  const auto path = write_temp("two.txt", "11\n10\n");
  const auto reduced = run(cli + " reduce " + path.string());
  CHECK(reduced.status == 0);
  CHECK(reduced.out == "1\n");

  const auto round = run(cli + " expand " + path.string() + " | " + cli +
                         " reduce");
  CHECK(round.status == 0);
  CHECK(round.out == "11\n10\n");

  const auto five = write_temp("five_reduce.txt",
                               fixtures::five_example_matrix_text());
  const auto rejected = run(cli + " reduce " + five.string() + " 2>&1");
  CHECK(rejected.status == 1);
  CHECK(rejected.out.find("NotAllShort") != std::string::npos);
}

TEST_CASE("show renders ascii and tikz") {
  const auto path = write_temp("two_show.txt", "11\n10\n");
  const auto ascii = run(cli + " show " + path.string());
  CHECK(ascii.status == 0);
  CHECK(ascii.out == "●─○\n○ ·\n");

  const auto tikz = run(cli + " show --tikz " + path.string());
  CHECK(tikz.status == 0);
  CHECK(tikz.out.find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(tikz.out.find("grid (6,-2)") != std::string::npos);
}

TEST_CASE("record output can feed the transforms") {
  const auto path = write_temp("record_in.txt",
                               "{\"size\":2,\"dots\":[[1,1],[1,2],[2,1]]}\n");
  const auto result = run(cli + " expand " + path.string() +
                          " --format record");
  CHECK(result.status == 0);
  CHECK(result.out ==
        "{\"size\":4,\"dots\":[[1,1],[1,3],[1,4],[2,3],[3,1],[3,2],[4,1]]}\n");
}
