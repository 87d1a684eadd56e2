#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/hlm_app.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace hlm;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "hlm_cli_test") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("geometric mean of {2, 8} is 4") {
  CHECK_THAT(app::geometric_mean({2.0, 8.0}), Catch::Matchers::WithinAbs(4.0, 1e-12));
}

TEST_CASE("generate, run, verify, oracle round trip through the cli") {
  TempDir tmp;
  const std::string instance = tmp.file("tight.hgr");
  const std::string matching = tmp.file("m.txt");
  const std::string csv = tmp.file("run.csv");

  CHECK(app::run_cli({"generate", "tight", "--d", "3", "--epsilon", "0.1", "--out", instance}) ==
        0);
  std::ifstream generated(instance);
  std::stringstream buffer;
  buffer << generated.rdbuf();
  CHECK(parse_hgr(buffer.str()) == generate_tight_family(3, 0.1));

  CHECK(app::run_cli({"run", "--instance", instance, "--noise", "0:0", "--variant", "crcw",
                      "--oracle", "--emit-matching", matching, "--csv", csv}) == 0);
  auto csv_lines = read_lines(csv);
  REQUIRE(csv_lines.size() == 2);
  CHECK(csv_lines[0] == app::csv_header());
  CHECK(csv_lines[1].find(",1,1.100000,") != std::string::npos);  // size=1, weight
  CHECK(csv_lines[1].find("0.366667") != std::string::npos);      // ratio vs oracle

  CHECK(app::run_cli({"verify", "--instance", instance, "--matching", matching}) == 0);
  CHECK(app::run_cli({"oracle", "--instance", instance}) == 0);
}

TEST_CASE("run rejects unknown flags and missing files") {
  CHECK(app::run_cli({"run", "--instance", "/nonexistent.hgr"}) != 0);
  CHECK(app::run_cli({"run", "--bogus"}) != 0);
  CHECK(app::run_cli({}) != 0);
}

TEST_CASE("run variants agree through the cli surface") {
  TempDir tmp;
  const std::string instance = tmp.file("rnd.hgr");
  REQUIRE(app::run_cli({"generate", "random", "--n", "60", "--m", "80", "--min-size", "2",
                        "--max-size", "4", "--seed", "5", "--weights", "random", "--out",
                        instance}) == 0);

  const std::string csv = tmp.file("both.csv");
  for (const char* variant : {"seq", "crcw", "crew", "opt"})
    REQUIRE(app::run_cli({"run", "--instance", instance, "--variant", variant, "--seed", "9",
                          "--csv", csv}) == 0);
  auto lines = read_lines(csv);
  REQUIRE(lines.size() == 5);  // header + 4 rows
  auto field = [](const std::string& line, int idx) {
    std::stringstream ss(line);
    std::string tok;
    for (int i = 0; i <= idx; ++i) std::getline(ss, tok, ',');
    return tok;
  };
  // identical size (7) and weight (8) across variants
  for (int row = 2; row <= 4; ++row) {
    CHECK(field(lines[row], 7) == field(lines[1], 7));
    CHECK(field(lines[row], 8) == field(lines[1], 8));
  }
}

TEST_CASE("bench emits data rows plus mean and geomean summaries") {
  TempDir tmp;
  const std::string a = tmp.file("a.hgr");
  const std::string b = tmp.file("b.hgr");
  REQUIRE(app::run_cli({"generate", "random", "--n", "30", "--m", "40", "--seed", "1", "--out",
                        a}) == 0);
  REQUIRE(app::run_cli({"generate", "random", "--n", "30", "--m", "40", "--seed", "2", "--out",
                        b}) == 0);

  const std::string csv = tmp.file("bench.csv");
  REQUIRE(app::run_cli({"bench", "--instances", a, b, "--variants", "crcw,greedy", "--repeats",
                        "3", "--csv", csv}) == 0);
  auto lines = read_lines(csv);
  // header + 2 instances x 2 variants x 3 repeats + 4 mean rows + 2 geomean rows
  REQUIRE(lines.size() == 1 + 12 + 4 + 2);
  int means = 0, geos = 0;
  for (const auto& line : lines) {
    if (line.find(",mean,") != std::string::npos) ++means;
    if (line.rfind("geomean,", 0) == 0) ++geos;
  }
  CHECK(means == 4);
  CHECK(geos == 2);
}

TEST_CASE("verify exits nonzero for broken matchings") {
  TempDir tmp;
  const std::string instance = tmp.file("tri.hgr");
  {
    std::ofstream out(instance);
    out << "3 3 1\n5 1 2\n4 2 3\n3 1 3\n";  // triangle of pair edges
  }
  const std::string not_maximal = tmp.file("empty.txt");
  {
    std::ofstream out(not_maximal);
    out << "% nothing matched\n";
  }
  CHECK(app::run_cli({"verify", "--instance", instance, "--matching", not_maximal}) == 1);

  const std::string not_disjoint = tmp.file("overlap.txt");
  {
    std::ofstream out(not_disjoint);
    out << "0\n1\n";  // edges share vertex 2
  }
  CHECK(app::run_cli({"verify", "--instance", instance, "--matching", not_disjoint}) == 1);

  const std::string good = tmp.file("good.txt");
  {
    std::ofstream out(good);
    out << "0\n";  // edge 0 covers two of the three vertices, blocking the rest
  }
  CHECK(app::run_cli({"verify", "--instance", instance, "--matching", good}) == 0);
}

TEST_CASE("uniform flag and generators parse") {
  TempDir tmp;
  const std::string instance = tmp.file("g.hgr");
  REQUIRE(app::run_cli({"generate", "random", "--n", "40", "--m", "50", "--seed", "3", "--out",
                        instance}) == 0);
  for (const char* gen : {"xorshift", "park-miller", "splitmix"})
    CHECK(app::run_cli({"run", "--instance", instance, "--uniform", "--generator", gen}) == 0);
  CHECK(app::run_cli({"run", "--instance", instance, "--noise", "banana"}) == 1);
  CHECK(app::run_cli({"run", "--instance", instance, "--noise", "5:2"}) == 1);
}
