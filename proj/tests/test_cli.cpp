#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "peelbc/cli.hpp"
#include "peelbc/io.hpp"

namespace fs = std::filesystem;
using peelbc::run_cli;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.status = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Scratch directory removed at scope exit.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("peelbc-cli-" + std::to_string(std::hash<const void*>{}(this)));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }
};

}  // namespace

TEST_CASE("exact: star through peel1") {
  Scratch s;
  const auto path = s.write("star.txt", "c a\nc b\nc d\nc e\n");
  const auto r = cli({"exact", path, "--algorithm", "peel1"});
  CHECK(r.status == 0);
  CHECK(r.out == "node,bc\na,0\nb,0\nc,1\nd,0\ne,0\n");
}

TEST_CASE("exact: json carries the run record") {
  Scratch s;
  const auto path = s.write("p4.txt", "1 2\n2 3\n3 4\n");
  const auto r = cli({"exact", path, "--algorithm", "brandes", "--format", "json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["run"]["algorithm"] == "brandes");
  CHECK(j["run"]["n"] == 4);
  CHECK(j["run"]["k"].is_null());
  CHECK_FALSE(j["run"].contains("elapsed_seconds"));
  CHECK(j["scores"][1]["node"] == "2");
  CHECK(j["scores"][1]["bc"].get<double>() == doctest::Approx(2.0 / 3));
}

TEST_CASE("exact: compare mode") {
  Scratch s;
  const auto path = s.write("g.txt", "a b\nb c\nc e\ne f\ne g\nc h\nh a\n");
  const auto r = cli({"exact", path, "--algorithm", "brandes", "--compare",
                      "2core-recurrence"});
  CHECK(r.status == 0);
  CHECK(r.err.find("compare brandes vs 2core-recurrence: max_abs_diff=") != std::string::npos);
}

TEST_CASE("exact: errors") {
  CHECK(cli({"exact", "/nonexistent/graph.txt"}).status != 0);
  Scratch s;
  const auto bad = s.write("bad.txt", "a b c\n");
  const auto r = cli({"exact", bad});
  CHECK(r.status == 1);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(cli({"exact", bad, "--algorithm", "magic"}).status != 0);
}

TEST_CASE("exact: cubic algorithms refuse large inputs") {
  Scratch s;
  std::string text;
  for (int i = 1; i <= 2100; ++i) text += "0 " + std::to_string(i) + "\n";
  const auto path = s.write("big.txt", text);
  const auto r = cli({"exact", path, "--algorithm", "oracle"});
  CHECK(r.status == 2);
  CHECK(r.err.find("--force") != std::string::npos);
}

TEST_CASE("sample: argument checks and determinism") {
  Scratch s;
  CHECK(cli({"synth", "--core", "20", "--v1", "200", "--seed", "4", "--out",
             (s.dir / "g.txt").string()})
            .status == 0);
  const auto path = (s.dir / "g.txt").string();
  CHECK(cli({"sample", path, "--k", "0"}).status != 0);
  CHECK(cli({"sample", path}).status != 0);

  const auto a = cli({"sample", path, "--k", "10", "--seed", "7"});
  const auto b = cli({"sample", path, "--k", "10", "--seed", "7"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto c = cli({"sample", path, "--k", "10", "--seed", "7", "--method", "baseline",
                      "--format", "json"});
  CHECK(nlohmann::json::parse(c.out)["run"]["algorithm"] == "baseline");
}

TEST_CASE("sample: error against a truth file") {
  Scratch s;
  const auto path = s.write("g.txt", "a b\nb c\nc d\nd a\nd e\ne f\n");
  const auto truth = cli({"exact", path});
  const auto truth_path = s.write("truth.csv", truth.out);
  const auto r = cli({"sample", path, "--k", "100", "--truth", truth_path});
  CHECK(r.status == 0);
  CHECK(r.err == "rel_l1=0\n");
  const auto j = nlohmann::json::parse(
      cli({"sample", path, "--k", "1", "--seed", "3", "--truth", truth_path, "--format",
           "json"})
          .out);
  CHECK(j["run"]["rel_l1"].get<double>() >= 0.0);
  CHECK(j["run"]["k"] == 1);
}

TEST_CASE("stats: path of five") {
  Scratch s;
  const auto path = s.write("p5.txt", "1 2\n2 3\n3 4\n4 5\n");
  const auto r = cli({"stats", path});
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        "dataset,n,m,n_tilde,m_tilde,one_round_survivor_fraction,two_core_fraction,"
        "istar,y_count,delta1,round_fractions\n"
        "p5.txt,5,4,3,2,0.6,0,2,2,1,0.4;0.4\n");
  const auto j = nlohmann::json::parse(cli({"stats", path, "--format", "json"}).out);
  CHECK(j["istar"] == 2);
}

TEST_CASE("stats: matrix market input") {
  Scratch s;
  const auto path = s.write("c4.mtx",
                            "%%MatrixMarket matrix coordinate pattern symmetric\n"
                            "4 4 4\n2 1\n3 2\n4 3\n4 1\n");
  const auto j = nlohmann::json::parse(cli({"stats", path, "--format", "json"}).out);
  CHECK(j["n"] == 4);
  CHECK(j["two_core_fraction"] == 1.0);
}

TEST_CASE("synth") {
  Scratch s;
  const auto r = cli({"synth", "--core", "50", "--v1", "3000"});
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  CHECK(peelbc::load_edge_list(in).num_nodes() == 3050);

  const auto empty = cli({"synth", "--v1", "0"});
  std::istringstream in0(empty.out);
  CHECK(peelbc::load_edge_list(in0).num_nodes() == 50);

  CHECK(cli({"synth", "--core", "2"}).status != 0);
  CHECK(cli({"synth", "--attachment", "geometric", "--v1", "100", "--seed", "3"}).out ==
        cli({"synth", "--attachment", "geometric", "--v1", "100", "--seed", "3"}).out);
}

TEST_CASE("bench: pivot sweep rows per seed") {
  Scratch s;
  const auto path = s.write("g.txt", "a b\nb c\nc d\nd a\nd e\ne f\nb g\ng h\nh c\n");
  const auto out_dir = (s.dir / "out").string();
  const auto r = cli({"bench", "--suite", "pivot-sweep", "--seeds", "2", "--input", path,
                      "--out", out_dir});
  REQUIRE(r.status == 0);
  const auto table = s.read("out/pivot_sweep.csv");
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  CHECK(line == "dataset,v1_count,n,k,seed,method,rel_l1");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  // 11 values of k and 2 seeds; baseline only where k <= n = 8 (k = 5).
  CHECK(rows == 11 * 2 + 1 * 2);
  CHECK(cli({"bench", "--suite", "pivot-sweep", "--seeds", "2", "--input", path, "--out",
             out_dir})
            .status == 0);
  CHECK(s.read("out/pivot_sweep.csv") == table);
}
