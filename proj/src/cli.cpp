#include "peelbc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "peelbc/bench.hpp"
#include "peelbc/exact_bc.hpp"
#include "peelbc/io.hpp"
#include "peelbc/peel.hpp"
#include "peelbc/peel_bc.hpp"
#include "peelbc/record.hpp"
#include "peelbc/sampling.hpp"
#include "peelbc/synth.hpp"

namespace peelbc {
namespace {

namespace fs = std::filesystem;

// Inputs above this size are refused by the cubic algorithms unless forced.
constexpr std::size_t kCubicCliCap = 2000;

const std::map<std::string, InputFormat> kInputFormats{
    {"auto", InputFormat::kAuto},
    {"edges", InputFormat::kEdgeList},
    {"mtx", InputFormat::kMatrixMarket}};

struct CommonOptions {
  std::string input;
  std::string input_format = "auto";
  std::string out = "-";
  std::string format = "csv";
  unsigned threads = 0;
  bool timing = false;
};

struct ExactOptions {
  std::string algorithm = "peel1";
  std::string compare;
  double tolerance = 1e-9;
  bool force = false;
};

struct SampleOptions {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string method = "peeled";
  bool exact_y = false;
  std::string truth;
};

struct SynthOptions {
  std::size_t core = 50;
  std::size_t v1 = 0;
  std::string attachment = "linear";
  std::uint64_t seed = 0;
  std::string out = "-";
};

struct BenchOptions {
  std::string suite;
  std::size_t seeds = 5;
  std::uint64_t seed = 1;
  std::string out_dir;
  std::vector<std::string> inputs;
  std::string input_format = "auto";
  std::size_t k = 10;
  std::size_t repetitions = 3;
  unsigned threads = 0;
};

std::string dataset_name(const std::string& path) {
  return fs::path(path).filename().string();
}

Graph load_input(const std::string& path, const std::string& format) {
  return load_graph_file(path, kInputFormats.at(format));
}

// Writes to the named file, or to `out` for "-".
void emit(const std::string& target, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (target == "-") {
    write(out);
    return;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + target + "'");
  write(file);
  if (!file) throw std::runtime_error("error writing '" + target + "'");
}

RunRecord base_record(const std::string& name, const PeelReport& report) {
  RunRecord rec;
  rec.dataset = name;
  rec.n = report.n;
  rec.m = report.m;
  rec.n_tilde = report.n_tilde;
  rec.m_tilde = report.m_tilde;
  rec.round_fractions = report.round_fractions;
  return rec;
}

bool is_cubic(const std::string& algorithm) {
  return algorithm == "oracle" || algorithm == "2core-recurrence";
}

BcResult run_exact(const std::string& algorithm, const Graph& g, unsigned threads) {
  if (algorithm == "brandes") return brandes_exact(g, threads);
  if (algorithm == "peel1") return bc_one_round_mem(g, {.k = std::nullopt, .seed = 0, .threads = threads});
  if (algorithm == "peel1-full") return bc_one_round_full(g).result;
  if (algorithm == "2core-recurrence") return bc_via_2core_recurrence(g);
  if (algorithm == "oracle") return oracle_bc(g);
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

void write_result(const CommonOptions& common, const Graph& g, const BcResult& r,
                  const RunRecord& rec, std::ostream& out,
                  const nlohmann::ordered_json& extra = {}) {
  emit(common.out, out, [&](std::ostream& os) {
    if (common.format == "json") {
      auto j = scores_json(g, r, rec);
      for (auto it = extra.begin(); it != extra.end(); ++it) j["run"][it.key()] = it.value();
      os << j.dump(2) << '\n';
    } else {
      write_scores_csv(g, r, os);
    }
  });
}

int cmd_exact(const CommonOptions& common, const ExactOptions& opt, std::ostream& out,
              std::ostream& err) {
  const Graph g = load_input(common.input, common.input_format);
  for (const auto& alg : {opt.algorithm, opt.compare}) {
    if (is_cubic(alg) && g.num_nodes() > kCubicCliCap && !opt.force) {
      err << "error: '" << alg << "' is cubic; refusing " << g.num_nodes()
          << " nodes (limit " << kCubicCliCap << ", pass --force to override)\n";
      return 2;
    }
  }
  const auto report = peel_diagnostics(g);
  const auto result = run_exact(opt.algorithm, g, common.threads);
  auto rec = base_record(dataset_name(common.input), report);
  rec.algorithm = opt.algorithm;
  if (common.timing) rec.elapsed_seconds = result.elapsed_seconds;

  nlohmann::ordered_json extra;
  int status = 0;
  if (!opt.compare.empty()) {
    const auto other = run_exact(opt.compare, g, common.threads);
    const auto cmp = relative_l1_error(other, result);
    err << "compare " << opt.algorithm << " vs " << opt.compare
        << ": max_abs_diff=" << format_score(cmp.max_abs) << '\n';
    extra["compare"] = {{"algorithm", opt.compare}, {"max_abs_diff", cmp.max_abs}};
    if (cmp.max_abs > opt.tolerance) {
      err << "error: difference exceeds tolerance " << format_score(opt.tolerance) << '\n';
      status = 3;
    }
  }
  write_result(common, g, result, rec, out, extra);
  return status;
}

int cmd_sample(const CommonOptions& common, const SampleOptions& opt, std::ostream& out,
               std::ostream& err) {
  const Graph g = load_input(common.input, common.input_format);
  SampleConfig cfg;
  cfg.k = opt.k;
  cfg.seed = opt.seed;
  cfg.threads = common.threads;
  cfg.exact_y_sources = opt.exact_y;
  const auto result = opt.method == "baseline" ? sample_bc_baseline(g, cfg)
                                               : sample_bc_peeled(g, cfg);
  auto rec = base_record(dataset_name(common.input), peel_diagnostics(g));
  rec.algorithm = result.algorithm;
  rec.k = opt.k;
  rec.seed = opt.seed;
  if (common.timing) rec.elapsed_seconds = result.elapsed_seconds;
  if (!opt.truth.empty()) {
    std::ifstream in(opt.truth);
    if (!in) throw std::runtime_error("cannot open '" + opt.truth + "'");
    rec.rel_l1 = relative_l1_error(result, read_scores_csv(g, in)).rel_l1;
  }
  if (rec.rel_l1 && common.format == "csv") {
    // CSV scores carry no metadata block; report the error on its own.
    err << "rel_l1=" << format_score(*rec.rel_l1) << '\n';
  }
  write_result(common, g, result, rec, out);
  return 0;
}

int cmd_stats(const CommonOptions& common, std::ostream& out) {
  const Graph g = load_input(common.input, common.input_format);
  const auto r = peel_diagnostics(g);
  const double n = r.n == 0 ? 1.0 : static_cast<double>(r.n);
  const double survivors = static_cast<double>(r.n_tilde) / n;
  const double two_core = static_cast<double>(r.two_core_size) / n;
  const std::string name = dataset_name(common.input);
  emit(common.out, out, [&](std::ostream& os) {
    if (common.format == "json") {
      nlohmann::ordered_json j;
      j["dataset"] = name;
      j["n"] = r.n;
      j["m"] = r.m;
      j["n_tilde"] = r.n_tilde;
      j["m_tilde"] = r.m_tilde;
      j["one_round_survivor_fraction"] = survivors;
      j["two_core_fraction"] = two_core;
      j["istar"] = r.istar;
      j["round_fractions"] = r.round_fractions;
      j["y_count"] = r.y_count;
      j["delta1"] = r.delta1;
      j["deg1_histogram"] = r.deg1_histogram;
      os << j.dump(2) << '\n';
      return;
    }
    os << "dataset,n,m,n_tilde,m_tilde,one_round_survivor_fraction,two_core_fraction,"
          "istar,y_count,delta1,round_fractions\n";
    std::string fractions;
    for (std::size_t i = 0; i < r.round_fractions.size(); ++i) {
      if (i) fractions += ';';
      fractions += format_score(r.round_fractions[i]);
    }
    os << csv_field(name) << ',' << r.n << ',' << r.m << ',' << r.n_tilde << ','
       << r.m_tilde << ',' << format_score(survivors) << ',' << format_score(two_core)
       << ',' << r.istar << ',' << r.y_count << ',' << r.delta1 << ',' << fractions
       << '\n';
  });
  return 0;
}

int cmd_synth(const SynthOptions& opt, std::ostream& out) {
  CorePeripherySpec spec{opt.core, opt.v1, parse_attachment(opt.attachment), opt.seed};
  spec.validate();
  const Graph g = generate_core_periphery(spec);
  emit(opt.out, out, [&](std::ostream& os) { write_edge_list(g, os); });
  return 0;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  fs::create_directories(opt.out_dir);
  const fs::path dir(opt.out_dir);
  const SeedRange seeds{opt.seed, opt.seeds};
  std::vector<Dataset> datasets;
  for (const auto& path : opt.inputs) {
    datasets.push_back({dataset_name(path), load_input(path, opt.input_format)});
  }

  if (opt.suite == "synth-growth") {
    GrowthOptions g;
    g.k = opt.k;
    g.seeds = seeds;
    g.threads = opt.threads;
    const auto rows = run_synth_growth(g);
    emit((dir / "synth_growth.csv").string(), out,
         [&](std::ostream& os) { write_error_rows(rows, os); });
    emit((dir / "synth_growth_summary.csv").string(), out,
         [&](std::ostream& os) { write_growth_summary(summarize_growth(rows), os); });
  } else if (opt.suite == "pivot-sweep") {
    if (datasets.empty()) {
      datasets.push_back({"core50-v1-3000-geometric",
                          generate_core_periphery(
                              {50, 3000, Attachment::kGeometricHalving, opt.seed})});
    }
    SweepOptions s;
    s.seeds = seeds;
    s.threads = opt.threads;
    const auto rows = run_pivot_sweep(datasets, s);
    emit((dir / "pivot_sweep.csv").string(), out,
         [&](std::ostream& os) { write_error_rows(rows, os); });
  } else {
    datasets.insert(datasets.begin(), synthetic_speedup_dataset());
    const auto rows = run_speedup(datasets, opt.repetitions, opt.threads);
    emit((dir / "speedup.csv").string(), out,
         [&](std::ostream& os) { write_speedup_rows(rows, os); });
  }
  return 0;
}

void add_common(CLI::App* sub, CommonOptions& common, bool with_format = true) {
  sub->add_option("input", common.input, "Edge list or MatrixMarket file")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--input-format", common.input_format, "auto, edges or mtx")
      ->check(CLI::IsMember({"auto", "edges", "mtx"}));
  sub->add_option("--out", common.out, "Output file ('-' for stdout)");
  if (with_format) {
    sub->add_option("--format", common.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betweenness centrality with degree-1 peeling"};
  app.require_subcommand(1);

  CommonOptions common;
  ExactOptions exact;
  SampleOptions sample;
  SynthOptions synth;
  BenchOptions bench;

  auto* exact_cmd = app.add_subcommand("exact", "Exact scores for every node");
  add_common(exact_cmd, common);
  exact_cmd->add_option("--algorithm", exact.algorithm)
      ->check(CLI::IsMember({"brandes", "peel1", "peel1-full", "2core-recurrence", "oracle"}));
  exact_cmd->add_option("--compare", exact.compare, "Second algorithm to diff against")
      ->check(CLI::IsMember({"brandes", "peel1", "peel1-full", "2core-recurrence", "oracle"}));
  exact_cmd->add_option("--tolerance", exact.tolerance, "Max per-node difference in --compare");
  exact_cmd->add_flag("--force", exact.force, "Run cubic algorithms on large inputs");

  auto* sample_cmd = app.add_subcommand("sample", "Pivot-sampling estimates");
  add_common(sample_cmd, common);
  sample_cmd->add_option("--k", sample.k, "Number of pivots")
      ->required()
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sample.seed);
  sample_cmd->add_option("--method", sample.method)
      ->check(CLI::IsMember({"baseline", "peeled"}));
  sample_cmd->add_flag("--exact-y", sample.exact_y,
                       "Peeled: run nodes with degree-1 neighbors exactly");
  sample_cmd->add_option("--truth", sample.truth, "node,bc file with exact scores")
      ->check(CLI::ExistingFile);

  auto* stats_cmd = app.add_subcommand("stats", "Peeling statistics");
  add_common(stats_cmd, common);

  for (auto* sub : {exact_cmd, sample_cmd}) {
    sub->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
    sub->add_flag("--timing", common.timing, "Include wall time in JSON metadata");
  }

  auto* synth_cmd = app.add_subcommand("synth", "Generate a core-periphery graph");
  synth_cmd->add_option("--core", synth.core)->check(CLI::Range(3, 1 << 20));
  synth_cmd->add_option("--v1", synth.v1);
  synth_cmd->add_option("--attachment", synth.attachment)
      ->check(CLI::IsMember({"linear", "linear-skew", "geometric", "geometric-halving"}));
  synth_cmd->add_option("--seed", synth.seed);
  synth_cmd->add_option("--out", synth.out);

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark suites (CSV output)");
  bench_cmd->add_option("--suite", bench.suite)
      ->required()
      ->check(CLI::IsMember({"synth-growth", "pivot-sweep", "speedup"}));
  bench_cmd->add_option("--seeds", bench.seeds, "Number of seeds")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "First seed");
  bench_cmd->add_option("--out", bench.out_dir, "Output directory")->required();
  bench_cmd->add_option("--input", bench.inputs, "Dataset files")->check(CLI::ExistingFile);
  bench_cmd->add_option("--input-format", bench.input_format)
      ->check(CLI::IsMember({"auto", "edges", "mtx"}));
  bench_cmd->add_option("--k", bench.k, "Pivots for synth-growth")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", bench.repetitions, "Timing repetitions")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", bench.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*exact_cmd) return cmd_exact(common, exact, out, err);
    if (*sample_cmd) return cmd_sample(common, sample, out, err);
    if (*stats_cmd) return cmd_stats(common, out);
    if (*synth_cmd) return cmd_synth(synth, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage{"peelbc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace peelbc
