#include "peelbc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>

#include "peelbc/exact_bc.hpp"
#include "peelbc/peel.hpp"
#include "peelbc/peel_bc.hpp"
#include "peelbc/record.hpp"
#include "peelbc/sampling.hpp"

namespace peelbc {
namespace {

template <typename F>
double median_seconds(std::size_t repetitions, F&& f) {
  std::vector<double> times;
  for (std::size_t i = 0; i < std::max<std::size_t>(1, repetitions); ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    times.push_back(std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

std::vector<ErrorRow> run_synth_growth(const GrowthOptions& options) {
  std::vector<ErrorRow> rows;
  for (std::size_t v1 : options.v1_counts) {
    for (std::size_t i = 0; i < options.seeds.count; ++i) {
      const std::uint64_t seed = options.seeds.base + i;
      const Graph g = generate_core_periphery(
          {options.core_size, v1, options.attachment, seed});
      const auto truth = brandes_exact(g, options.threads);
      SampleConfig cfg;
      cfg.k = options.k;
      cfg.seed = seed;
      cfg.threads = options.threads;
      const std::string name = "core" + std::to_string(options.core_size) + "-v1-" +
                               std::to_string(v1);
      for (const char* method : {"baseline", "peeled"}) {
        const auto est = std::string(method) == "baseline" ? sample_bc_baseline(g, cfg)
                                                           : sample_bc_peeled(g, cfg);
        rows.push_back({name, v1, g.num_nodes(), options.k, seed, method,
                        relative_l1_error(est, truth).rel_l1});
      }
    }
  }
  return rows;
}

std::vector<GrowthSummary> summarize_growth(const std::vector<ErrorRow>& rows) {
  std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>> by_v1;
  for (const auto& r : rows) {
    auto& slot = by_v1[r.v1_count];
    (r.method == "baseline" ? slot.first : slot.second).push_back(r.rel_l1);
  }
  auto mean = [](const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
  };
  std::vector<GrowthSummary> out;
  for (const auto& [v1, pair] : by_v1) {
    out.push_back({v1, mean(pair.first), mean(pair.second)});
  }
  return out;
}

std::vector<ErrorRow> run_pivot_sweep(const std::vector<Dataset>& datasets,
                                      const SweepOptions& options) {
  std::vector<ErrorRow> rows;
  for (const auto& ds : datasets) {
    const auto truth = brandes_exact(ds.graph, options.threads);
    const auto n = ds.graph.num_nodes();
    for (std::size_t k : options.ks) {
      for (std::size_t i = 0; i < options.seeds.count; ++i) {
        SampleConfig cfg;
        cfg.k = k;
        cfg.seed = options.seeds.base + i;
        cfg.threads = options.threads;
        if (k <= n) {
          rows.push_back({ds.name, 0, n, k, cfg.seed, "baseline",
                          relative_l1_error(sample_bc_baseline(ds.graph, cfg), truth).rel_l1});
        }
        rows.push_back({ds.name, 0, n, k, cfg.seed, "peeled",
                        relative_l1_error(sample_bc_peeled(ds.graph, cfg), truth).rel_l1});
      }
    }
  }
  return rows;
}

std::vector<SpeedupRow> run_speedup(const std::vector<Dataset>& datasets,
                                    std::size_t repetitions, unsigned threads) {
  std::vector<SpeedupRow> rows;
  for (const auto& ds : datasets) {
    const auto report = peel_diagnostics(ds.graph);
    SpeedupRow row;
    row.dataset = ds.name;
    row.n = report.n;
    row.m = report.m;
    row.n_tilde = report.n_tilde;
    row.brandes_seconds =
        median_seconds(repetitions, [&] { (void)brandes_exact(ds.graph, threads); });
    row.peel_seconds = median_seconds(repetitions, [&] {
      (void)bc_one_round_mem(ds.graph, {.k = std::nullopt, .seed = 0, .threads = threads});
    });
    row.ratio = row.peel_seconds > 0.0 ? row.brandes_seconds / row.peel_seconds : 0.0;
    rows.push_back(row);
  }
  return rows;
}

Dataset synthetic_speedup_dataset() {
  return {"core50-v1-3000",
          generate_core_periphery({50, 3000, Attachment::kLinearSkew, 1})};
}

void write_error_rows(const std::vector<ErrorRow>& rows, std::ostream& out) {
  out << "dataset,v1_count,n,k,seed,method,rel_l1\n";
  for (const auto& r : rows) {
    out << csv_field(r.dataset) << ',' << r.v1_count << ',' << r.n << ',' << r.k
        << ',' << r.seed << ',' << r.method << ',' << format_score(r.rel_l1) << '\n';
  }
}

void write_growth_summary(const std::vector<GrowthSummary>& rows, std::ostream& out) {
  out << "v1_count,baseline_mean_rel_l1,peeled_mean_rel_l1\n";
  for (const auto& r : rows) {
    out << r.v1_count << ',' << format_score(r.baseline_mean) << ','
        << format_score(r.peeled_mean) << '\n';
  }
}

void write_speedup_rows(const std::vector<SpeedupRow>& rows, std::ostream& out) {
  out << "dataset,n,m,n_tilde,brandes_seconds,peel1_seconds,ratio\n";
  for (const auto& r : rows) {
    out << csv_field(r.dataset) << ',' << r.n << ',' << r.m << ',' << r.n_tilde << ','
        << format_score(r.brandes_seconds) << ',' << format_score(r.peel_seconds)
        << ',' << format_score(r.ratio) << '\n';
  }
}

}  // namespace peelbc
