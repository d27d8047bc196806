#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "peelbc/graph.hpp"
#include "peelbc/synth.hpp"

namespace peelbc {

struct Dataset {
  std::string name;
  Graph graph;
};

// Seeds used by the suites: base, base+1, ..., base+count-1.
struct SeedRange {
  std::uint64_t base = 1;
  std::size_t count = 5;
};

// Fixed k, growing periphery around a fixed core; both estimators.
struct GrowthOptions {
  std::size_t k = 10;
  std::size_t core_size = 50;
  std::vector<std::size_t> v1_counts{100, 500, 1000, 3000};
  Attachment attachment = Attachment::kGeometricHalving;
  SeedRange seeds;
  unsigned threads = 1;
};

struct ErrorRow {
  std::string dataset;
  std::size_t v1_count = 0;  // growth suite only
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string method;
  double rel_l1 = 0.0;
};

struct GrowthSummary {
  std::size_t v1_count = 0;
  double baseline_mean = 0.0;
  double peeled_mean = 0.0;
};

std::vector<ErrorRow> run_synth_growth(const GrowthOptions& options);
std::vector<GrowthSummary> summarize_growth(const std::vector<ErrorRow>& rows);

struct SweepOptions {
  std::vector<std::size_t> ks{5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  SeedRange seeds;
  unsigned threads = 1;
};

// Rows for k larger than the node count are skipped for the baseline.
std::vector<ErrorRow> run_pivot_sweep(const std::vector<Dataset>& datasets,
                                      const SweepOptions& options);

struct SpeedupRow {
  std::string dataset;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t n_tilde = 0;
  double brandes_seconds = 0.0;  // median over repetitions
  double peel_seconds = 0.0;
  double ratio = 0.0;            // brandes / peel
};

// Wall time of the compute call only, median of `repetitions` runs.
std::vector<SpeedupRow> run_speedup(const std::vector<Dataset>& datasets,
                                    std::size_t repetitions, unsigned threads);

Dataset synthetic_speedup_dataset();

void write_error_rows(const std::vector<ErrorRow>& rows, std::ostream& out);
void write_growth_summary(const std::vector<GrowthSummary>& rows, std::ostream& out);
void write_speedup_rows(const std::vector<SpeedupRow>& rows, std::ostream& out);

}  // namespace peelbc
