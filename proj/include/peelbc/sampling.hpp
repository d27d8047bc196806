#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "peelbc/exact_bc.hpp"
#include "peelbc/graph.hpp"

namespace peelbc {

struct SampleConfig {
  std::size_t k = 1;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  double delta_conf = 0.1;
  unsigned threads = 1;
  // Peeled estimator only: run every node that has removed neighbors as an
  // exact source and sample the uniform part on top of it.
  bool exact_y_sources = false;

  // Throws std::invalid_argument when a field is out of its domain.
  void validate() const;
};

// Brandes-Pich: k distinct pivots drawn uniformly from all nodes, rescaled
// by n/k. Throws std::invalid_argument when k > n.
BcResult sample_bc_baseline(const Graph& g, const SampleConfig& cfg);

// One round of peeling, k pivots from the survivors rescaled by n~/k, plus
// the exact pendant terms. Falls back to the exact computation when
// k >= n~.
BcResult sample_bc_peeled(const Graph& g, const SampleConfig& cfg);

// ceil(ln(n~) / eps^2), the uniform-sample size for an additive
// eps (n~-1)/(n-1) guarantee when few nodes carry degree-1 neighbors.
std::size_t recommended_pivots(std::size_t n_tilde, double epsilon);

// Worst-case pivot count from Bernstein's inequality with the crude bound
// sum(val_i^2) <= n~ (1+delta1)^2 n^2:
//   ceil( ln(n~)/eps^2 * n~ * (n~ (1+delta1)^2 n^2 + (1+delta1) eps n^3 / 3) / n^4 )
// The true variance term is only known after the run, so this is usually
// loose; with a uniform degree-1 sequence recommended_pivots() applies
// instead.
std::size_t bernstein_pivot_bound(std::size_t n, std::size_t n_tilde,
                                  std::size_t delta1, double epsilon);

struct ErrorReport {
  double rel_l1 = 0.0;  // +inf when the truth sums to zero but est differs
  double max_abs = 0.0;
  std::vector<double> per_node;  // est - truth
};

// Throws std::invalid_argument when the node counts differ.
ErrorReport relative_l1_error(const BcResult& est, const BcResult& truth);

}  // namespace peelbc
