#include "peelbc/sampling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "peelbc/parallel.hpp"
#include "peelbc/peel_bc.hpp"

namespace peelbc {

void SampleConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (!(delta_conf > 0.0 && delta_conf < 1.0)) {
    throw std::invalid_argument("delta_conf must lie in (0, 1)");
  }
}

BcResult sample_bc_baseline(const Graph& g, const SampleConfig& cfg) {
  cfg.validate();
  const auto n = g.num_nodes();
  if (cfg.k > n) {
    throw std::invalid_argument("k = " + std::to_string(cfg.k) +
                                " exceeds node count " + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<NodeId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<NodeId>(i);
  std::vector<NodeId> pivots;
  pivots.reserve(cfg.k);
  std::mt19937_64 rng(cfg.seed);
  std::sample(all.begin(), all.end(), std::back_inserter(pivots), cfg.k, rng);

  auto make_worker = [&g, &pivots, n] {
    return [&g, &pivots, tree = SsspTree{}](std::size_t i,
                                            std::span<double> acc) mutable {
      const NodeId s = pivots[i];
      sssp_bfs(g, s, tree);
      const auto delta = source_dependencies(tree);
      for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
        if (*it != s) acc[*it] += delta[*it];
      }
    };
  };
  auto raw = reduce_over_sources(pivots.size(), n, cfg.threads, make_worker);

  BcResult r;
  r.algorithm = "baseline";
  r.k = cfg.k;
  r.seed = cfg.seed;
  r.bc.assign(n, 0.0);
  const double norm = bc_normalizer(n);
  if (norm > 0.0) {
    const double scale = static_cast<double>(n) / static_cast<double>(cfg.k);
    for (std::size_t v = 0; v < n; ++v) r.bc[v] = scale * raw[v] / norm;
  }
  r.elapsed_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return r;
}

BcResult sample_bc_peeled(const Graph& g, const SampleConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  auto prep = prepare_one_round(g);
  const auto n_tilde = prep.n_tilde();
  if (cfg.k >= n_tilde) {
    auto exact = bc_one_round_mem(g, {.k = std::nullopt, .seed = cfg.seed,
                                      .threads = cfg.threads});
    exact.seed = cfg.seed;
    return exact;
  }

  const auto pivots = sample_remainder_sources(prep, cfg.k, cfg.seed);
  const double scale = static_cast<double>(n_tilde) / static_cast<double>(cfg.k);
  std::vector<double> raw;
  if (cfg.exact_y_sources) {
    std::vector<NodeId> y_local;
    y_local.reserve(prep.peel.y.size());
    for (NodeId y : prep.peel.y) y_local.push_back(prep.remainder.from_parent[y]);
    raw = accumulate_sources(prep, y_local, SourceWeight::kPendantsOnly, cfg.threads);
    const auto sampled =
        accumulate_sources(prep, pivots, SourceWeight::kUnit, cfg.threads);
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += scale * sampled[i];
  } else {
    raw = accumulate_sources(prep, pivots, SourceWeight::kWithPendants, cfg.threads);
    for (double& x : raw) x *= scale;
  }

  BcResult r;
  r.algorithm = cfg.exact_y_sources ? "peeled-y" : "peeled";
  r.k = cfg.k;
  r.seed = cfg.seed;
  r.bc = finish_one_round(prep, raw);
  r.elapsed_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return r;
}

std::size_t recommended_pivots(std::size_t n_tilde, double epsilon) {
  if (n_tilde < 2) throw std::invalid_argument("n_tilde must be at least 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  return static_cast<std::size_t>(
      std::ceil(std::log(static_cast<double>(n_tilde)) / (epsilon * epsilon)));
}

std::size_t bernstein_pivot_bound(std::size_t n, std::size_t n_tilde,
                                  std::size_t delta1, double epsilon) {
  if (n_tilde < 2 || n_tilde > n) {
    throw std::invalid_argument("need 2 <= n_tilde <= n");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const double nn = static_cast<double>(n);
  const double nt = static_cast<double>(n_tilde);
  const double spread = 1.0 + static_cast<double>(delta1);
  // Scale every term by n^4 up front to keep the magnitudes moderate.
  const double variance = nt * spread * spread / (nn * nn);
  const double range = spread * epsilon / (3.0 * nn);
  const double k = std::log(nt) / (epsilon * epsilon) * nt * (variance + range);
  return static_cast<std::size_t>(std::ceil(k));
}

ErrorReport relative_l1_error(const BcResult& est, const BcResult& truth) {
  if (est.bc.size() != truth.bc.size()) {
    throw std::invalid_argument("estimate and truth cover different node sets");
  }
  ErrorReport r;
  r.per_node.resize(est.bc.size());
  double diff_sum = 0.0;
  double truth_sum = 0.0;
  for (std::size_t v = 0; v < est.bc.size(); ++v) {
    const double diff = est.bc[v] - truth.bc[v];
    r.per_node[v] = diff;
    diff_sum += std::abs(diff);
    truth_sum += std::abs(truth.bc[v]);
    r.max_abs = std::max(r.max_abs, std::abs(diff));
  }
  if (truth_sum > 0.0) {
    r.rel_l1 = diff_sum / truth_sum;
  } else {
    r.rel_l1 = diff_sum == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace peelbc
