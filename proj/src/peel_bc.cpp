#include "peelbc/peel_bc.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>

#include "peelbc/parallel.hpp"

namespace peelbc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Algorithm-2 style accumulation into caller-provided buffers.
void accumulate_into(const SsspTree& tree, std::span<const std::size_t> deg1,
                     std::span<double> delta, std::span<double> zeta) {
  for (NodeId w : tree.order) {
    delta[w] = 0.0;
    zeta[w] = 0.0;
  }
  for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
    const NodeId w = *it;
    const double coeff = (1.0 + delta[w]) / tree.sigma[w];
    const double coeff_zeta = (static_cast<double>(deg1[w]) + zeta[w]) / tree.sigma[w];
    for (NodeId v : tree.preds(w)) {
      if (v == tree.source) continue;
      delta[v] += tree.sigma[v] * coeff;
      zeta[v] += tree.sigma[v] * coeff_zeta;
    }
  }
}

void check_k(const std::optional<std::size_t>& k) {
  if (k && *k == 0) throw std::invalid_argument("pivot count k must be positive");
}

}  // namespace

DependencyRows accumulate_delta_zeta(const SsspTree& tree,
                                     std::span<const std::size_t> deg1) {
  const auto n = tree.dist.size();
  DependencyRows rows{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  accumulate_into(tree, deg1, rows.delta, rows.zeta);
  return rows;
}

OneRoundPeel prepare_one_round(const Graph& g) {
  OneRoundPeel prep;
  prep.peel = peel(g, 1);
  prep.remainder = first_round_remainder(g, prep.peel);
  prep.deg1_local.resize(prep.remainder.to_parent.size());
  for (std::size_t i = 0; i < prep.deg1_local.size(); ++i) {
    prep.deg1_local[i] = prep.peel.deg1[prep.remainder.to_parent[i]];
  }
  prep.components = connected_components(g);
  return prep;
}

std::vector<double> accumulate_sources(const OneRoundPeel& prep,
                                       std::span<const NodeId> sources,
                                       SourceWeight weight, unsigned threads) {
  const Graph& sub = prep.remainder.graph;
  const auto width = sub.num_nodes();
  std::span<const std::size_t> deg1 = prep.deg1_local;
  auto make_worker = [&sub, &sources, deg1, width, weight] {
    return [&sub, &sources, deg1, weight, tree = SsspTree{},
            delta = std::vector<double>(width), zeta = std::vector<double>(width)](
               std::size_t i, std::span<double> acc) mutable {
      const NodeId s = sources[i];
      double factor = 1.0;
      if (weight == SourceWeight::kWithPendants) {
        factor = 1.0 + static_cast<double>(deg1[s]);
      } else if (weight == SourceWeight::kPendantsOnly) {
        factor = static_cast<double>(deg1[s]);
      }
      sssp_bfs(sub, s, tree);
      accumulate_into(tree, deg1, delta, zeta);
      for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
        const NodeId w = *it;
        if (w != s) acc[w] += factor * (delta[w] + zeta[w]);
      }
    };
  };
  return reduce_over_sources(sources.size(), width, threads, make_worker);
}

std::vector<double> finish_one_round(const OneRoundPeel& prep,
                                     std::span<const double> raw) {
  const auto n = prep.n();
  const double norm = bc_normalizer(n);
  std::vector<double> bc(n, 0.0);
  if (norm == 0.0) return bc;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const NodeId u = prep.remainder.to_parent[i];
    const auto d = static_cast<double>(prep.peel.deg1[u]);
    // Pairs with one endpoint among u's own pendants. Unreachable targets
    // are excluded by using u's component size in place of n.
    const auto c = static_cast<double>(prep.components.size_of(u));
    bc[u] = (raw[i] + (2.0 * c - 3.0 - d) * d) / norm;
  }
  return bc;
}

std::vector<NodeId> sample_remainder_sources(const OneRoundPeel& prep,
                                             std::size_t k, std::uint64_t seed) {
  const auto n_tilde = prep.n_tilde();
  std::vector<NodeId> all(n_tilde);
  for (std::size_t i = 0; i < n_tilde; ++i) all[i] = static_cast<NodeId>(i);
  if (k >= n_tilde) return all;
  std::vector<NodeId> picked;
  picked.reserve(k);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), k, rng);
  return picked;
}

DeltaZetaTable::DeltaZetaTable(std::size_t n, std::vector<NodeId> columns)
    : rows_(n), columns_(std::move(columns)), column_of_(n, kNoNode) {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    column_of_[columns_[c]] = static_cast<NodeId>(c);
  }
  delta_.assign(n * columns_.size(), 0.0);
  zeta_.assign(columns_.size() * columns_.size(), 0.0);
}

double DeltaZetaTable::delta(NodeId s, NodeId u) const {
  if (column_of_[u] == kNoNode) return 0.0;
  return delta_[static_cast<std::size_t>(s) * columns_.size() +
                static_cast<std::size_t>(column_of_[u])];
}

double DeltaZetaTable::zeta(NodeId s, NodeId u) const {
  if (column_of_[s] == kNoNode || column_of_[u] == kNoNode) return 0.0;
  return zeta_[static_cast<std::size_t>(column_of_[s]) * columns_.size() +
               static_cast<std::size_t>(column_of_[u])];
}

FullInfoResult bc_one_round_full(const Graph& g, const OneRoundOptions& options) {
  check_k(options.k);
  const auto start = Clock::now();
  const auto prep = prepare_one_round(g);
  const auto n = prep.n();
  const auto n_tilde = prep.n_tilde();

  const double table_bytes = 8.0 * (static_cast<double>(n) * n_tilde +
                                    static_cast<double>(n_tilde) * n_tilde);
  if (table_bytes > static_cast<double>(options.table_memory_cap)) {
    throw MemoryCapExceeded(
        "delta/zeta tables need " + std::to_string(table_bytes / (1 << 20)) +
        " MiB, above the configured cap; use the memory-efficient variant");
  }

  // Remainder ids coincide with column indices (both ascending parent ids).
  FullInfoResult out;
  DeltaZetaTable& table = out.table;
  table = DeltaZetaTable(n, prep.remainder.to_parent);
  const auto& to_parent = prep.remainder.to_parent;

  const bool sampled = options.k && *options.k < n_tilde;
  const auto sources = sampled ? sample_remainder_sources(prep, *options.k, options.seed)
                               : sample_remainder_sources(prep, n_tilde, 0);
  SsspTree tree;
  std::vector<double> delta(n_tilde), zeta(n_tilde);
  for (NodeId s : sources) {
    sssp_bfs(prep.remainder.graph, s, tree);
    accumulate_into(tree, prep.deg1_local, delta, zeta);
    for (NodeId w : tree.order) {
      table.delta_at(to_parent[s], static_cast<std::size_t>(w)) = delta[w];
      table.zeta_at(static_cast<std::size_t>(s), static_cast<std::size_t>(w)) = zeta[w];
    }
  }
  if (sampled) {
    const double scale = static_cast<double>(n_tilde) / static_cast<double>(*options.k);
    for (NodeId s : sources) {
      for (std::size_t c = 0; c < n_tilde; ++c) {
        table.delta_at(to_parent[s], c) *= scale;
        table.zeta_at(static_cast<std::size_t>(s), c) *= scale;
      }
    }
  }

  // Survivor rows first: delta += zeta.
  for (std::size_t row = 0; row < n_tilde; ++row) {
    for (std::size_t c = 0; c < n_tilde; ++c) {
      table.delta_at(to_parent[row], c) += table.zeta_at(row, c);
    }
  }
  // Removed rows reuse their anchor's completed row.
  for (NodeId s = 0; s < static_cast<NodeId>(n); ++s) {
    if (!prep.peel.in_first_round(s)) continue;
    const NodeId y = prep.peel.pendant_anchor[s];
    const bool anchor_survives = !prep.peel.in_first_round(y);
    for (std::size_t c = 0; c < n_tilde; ++c) {
      const NodeId u = to_parent[c];
      double value = 0.0;
      if (u == y) {
        value = static_cast<double>(prep.components.size_of(u)) - 2.0;
      } else if (anchor_survives) {
        value = table.delta_at(y, c);
      }
      table.delta_at(s, c) = value;
    }
  }
  // Targets among u's own pendants: deg1(u) for every other source in u's
  // component.
  for (NodeId u : prep.peel.y) {
    const std::size_t c = table.column_index(u);
    const auto d = static_cast<double>(prep.peel.deg1[u]);
    const auto comp = prep.components.component[u];
    for (NodeId s = 0; s < static_cast<NodeId>(n); ++s) {
      if (s == u || prep.components.component[s] != comp) continue;
      if (prep.peel.in_first_round(s) && prep.peel.pendant_anchor[s] == u) continue;
      table.delta_at(s, c) += d;
    }
  }

  BcResult& r = out.result;
  r.algorithm = "peel1-full";
  r.k = sampled ? options.k : std::nullopt;
  r.seed = options.seed;
  r.bc.assign(n, 0.0);
  const double norm = bc_normalizer(n);
  if (norm > 0.0) {
    for (std::size_t c = 0; c < n_tilde; ++c) {
      double sum = 0.0;
      for (NodeId s = 0; s < static_cast<NodeId>(n); ++s) sum += table.delta_at(s, c);
      r.bc[to_parent[c]] = sum / norm;
    }
  }
  r.elapsed_seconds = seconds_since(start);
  return out;
}

BcResult bc_one_round_mem(const Graph& g, const OneRoundOptions& options) {
  check_k(options.k);
  const auto start = Clock::now();
  const auto prep = prepare_one_round(g);
  const auto n_tilde = prep.n_tilde();
  const bool sampled = options.k && *options.k < n_tilde;
  const auto sources = sampled ? sample_remainder_sources(prep, *options.k, options.seed)
                               : sample_remainder_sources(prep, n_tilde, 0);

  auto raw = accumulate_sources(prep, sources, SourceWeight::kWithPendants,
                                options.threads);
  if (sampled) {
    const double scale = static_cast<double>(n_tilde) / static_cast<double>(*options.k);
    for (double& x : raw) x *= scale;
  }

  BcResult r;
  r.algorithm = "peel1";
  r.k = sampled ? options.k : std::nullopt;
  r.seed = options.seed;
  r.bc = finish_one_round(prep, raw);
  r.elapsed_seconds = seconds_since(start);
  return r;
}

}  // namespace peelbc
