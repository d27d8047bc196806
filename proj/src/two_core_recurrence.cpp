#include <algorithm>
#include <chrono>

#include "peelbc/peel_bc.hpp"

namespace peelbc {
namespace {

Graph induced_on(const Graph& g, const std::vector<NodeId>& nodes) {
  std::vector<bool> keep(g.num_nodes(), false);
  for (NodeId u : nodes) keep[u] = true;
  return induced_subgraph(g, keep).graph;
}

double ratio(const PathCounts& pc, NodeId s, NodeId t, NodeId u) {
  const auto total = pc.count(s, t);
  if (total == 0) return 0.0;
  return static_cast<double>(pc.count_through(s, t, u)) / static_cast<double>(total);
}

// Sum of pair dependencies on u over ordered pairs of G (u excluded).
double pair_dependency_sum(const PathCounts& pc, NodeId u) {
  const auto n = static_cast<NodeId>(pc.n);
  double sum = 0.0;
  for (NodeId s = 0; s < n; ++s) {
    if (s == u) continue;
    for (NodeId t = 0; t < n; ++t) {
      if (t != s && t != u) sum += ratio(pc, s, t, u);
    }
  }
  return sum;
}

}  // namespace

RecurrenceResult two_core_recurrence(const Graph& g, bool keep_rounds) {
  const auto start = std::chrono::steady_clock::now();
  const auto n = g.num_nodes();
  const auto p = peel(g);
  const auto istar = p.istar();

  RecurrenceResult out;
  if (keep_rounds) out.rounds.resize(istar + 1);

  // State for G_{i+1}: its nodes and all-pairs counts (local positions).
  std::vector<NodeId> nodes = p.core_nodes;
  PathCounts paths = oracle_sigma(induced_on(g, nodes));
  std::vector<NodeId> position(n, kNoNode);
  auto reindex = [&] {
    std::fill(position.begin(), position.end(), kNoNode);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      position[nodes[i]] = static_cast<NodeId>(i);
    }
  };
  reindex();

  // Unnormalized scores: bc^{(i)}(u) * (n_i - 1)(n_i - 2).
  std::vector<double> scaled(n, 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    scaled[nodes[i]] = pair_dependency_sum(paths, static_cast<NodeId>(i));
  }
  if (keep_rounds) out.rounds[istar] = {nodes, paths};

  for (std::size_t round = istar; round-- > 0;) {
    const auto& removed = p.rounds[round];

    // Removed-neighbor counts within G_round, over G_{round+1} positions.
    std::vector<double> deg(nodes.size(), 0.0);
    for (NodeId t : removed) {
      const NodeId y = p.pendant_anchor[t];
      if (position[y] != kNoNode) deg[position[y]] += 1.0;
    }
    std::vector<NodeId> y_set;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (deg[i] > 0.0) y_set.push_back(static_cast<NodeId>(i));
    }

    std::vector<NodeId> next_nodes = nodes;
    next_nodes.insert(next_nodes.end(), removed.begin(), removed.end());
    std::sort(next_nodes.begin(), next_nodes.end());
    const Graph g_round = induced_on(g, next_nodes);
    const auto comps = connected_components(g_round);
    std::vector<NodeId> next_position(n, kNoNode);
    for (std::size_t i = 0; i < next_nodes.size(); ++i) {
      next_position[next_nodes[i]] = static_cast<NodeId>(i);
    }

    for (std::size_t ui = 0; ui < nodes.size(); ++ui) {
      const auto u = static_cast<NodeId>(ui);
      const double d = deg[ui];
      // Component size stands in for n_i so unreachable pairs count zero.
      const auto c = static_cast<double>(comps.size_of(next_position[nodes[ui]]));
      double extra = d * (d - 1.0) + 2.0 * d * (c - d - 1.0);

      // One endpoint removed and hanging off y' != u, the other a survivor.
      double mixed = 0.0;
      for (NodeId y = 0; y < static_cast<NodeId>(nodes.size()); ++y) {
        if (y == u) continue;
        for (NodeId yp : y_set) {
          if (yp == y || yp == u) continue;
          mixed += deg[yp] * ratio(paths, y, yp, u);
        }
      }
      // Both endpoints removed, hanging off distinct y, y' != u.
      double both = 0.0;
      for (NodeId y : y_set) {
        if (y == u) continue;
        for (NodeId yp : y_set) {
          if (yp == y || yp == u) continue;
          both += deg[y] * deg[yp] * ratio(paths, y, yp, u);
        }
      }
      scaled[nodes[ui]] += extra + 2.0 * mixed + both;
    }

    // Extend counts to G_round: a removed node reaches everything through
    // its anchor, one hop further away.
    const auto m = next_nodes.size();
    PathCounts ext;
    ext.n = m;
    ext.dist.assign(m * m, kUnreachable);
    ext.sigma.assign(m * m, 0);
    std::vector<NodeId> base(m, kNoNode);
    std::vector<std::int32_t> hop(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const NodeId v = next_nodes[i];
      if (position[v] != kNoNode) {
        base[i] = position[v];
      } else if (position[p.pendant_anchor[v]] != kNoNode) {
        base[i] = position[p.pendant_anchor[v]];
        hop[i] = 1;
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::int32_t dist = kUnreachable;
        std::uint64_t count = 0;
        if (a == b) {
          dist = 0;
          count = 1;
        } else if (base[a] == kNoNode || base[b] == kNoNode) {
          // Isolated edge removed whole: only its two ends see each other.
          if (p.pendant_anchor[next_nodes[a]] == next_nodes[b] &&
              p.pendant_anchor[next_nodes[b]] == next_nodes[a]) {
            dist = 1;
            count = 1;
          }
        } else if (paths.d(base[a], base[b]) != kUnreachable) {
          dist = paths.d(base[a], base[b]) + hop[a] + hop[b];
          count = paths.count(base[a], base[b]);
        }
        ext.dist[a * m + b] = dist;
        ext.sigma[a * m + b] = count;
      }
    }

    nodes = std::move(next_nodes);
    paths = std::move(ext);
    reindex();
    if (keep_rounds) out.rounds[round] = {nodes, paths};
  }

  BcResult& r = out.result;
  r.algorithm = "2core-recurrence";
  r.bc.assign(n, 0.0);
  const double norm = bc_normalizer(n);
  if (norm > 0.0) {
    for (std::size_t u = 0; u < n; ++u) r.bc[u] = scaled[u] / norm;
  }
  r.elapsed_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return out;
}

BcResult bc_via_2core_recurrence(const Graph& g) {
  return two_core_recurrence(g, false).result;
}

}  // namespace peelbc
