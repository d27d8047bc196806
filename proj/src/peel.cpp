#include "peelbc/peel.hpp"

#include <algorithm>

namespace peelbc {

PeelDecomposition peel(const Graph& g, std::optional<std::size_t> max_rounds) {
  const auto n = static_cast<NodeId>(g.num_nodes());
  PeelDecomposition p;
  p.removed_in.assign(n, -1);
  p.pendant_anchor.assign(n, kNoNode);
  p.deg1.assign(n, 0);

  std::vector<std::size_t> degree(n);
  std::vector<NodeId> frontier;
  for (NodeId u = 0; u < n; ++u) {
    degree[u] = g.degree(u);
    if (degree[u] == 1) frontier.push_back(u);
  }

  const auto limit = max_rounds.value_or(static_cast<std::size_t>(-1));
  while (!frontier.empty() && p.rounds.size() < limit) {
    const int round = static_cast<int>(p.rounds.size());
    std::sort(frontier.begin(), frontier.end());
    for (NodeId u : frontier) p.removed_in[u] = round;
    // Anchor = the one neighbor still present at the start of this round.
    for (NodeId u : frontier) {
      for (NodeId v : g.neighbors(u)) {
        if (p.removed_in[v] < 0 || p.removed_in[v] == round) {
          p.pendant_anchor[u] = v;
          break;
        }
      }
    }
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      const NodeId a = p.pendant_anchor[u];
      if (p.removed_in[a] == round) continue;  // isolated edge
      if (--degree[a] == 1) next.push_back(a);
    }
    // A node can pass through degree 1 on its way to 0 within one round.
    std::erase_if(next, [&](NodeId a) { return degree[a] != 1; });
    p.rounds.push_back(std::move(frontier));
    frontier = std::move(next);
  }

  for (NodeId u = 0; u < n; ++u) {
    if (p.removed_in[u] < 0) p.core_nodes.push_back(u);
  }
  if (!p.rounds.empty()) {
    for (NodeId u : p.rounds.front()) ++p.deg1[p.pendant_anchor[u]];
  }
  for (NodeId u = 0; u < n; ++u) {
    if (!p.in_first_round(u) && p.deg1[u] > 0) p.y.push_back(u);
  }
  return p;
}

Subgraph first_round_remainder(const Graph& g, const PeelDecomposition& p) {
  std::vector<bool> keep(g.num_nodes());
  for (NodeId u = 0; u < static_cast<NodeId>(g.num_nodes()); ++u) {
    keep[u] = !p.in_first_round(u);
  }
  return induced_subgraph(g, keep);
}

PeelReport peel_diagnostics(const Graph& g) {
  const auto p = peel(g);
  const auto n = g.num_nodes();
  PeelReport r;
  r.n = n;
  r.m = g.num_edges();
  r.v1_count = p.rounds.empty() ? 0 : p.rounds.front().size();
  r.n_tilde = n - r.v1_count;
  r.y_count = p.y.size();
  r.istar = p.istar();
  r.core_size = p.core_nodes.size();

  std::size_t pendant_edges = 0;
  for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
    if (!p.in_first_round(u)) continue;
    // An isolated edge has both endpoints in round 0; count it once.
    const NodeId a = p.pendant_anchor[u];
    if (!p.in_first_round(a) || u < a) ++pendant_edges;
  }
  r.m_tilde = r.m - pendant_edges;

  r.deg1_histogram.assign(1, 0);
  for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
    if (p.in_first_round(u)) continue;
    const auto d = p.deg1[u];
    r.delta1 = std::max(r.delta1, d);
    if (r.deg1_histogram.size() <= d) r.deg1_histogram.resize(d + 1, 0);
    ++r.deg1_histogram[d];
  }
  for (const auto& round : p.rounds) {
    r.round_fractions.push_back(n == 0 ? 0.0
                                       : static_cast<double>(round.size()) /
                                             static_cast<double>(n));
  }
  for (NodeId u : p.core_nodes) {
    std::size_t core_degree = 0;
    for (NodeId v : g.neighbors(u)) core_degree += p.removed_in[v] < 0;
    if (core_degree >= 2) ++r.two_core_size;
  }
  return r;
}

}  // namespace peelbc
