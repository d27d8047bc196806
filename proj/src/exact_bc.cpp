#include "peelbc/exact_bc.hpp"

#include <chrono>
#include <iostream>
#include <stdexcept>

#include "peelbc/parallel.hpp"

namespace peelbc {

void sssp_bfs(const Graph& g, NodeId s, SsspTree& tree) {
  const auto n = g.num_nodes();
  if (s < 0 || static_cast<std::size_t>(s) >= n) {
    throw std::out_of_range("source " + std::to_string(s) + " not in graph");
  }
  if (tree.pred_begin.size() != n || tree.pred_buffer.size() != 2 * g.num_edges()) {
    tree.pred_begin.resize(n);
    for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
      tree.pred_begin[u] = g.adjacency_offset(u);
    }
    tree.pred_buffer.resize(2 * g.num_edges());
  }
  tree.source = s;
  tree.dist.assign(n, kUnreachable);
  tree.sigma.assign(n, 0.0);
  tree.pred_count.assign(n, 0);
  tree.order.clear();

  tree.dist[s] = 0;
  tree.sigma[s] = 1.0;
  tree.order.push_back(s);
  for (std::size_t head = 0; head < tree.order.size(); ++head) {
    const NodeId w = tree.order[head];
    const auto next = tree.dist[w] + 1;
    for (NodeId v : g.neighbors(w)) {
      if (tree.dist[v] == kUnreachable) {
        tree.dist[v] = next;
        tree.order.push_back(v);
      }
      if (tree.dist[v] == next) {
        tree.sigma[v] += tree.sigma[w];
        tree.pred_buffer[tree.pred_begin[v] + tree.pred_count[v]++] = w;
      }
    }
  }
}

SsspTree sssp_bfs(const Graph& g, NodeId s) {
  SsspTree tree;
  sssp_bfs(g, s, tree);
  return tree;
}

double bc_normalizer(std::size_t n) {
  if (n <= 2) return 0.0;
  return static_cast<double>(n - 1) * static_cast<double>(n - 2);
}

namespace {

void accumulate_dependencies(const SsspTree& tree, std::span<double> delta) {
  std::fill(delta.begin(), delta.end(), 0.0);
  for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
    const NodeId w = *it;
    const double coeff = (1.0 + delta[w]) / tree.sigma[w];
    for (NodeId v : tree.preds(w)) {
      if (v != tree.source) delta[v] += tree.sigma[v] * coeff;
    }
  }
}

}  // namespace

std::vector<double> source_dependencies(const SsspTree& tree) {
  std::vector<double> delta(tree.dist.size());
  accumulate_dependencies(tree, delta);
  return delta;
}

BcResult brandes_exact(const Graph& g, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const auto n = g.num_nodes();
  auto make_worker = [&g, n] {
    return [&g, tree = SsspTree{}, delta = std::vector<double>(n)](
               std::size_t i, std::span<double> acc) mutable {
      const auto s = static_cast<NodeId>(i);
      sssp_bfs(g, s, tree);
      accumulate_dependencies(tree, delta);
      for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
        if (*it != s) acc[*it] += delta[*it];
      }
    };
  };
  auto raw = reduce_over_sources(n, n, threads, make_worker);

  BcResult r;
  r.algorithm = "brandes";
  const double norm = bc_normalizer(n);
  r.bc.assign(n, 0.0);
  if (norm > 0.0) {
    for (std::size_t v = 0; v < n; ++v) r.bc[v] = raw[v] / norm;
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::uint64_t PathCounts::count_through(NodeId s, NodeId t, NodeId u) const {
  const auto su = d(s, u);
  const auto ut = d(u, t);
  const auto st = d(s, t);
  if (su == kUnreachable || ut == kUnreachable || st == kUnreachable) return 0;
  if (su + ut != st) return 0;
  return count(s, u) * count(u, t);
}

PathCounts oracle_sigma(const Graph& g) {
  const auto n = g.num_nodes();
  PathCounts pc;
  pc.n = n;
  pc.dist.assign(n * n, kUnreachable);
  pc.sigma.assign(n * n, 0);
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < static_cast<NodeId>(n); ++s) {
    auto* dist = pc.dist.data() + s * n;
    auto* sigma = pc.sigma.data() + s * n;
    queue.assign(1, s);
    dist[s] = 0;
    sigma[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId w = queue[head];
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[w] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[w] + 1) sigma[v] += sigma[w];
      }
    }
  }
  return pc;
}

BcResult oracle_bc(const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  const auto n = static_cast<NodeId>(g.num_nodes());
  if (static_cast<std::size_t>(n) > kOracleSizeHint) {
    std::clog << "warning: oracle_bc on " << n
              << " nodes is cubic and may be very slow\n";
  }
  const auto pc = oracle_sigma(g);
  BcResult r;
  r.algorithm = "oracle";
  r.bc.assign(n, 0.0);
  const double norm = bc_normalizer(n);
  for (NodeId u = 0; u < n; ++u) {
    double sum = 0.0;
    for (NodeId s = 0; s < n; ++s) {
      if (s == u) continue;
      for (NodeId t = 0; t < n; ++t) {
        if (t == s || t == u || pc.count(s, t) == 0) continue;
        sum += static_cast<double>(pc.count_through(s, t, u)) /
               static_cast<double>(pc.count(s, t));
      }
    }
    r.bc[u] = norm > 0.0 ? sum / norm : 0.0;
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace peelbc
