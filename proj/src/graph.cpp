#include "peelbc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace peelbc {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != n) {
    throw std::invalid_argument("label count does not match node count");
  }

  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw std::out_of_range("edge endpoint outside node range");
    }
    if (u == v) continue;
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : directed) ++g.offsets_[e.first + 1];
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.reserve(directed.size());
  for (const auto& e : directed) g.neighbors_.push_back(e.second);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < static_cast<NodeId>(num_nodes()); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  const auto n = g.num_nodes();
  Subgraph sub;
  sub.from_parent.assign(n, kNoNode);
  std::vector<std::string> labels;
  for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
    if (!keep[u]) continue;
    sub.from_parent[u] = static_cast<NodeId>(sub.to_parent.size());
    sub.to_parent.push_back(u);
    labels.push_back(g.label(u));
  }
  std::vector<Edge> edges;
  for (NodeId local = 0; local < static_cast<NodeId>(sub.to_parent.size());
       ++local) {
    for (NodeId v : g.neighbors(sub.to_parent[local])) {
      const NodeId w = sub.from_parent[v];
      if (w != kNoNode && local < w) edges.emplace_back(local, w);
    }
  }
  sub.graph = Graph::from_edges(sub.to_parent.size(), edges, std::move(labels));
  return sub;
}

Components connected_components(const Graph& g) {
  const auto n = g.num_nodes();
  Components c;
  c.component.assign(n, kNoNode);
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < static_cast<NodeId>(n); ++root) {
    if (c.component[root] != kNoNode) continue;
    const auto id = static_cast<NodeId>(c.size.size());
    std::size_t count = 0;
    c.component[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      ++count;
      for (NodeId v : g.neighbors(u)) {
        if (c.component[v] == kNoNode) {
          c.component[v] = id;
          stack.push_back(v);
        }
      }
    }
    c.size.push_back(count);
  }
  return c;
}

}  // namespace peelbc
