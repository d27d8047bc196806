#include "support/corpus.hpp"

#include <random>

#include "peelbc/synth.hpp"

namespace peelbc::testing {

Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return Graph::from_edges(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  }
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  }
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<NodeId>(i));
  return Graph::from_edges(leaves + 1, e);
}

Graph corpus_graph(std::uint64_t index) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ index);
  std::uniform_int_distribution<std::size_t> size(5, 60);
  std::uniform_real_distribution<double> prob(0.05, 0.3);
  const auto n = size(rng);
  const auto p = prob(rng);
  return random_graph_with_pendants(n, p, 3, rng);
}

double brute_zeta(const PathCounts& pc, std::span<const std::size_t> deg1, NodeId s,
                  NodeId u) {
  double sum = 0.0;
  for (NodeId t = 0; t < static_cast<NodeId>(pc.n); ++t) {
    if (t == s || t == u || pc.count(s, t) == 0) continue;
    sum += static_cast<double>(deg1[t]) * static_cast<double>(pc.count_through(s, t, u)) /
           static_cast<double>(pc.count(s, t));
  }
  return sum;
}

double brute_delta(const PathCounts& pc, NodeId s, NodeId u) {
  double sum = 0.0;
  for (NodeId t = 0; t < static_cast<NodeId>(pc.n); ++t) {
    if (t == s || t == u || pc.count(s, t) == 0) continue;
    sum += static_cast<double>(pc.count_through(s, t, u)) /
           static_cast<double>(pc.count(s, t));
  }
  return sum;
}

}  // namespace peelbc::testing
