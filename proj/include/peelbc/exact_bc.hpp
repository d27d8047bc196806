#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peelbc/graph.hpp"

namespace peelbc {

inline constexpr std::int32_t kUnreachable = -1;

// Shortest-path DAG of one BFS.
//
// Predecessors of w are stored in the slice of a flat buffer that mirrors
// w's adjacency range, so a tree can be refilled for another source without
// reallocating.
struct SsspTree {
  NodeId source = kNoNode;
  std::vector<std::int32_t> dist;
  std::vector<double> sigma;
  std::vector<NodeId> order;  // BFS visit order; pop from the back

  std::span<const NodeId> preds(NodeId w) const {
    return {pred_buffer.data() + pred_begin[w], pred_count[w]};
  }

  std::vector<std::size_t> pred_begin;
  std::vector<std::uint32_t> pred_count;
  std::vector<NodeId> pred_buffer;
};

// Throws std::out_of_range for an invalid source.
SsspTree sssp_bfs(const Graph& g, NodeId s);
// Refills tree in place.
void sssp_bfs(const Graph& g, NodeId s, SsspTree& tree);

struct BcResult {
  std::vector<double> bc;
  std::string algorithm;
  std::optional<std::size_t> k;  // empty for exact runs
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
};

// Ordered-pair normalizer (n-1)(n-2); zero for n <= 2.
double bc_normalizer(std::size_t n);

// threads == 0 uses the hardware concurrency. Results do not depend on the
// thread count.
BcResult brandes_exact(const Graph& g, unsigned threads = 1);

// Per-source dependencies delta_s(.) of one tree (Brandes' accumulation).
std::vector<double> source_dependencies(const SsspTree& tree);

// All-pairs hop distances and shortest-path counts by BFS from every node.
struct PathCounts {
  std::size_t n = 0;
  std::vector<std::int32_t> dist;
  std::vector<std::uint64_t> sigma;

  std::int32_t d(NodeId s, NodeId t) const { return dist[s * n + t]; }
  std::uint64_t count(NodeId s, NodeId t) const { return sigma[s * n + t]; }
  // Shortest s-t paths through u (0 unless u lies on one).
  std::uint64_t count_through(NodeId s, NodeId t, NodeId u) const;
};

inline constexpr std::size_t kOracleSizeHint = 500;

PathCounts oracle_sigma(const Graph& g);

// Brute-force BC straight from the pair-dependency definition. Slow; prints
// a warning to std::clog above kOracleSizeHint nodes.
BcResult oracle_bc(const Graph& g);

}  // namespace peelbc
