#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "peelbc/graph.hpp"

namespace peelbc {

// Nested degree-1 peeling G_0 ⊇ G_1 ⊇ ... ⊇ G_{i*}.
//
// Round i removes every node whose degree in G_i is exactly 1. Degree-0
// nodes are never removed. Two nodes forming an isolated edge are removed
// together and anchored to each other.
struct PeelDecomposition {
  std::vector<std::vector<NodeId>> rounds;  // V_1^{(i)}, ascending ids
  std::vector<NodeId> core_nodes;           // nodes of G_{i*}, ascending ids
  // Round in which each node was removed, or -1 for core nodes.
  std::vector<int> removed_in;
  // Unique neighbor at removal time; kNoNode for core nodes.
  std::vector<NodeId> pendant_anchor;
  // Per node: number of neighbors removed in round 0.
  std::vector<std::size_t> deg1;
  // Nodes that survive round 0 and have deg1 >= 1, ascending ids.
  std::vector<NodeId> y;

  std::size_t istar() const { return rounds.size(); }
  bool in_first_round(NodeId u) const { return removed_in[u] == 0; }
  bool survives(NodeId u, std::size_t round) const {
    return removed_in[u] < 0 || static_cast<std::size_t>(removed_in[u]) >= round;
  }
};

// max_rounds limits how many rounds are peeled; the remaining graph is then
// reported as core_nodes even if it still has degree-1 nodes.
PeelDecomposition peel(const Graph& g,
                       std::optional<std::size_t> max_rounds = std::nullopt);

// Nodes remaining after round 0 (the peeled graph used by one-round
// algorithms), with ids mapped to the parent graph.
Subgraph first_round_remainder(const Graph& g, const PeelDecomposition& p);

struct PeelReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t n_tilde = 0;  // nodes after one round
  std::size_t m_tilde = 0;  // edges after one round
  std::size_t v1_count = 0;
  std::size_t y_count = 0;
  std::size_t delta1 = 0;   // max deg1
  // deg1_histogram[d] = number of surviving nodes with exactly d
  // degree-1 neighbors.
  std::vector<std::size_t> deg1_histogram;
  std::vector<double> round_fractions;  // |V_1^{(i)}| / n
  std::size_t istar = 0;
  std::size_t core_size = 0;         // nodes of G_{i*}, isolated included
  std::size_t two_core_size = 0;     // nodes of G_{i*} with degree >= 2
};

PeelReport peel_diagnostics(const Graph& g);

}  // namespace peelbc
