#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace peelbc {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

using Edge = std::pair<NodeId, NodeId>;

// Immutable undirected simple graph in compressed adjacency form.
//
// Node ids are dense (0..n-1). Every node carries the label it had in the
// input so results can be reported against the original names.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over nodes 0..n-1. Self-loops are dropped, duplicate and
  // reversed edges collapse to one undirected edge. Labels default to the
  // decimal node id when empty.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId u) const {
    const auto begin = static_cast<std::size_t>(offsets_[u]);
    const auto end = static_cast<std::size_t>(offsets_[u + 1]);
    return {neighbors_.data() + begin, end - begin};
  }
  std::size_t degree(NodeId u) const {
    return static_cast<std::size_t>(offsets_[u + 1] - offsets_[u]);
  }
  // Offset of u's first neighbor in the flat adjacency array.
  std::size_t adjacency_offset(NodeId u) const {
    return static_cast<std::size_t>(offsets_[u]);
  }
  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Each undirected edge once, as (u, v) with u < v, in (u, v) order.
  std::vector<Edge> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::int64_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<std::string> labels_;
};

// Graph induced by the nodes with keep[u] set. Local ids follow ascending
// parent id, so adjacency order is preserved when nothing is removed.
struct Subgraph {
  Graph graph;
  std::vector<NodeId> to_parent;
  std::vector<NodeId> from_parent;  // kNoNode for dropped nodes
};

Subgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

// Component id per node (ids assigned in order of smallest member) and the
// size of every component.
struct Components {
  std::vector<NodeId> component;
  std::vector<std::size_t> size;

  std::size_t size_of(NodeId u) const { return size[component[u]]; }
};

Components connected_components(const Graph& g);

}  // namespace peelbc
