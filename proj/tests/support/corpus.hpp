#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "peelbc/exact_bc.hpp"
#include "peelbc/graph.hpp"

namespace peelbc::testing {

Graph make_graph(std::size_t n, std::initializer_list<Edge> edges);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center is node 0

// Graph number `index` of the seeded oracle corpus: G(n, p) with
// n in [5, 60], p in [0.05, 0.3], then 0..3 pendants on every node.
Graph corpus_graph(std::uint64_t index);

// zeta_s(u) straight from its definition on the peeled graph:
// sum over targets t != s, u of deg1(t) * sigma_st(u) / sigma_st.
double brute_zeta(const PathCounts& pc, std::span<const std::size_t> deg1, NodeId s,
                  NodeId u);

// delta_s(u) straight from its definition.
double brute_delta(const PathCounts& pc, NodeId s, NodeId u);

}  // namespace peelbc::testing
