#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "peelbc/graph.hpp"

namespace peelbc {

enum class Attachment { kLinearSkew, kGeometricHalving };

Attachment parse_attachment(std::string_view name);
std::string_view attachment_name(Attachment a);

// Core of core_size nodes: node 0 is the central node, the rest are split
// into two cliques of floor(core_size/2) and core_size-1-floor(core_size/2)
// nodes, each fully joined to the center. v1_count pendant nodes hang off
// the non-central core nodes according to `attachment`.
struct CorePeripherySpec {
  std::size_t core_size = 50;
  std::size_t v1_count = 0;
  Attachment attachment = Attachment::kLinearSkew;
  std::uint64_t seed = 0;  // permutes which pendant ids go to which core node

  void validate() const;
};

// Pendants per core node (index 0 is the central node and always 0).
std::vector<std::size_t> pendant_schedule(const CorePeripherySpec& spec);

Graph generate_core_periphery(const CorePeripherySpec& spec);

// G(n, p) plus a uniform 0..max_pendants pendant nodes on every base node.
Graph random_graph_with_pendants(std::size_t n, double p, std::size_t max_pendants,
                                 std::mt19937_64& rng);

}  // namespace peelbc
