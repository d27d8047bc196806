#include "peelbc/synth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace peelbc {

Attachment parse_attachment(std::string_view name) {
  if (name == "linear" || name == "linear-skew") return Attachment::kLinearSkew;
  if (name == "geometric" || name == "geometric-halving") {
    return Attachment::kGeometricHalving;
  }
  throw std::invalid_argument("unknown attachment '" + std::string(name) + "'");
}

std::string_view attachment_name(Attachment a) {
  return a == Attachment::kLinearSkew ? "linear-skew" : "geometric-halving";
}

void CorePeripherySpec::validate() const {
  if (core_size < 3) throw std::invalid_argument("core_size must be at least 3");
}

std::vector<std::size_t> pendant_schedule(const CorePeripherySpec& spec) {
  spec.validate();
  const std::size_t core = spec.core_size;
  std::vector<std::size_t> share(core, 0);
  if (spec.v1_count == 0) return share;

  if (spec.attachment == Attachment::kLinearSkew) {
    // Rank j gets a share proportional to core - j; the rounding remainder
    // goes round-robin from rank 1.
    const std::size_t total_weight = core * (core - 1) / 2;
    std::size_t assigned = 0;
    for (std::size_t j = 1; j < core; ++j) {
      share[j] = spec.v1_count * (core - j) / total_weight;
      assigned += share[j];
    }
    for (std::size_t j = 1; assigned < spec.v1_count; j = j % (core - 1) + 1) {
      ++share[j];
      ++assigned;
    }
    return share;
  }

  // Node i gets floor(v1 / 2^(i+1)) until that drops to zero or the nodes
  // run out; the remainder goes to the next node in line.
  std::size_t remaining = spec.v1_count;
  for (std::size_t i = 1; i < core && remaining > 0; ++i) {
    const std::size_t want = i + 1 < 64 ? spec.v1_count >> (i + 1) : 0;
    if (want == 0 || want > remaining || i + 1 == core) {
      share[i] = remaining;
      remaining = 0;
    } else {
      share[i] = want;
      remaining -= want;
    }
  }
  return share;
}

Graph generate_core_periphery(const CorePeripherySpec& spec) {
  const auto share = pendant_schedule(spec);
  const std::size_t core = spec.core_size;
  const std::size_t first_half = core / 2;
  std::vector<Edge> edges;

  auto clique = [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = a + 1; b < end; ++b) {
        edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
      }
    }
  };
  for (std::size_t v = 1; v < core; ++v) edges.emplace_back(0, static_cast<NodeId>(v));
  clique(1, 1 + first_half);
  clique(1 + first_half, core);

  std::vector<NodeId> pendant_ids(spec.v1_count);
  std::iota(pendant_ids.begin(), pendant_ids.end(), static_cast<NodeId>(core));
  std::mt19937_64 rng(spec.seed);
  std::shuffle(pendant_ids.begin(), pendant_ids.end(), rng);
  std::size_t next = 0;
  for (std::size_t v = 1; v < core; ++v) {
    for (std::size_t j = 0; j < share[v]; ++j) {
      edges.emplace_back(static_cast<NodeId>(v), pendant_ids[next++]);
    }
  }
  return Graph::from_edges(core + spec.v1_count, edges);
}

Graph random_graph_with_pendants(std::size_t n, double p, std::size_t max_pendants,
                                 std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<std::size_t> pendants(0, max_pendants);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }
  }
  std::size_t total = n;
  for (std::size_t a = 0; a < n; ++a) {
    const auto count = pendants(rng);
    for (std::size_t j = 0; j < count; ++j) {
      edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(total++));
    }
  }
  return Graph::from_edges(total, edges);
}

}  // namespace peelbc
