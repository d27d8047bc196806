#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "peelbc/exact_bc.hpp"
#include "peelbc/graph.hpp"
#include "peelbc/peel.hpp"

namespace peelbc {

// delta_s(.) and zeta_s(.) for one source of the peeled graph, indexed by
// the tree's node ids. zeta_s(u) is the dependency of s on u weighted by the
// number of degree-1 neighbors each target had before peeling.
struct DependencyRows {
  std::vector<double> delta;
  std::vector<double> zeta;
};

// deg1 is indexed by the tree's node ids.
DependencyRows accumulate_delta_zeta(const SsspTree& tree,
                                     std::span<const std::size_t> deg1);

// Everything the one-round algorithms need after the first peeling round.
struct OneRoundPeel {
  PeelDecomposition peel;
  Subgraph remainder;                  // G with round-0 nodes removed
  std::vector<std::size_t> deg1_local;  // deg1 per remainder node
  Components components;               // of the input graph

  std::size_t n() const { return peel.removed_in.size(); }
  std::size_t n_tilde() const { return remainder.to_parent.size(); }
};

OneRoundPeel prepare_one_round(const Graph& g);

enum class SourceWeight {
  kUnit,            // 1
  kWithPendants,    // 1 + deg1(s): s and its removed neighbors
  kPendantsOnly,    // deg1(s)
};

// Sum over the given remainder sources of weight(s) * (delta_s + zeta_s),
// indexed by remainder ids. Sources are remainder ids.
std::vector<double> accumulate_sources(const OneRoundPeel& prep,
                                       std::span<const NodeId> sources,
                                       SourceWeight weight, unsigned threads);

// Adds the closed-form pendant terms to raw (remainder ids) and returns
// normalized scores over the full node set.
std::vector<double> finish_one_round(const OneRoundPeel& prep,
                                     std::span<const double> raw);

// k remainder nodes chosen uniformly without replacement, ascending.
std::vector<NodeId> sample_remainder_sources(const OneRoundPeel& prep,
                                             std::size_t k, std::uint64_t seed);

// Dense delta/zeta tables of the full-information algorithm. Columns exist
// only for nodes that survive the first round.
class DeltaZetaTable {
 public:
  DeltaZetaTable() = default;
  DeltaZetaTable(std::size_t n, std::vector<NodeId> columns);

  std::size_t num_rows() const { return rows_; }
  std::size_t num_columns() const { return columns_.size(); }
  const std::vector<NodeId>& columns() const { return columns_; }
  bool has_column(NodeId u) const { return column_of_[u] != kNoNode; }

  // 0 for columns that are not stored.
  double delta(NodeId s, NodeId u) const;
  // 0 unless both s and u survive the first round.
  double zeta(NodeId s, NodeId u) const;

  double& delta_at(NodeId s, std::size_t col) {
    return delta_[static_cast<std::size_t>(s) * columns_.size() + col];
  }
  double& zeta_at(std::size_t row, std::size_t col) {
    return zeta_[row * columns_.size() + col];
  }
  std::size_t column_index(NodeId u) const {
    return static_cast<std::size_t>(column_of_[u]);
  }

 private:
  std::size_t rows_ = 0;
  std::vector<NodeId> columns_;
  std::vector<NodeId> column_of_;
  std::vector<double> delta_;  // rows: every node, columns: survivors
  std::vector<double> zeta_;   // rows and columns: survivors
};

class MemoryCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OneRoundOptions {
  std::optional<std::size_t> k;  // pivots; empty for exact
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // Upper bound on delta/zeta table bytes for the full-information variant.
  std::size_t table_memory_cap = std::size_t{2} << 30;
};

struct FullInfoResult {
  BcResult result;
  DeltaZetaTable table;
};

// Throws std::invalid_argument for k == 0 and MemoryCapExceeded when the
// tables would not fit under options.table_memory_cap.
FullInfoResult bc_one_round_full(const Graph& g, const OneRoundOptions& options = {});

// Same scores as bc_one_round_full with O(n) working memory.
BcResult bc_one_round_mem(const Graph& g, const OneRoundOptions& options = {});

// Per-round state of the multi-round recurrence: the nodes of G_i (ascending
// ids) and their all-pairs counts built by extending G_{i+1}'s.
struct RoundPaths {
  std::vector<NodeId> nodes;
  PathCounts paths;  // indexed by position in nodes
};

struct RecurrenceResult {
  BcResult result;
  std::vector<RoundPaths> rounds;  // rounds[i] describes G_i, i = 0..i*
};

// Exact BC by all-pairs counting on the 2-core followed by round-by-round
// extension back to G. Cubic in the core size; for testing and small inputs.
RecurrenceResult two_core_recurrence(const Graph& g, bool keep_rounds = false);

BcResult bc_via_2core_recurrence(const Graph& g);

}  // namespace peelbc
