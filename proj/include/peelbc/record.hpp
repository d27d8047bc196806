#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "peelbc/exact_bc.hpp"
#include "peelbc/graph.hpp"

namespace peelbc {

// Metadata of one computation, written next to scores and in bench tables.
struct RunRecord {
  std::string dataset;
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t n_tilde = 0;
  std::size_t m_tilde = 0;
  std::optional<std::size_t> k;  // empty for exact runs
  std::uint64_t seed = 0;
  std::optional<double> elapsed_seconds;
  std::optional<double> rel_l1;
  std::vector<double> round_fractions;

  static std::string csv_header();
  std::string csv_row() const;
  nlohmann::ordered_json to_json() const;
  static RunRecord from_json(const nlohmann::ordered_json& j);

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// RFC-4180 quoting: wraps fields containing ',', '"' or newlines.
std::string csv_field(const std::string& s);

// printf("%.12g").
std::string format_score(double x);

// Node ids ordered by label: numerically when every label is an integer,
// lexicographically otherwise.
std::vector<NodeId> label_order(const Graph& g);

// "node,bc" header then one row per node in label order.
void write_scores_csv(const Graph& g, const BcResult& r, std::ostream& out);

nlohmann::ordered_json scores_json(const Graph& g, const BcResult& r,
                                   const RunRecord& record);

// Reads a "node,bc" file written for g back into per-id scores.
// Throws std::runtime_error if a label is missing or unknown.
BcResult read_scores_csv(const Graph& g, std::istream& in);

}  // namespace peelbc
