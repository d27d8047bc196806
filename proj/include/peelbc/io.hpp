#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "peelbc/graph.hpp"

namespace peelbc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whitespace-separated "u v" pairs, one per line; '#' and '%' start comment
// lines. Labels become ids in order of first appearance.
Graph load_edge_list(std::istream& in);

// MatrixMarket coordinate files (pattern/integer/real, general or symmetric).
// Values are ignored; node i (1-based) gets id i-1 and label "i".
Graph load_matrix_market(std::istream& in);

enum class InputFormat { kAuto, kEdgeList, kMatrixMarket };

// Picks the parser from the extension (".mtx" => MatrixMarket) unless a
// format is forced.
Graph load_graph_file(const std::filesystem::path& path,
                      InputFormat format = InputFormat::kAuto);

// One "label label" line per undirected edge. Where edge order alone would
// not reproduce the id order on reload (or a node is isolated), the node is
// declared first by a self-loop line, which the loader drops.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace peelbc
