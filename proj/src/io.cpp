#include "peelbc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace peelbc {
namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#' || c == '%';
  }
  return true;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(std::move(tok));
  return tokens;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::int64_t parse_index(const std::string& tok, std::size_t line_no) {
  std::int64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  }
  return value;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto tokens = split_tokens(line);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 tokens, found " +
                                    std::to_string(tokens.size()));
    }
    const NodeId u = intern(tokens[0]);
    const NodeId v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  const auto n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw FormatError("empty MatrixMarket input");
  ++line_no;
  const auto header = split_tokens(lower(line));
  if (header.size() < 5 || header[0] != "%%matrixmarket" ||
      header[1] != "matrix") {
    throw FormatError("missing '%%MatrixMarket matrix' header");
  }
  if (header[2] != "coordinate") {
    throw FormatError("unsupported MatrixMarket format '" + header[2] + "'");
  }
  const std::string& field = header[3];
  if (field != "pattern" && field != "integer" && field != "real") {
    throw FormatError("unsupported MatrixMarket field '" + field + "'");
  }
  const std::string& symmetry = header[4];
  if (symmetry != "general" && symmetry != "symmetric") {
    throw FormatError("unsupported MatrixMarket symmetry '" + symmetry + "'");
  }

  // Size line follows the comment block.
  std::int64_t rows = -1, cols = -1, entries = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto tokens = split_tokens(line);
    if (tokens.size() != 3) throw ParseError(line_no, "malformed size line");
    rows = parse_index(tokens[0], line_no);
    cols = parse_index(tokens[1], line_no);
    entries = parse_index(tokens[2], line_no);
    break;
  }
  if (rows < 0 || cols < 0 || entries < 0) {
    throw FormatError("missing MatrixMarket size line");
  }

  const std::int64_t n = std::max(rows, cols);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(entries));
  const std::size_t value_tokens = field == "pattern" ? 0 : 1;
  std::int64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto tokens = split_tokens(line);
    if (tokens.size() != 2 + value_tokens) {
      throw ParseError(line_no, "expected " + std::to_string(2 + value_tokens) +
                                    " tokens, found " +
                                    std::to_string(tokens.size()));
    }
    const auto r = parse_index(tokens[0], line_no);
    const auto c = parse_index(tokens[1], line_no);
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw ParseError(line_no, "index (" + tokens[0] + ", " + tokens[1] +
                                    ") outside declared size");
    }
    edges.emplace_back(static_cast<NodeId>(r - 1), static_cast<NodeId>(c - 1));
    ++seen;
  }
  if (seen != entries) {
    throw ParseError(line_no, "declared " + std::to_string(entries) +
                                  " entries, found " + std::to_string(seen));
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Graph::from_edges(static_cast<std::size_t>(n), edges,
                           std::move(labels));
}

Graph load_graph_file(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  if (format == InputFormat::kAuto) {
    format = lower(path.extension().string()) == ".mtx"
                 ? InputFormat::kMatrixMarket
                 : InputFormat::kEdgeList;
  }
  return format == InputFormat::kMatrixMarket ? load_matrix_market(in)
                                              : load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  const auto n = static_cast<NodeId>(g.num_nodes());
  NodeId next = 0;  // smallest id not yet written
  auto declare_until = [&](NodeId stop) {
    for (; next < stop; ++next) {
      out << g.label(next) << ' ' << g.label(next) << '\n';
    }
  };
  for (auto [u, v] : g.edge_list()) {
    // New ids in this line must be exactly next, next+1, ... in line order.
    const bool u_new = u >= next;
    const bool v_new = v >= next;
    bool in_order = true;
    if (u_new) {
      in_order = u == next && (!v_new || v == next + 1);
    } else if (v_new) {
      in_order = v == next;
    }
    if (!in_order) declare_until(v);
    out << g.label(u) << ' ' << g.label(v) << '\n';
    next = std::max(next, static_cast<NodeId>(v + 1));
  }
  declare_until(n);
}

}  // namespace peelbc
