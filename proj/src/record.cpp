#include "peelbc/record.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace peelbc {
namespace {

std::string join_fractions(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += format_score(xs[i]);
  }
  return out;
}

// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_score(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string RunRecord::csv_header() {
  return "dataset,algorithm,n,m,n_tilde,m_tilde,k,seed,elapsed_seconds,rel_l1,"
         "round_fractions";
}

std::string RunRecord::csv_row() const {
  std::string row = csv_field(dataset) + ',' + csv_field(algorithm) + ',' +
                    std::to_string(n) + ',' + std::to_string(m) + ',' +
                    std::to_string(n_tilde) + ',' + std::to_string(m_tilde) + ',';
  row += k ? std::to_string(*k) : "";
  row += ',' + std::to_string(seed) + ',';
  row += elapsed_seconds ? format_score(*elapsed_seconds) : "";
  row += ',';
  row += rel_l1 ? format_score(*rel_l1) : "";
  row += ',' + join_fractions(round_fractions);
  return row;
}

nlohmann::ordered_json RunRecord::to_json() const {
  nlohmann::ordered_json j;
  j["dataset"] = dataset;
  j["algorithm"] = algorithm;
  j["n"] = n;
  j["m"] = m;
  j["n_tilde"] = n_tilde;
  j["m_tilde"] = m_tilde;
  j["k"] = k ? nlohmann::ordered_json(*k) : nlohmann::ordered_json(nullptr);
  j["seed"] = seed;
  if (elapsed_seconds) j["elapsed_seconds"] = *elapsed_seconds;
  if (rel_l1) j["rel_l1"] = *rel_l1;
  j["round_fractions"] = round_fractions;
  return j;
}

RunRecord RunRecord::from_json(const nlohmann::ordered_json& j) {
  RunRecord r;
  r.dataset = j.at("dataset").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.n_tilde = j.at("n_tilde").get<std::size_t>();
  r.m_tilde = j.at("m_tilde").get<std::size_t>();
  if (!j.at("k").is_null()) r.k = j.at("k").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("elapsed_seconds")) r.elapsed_seconds = j["elapsed_seconds"].get<double>();
  if (j.contains("rel_l1")) r.rel_l1 = j["rel_l1"].get<double>();
  r.round_fractions = j.at("round_fractions").get<std::vector<double>>();
  return r;
}

std::vector<NodeId> label_order(const Graph& g) {
  const auto n = g.num_nodes();
  std::vector<NodeId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);

  std::vector<long long> numeric(n);
  bool all_numeric = true;
  for (std::size_t i = 0; i < n && all_numeric; ++i) {
    const auto& s = g.label(static_cast<NodeId>(i));
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), numeric[i]);
    all_numeric = ec == std::errc{} && ptr == s.data() + s.size();
  }
  if (all_numeric) {
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return numeric[a] < numeric[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return g.label(a) < g.label(b); });
  }
  return order;
}

void write_scores_csv(const Graph& g, const BcResult& r, std::ostream& out) {
  out << "node,bc\n";
  for (NodeId u : label_order(g)) {
    out << csv_field(g.label(u)) << ',' << format_score(r.bc[u]) << '\n';
  }
}

nlohmann::ordered_json scores_json(const Graph& g, const BcResult& r,
                                   const RunRecord& record) {
  nlohmann::ordered_json j;
  j["run"] = record.to_json();
  auto& scores = j["scores"] = nlohmann::ordered_json::array();
  for (NodeId u : label_order(g)) {
    scores.push_back({{"node", g.label(u)}, {"bc", r.bc[u]}});
  }
  return j;
}

BcResult read_scores_csv(const Graph& g, std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  for (NodeId u = 0; u < static_cast<NodeId>(g.num_nodes()); ++u) ids[g.label(u)] = u;

  BcResult r;
  r.algorithm = "file";
  r.bc.assign(g.num_nodes(), 0.0);
  std::vector<bool> seen(g.num_nodes(), false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;  // header
    const auto fields = split_csv(line);
    if (fields.size() != 2) {
      throw std::runtime_error("score file line " + std::to_string(line_no) +
                               ": expected 2 fields");
    }
    auto it = ids.find(fields[0]);
    if (it == ids.end()) {
      throw std::runtime_error("score file names unknown node '" + fields[0] + "'");
    }
    r.bc[it->second] = std::stod(fields[1]);
    seen[it->second] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::runtime_error("score file does not cover every node");
  }
  return r;
}

}  // namespace peelbc
