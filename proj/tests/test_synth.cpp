#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "peelbc/exact_bc.hpp"
#include "peelbc/peel.hpp"
#include "peelbc/synth.hpp"

using namespace peelbc;

TEST_CASE("attachment names") {
  CHECK(parse_attachment("linear") == Attachment::kLinearSkew);
  CHECK(parse_attachment("geometric-halving") == Attachment::kGeometricHalving);
  CHECK(parse_attachment(attachment_name(Attachment::kGeometricHalving)) ==
        Attachment::kGeometricHalving);
  CHECK_THROWS_AS((void)parse_attachment("uniform"), std::invalid_argument);
}

TEST_CASE("geometric schedule for 100 pendants") {
  const auto s = pendant_schedule({50, 100, Attachment::kGeometricHalving, 0});
  REQUIRE(s.size() == 50);
  CHECK(s[0] == 0);
  CHECK(std::vector<std::size_t>(s.begin() + 1, s.begin() + 7) ==
        std::vector<std::size_t>{25, 12, 6, 3, 1, 53});
  CHECK(std::all_of(s.begin() + 7, s.end(), [](std::size_t x) { return x == 0; }));
  CHECK(std::accumulate(s.begin(), s.end(), std::size_t{0}) == 100);
}

TEST_CASE("linear schedule decreases and sums to v1") {
  for (std::size_t v1 : {0, 1, 7, 100, 3000}) {
    const auto s = pendant_schedule({50, v1, Attachment::kLinearSkew, 0});
    CHECK(s[0] == 0);
    CHECK(std::accumulate(s.begin(), s.end(), std::size_t{0}) == v1);
    for (std::size_t j = 2; j < s.size(); ++j) CHECK(s[j] <= s[j - 1] + 1);
  }
  // Shares proportional to core - j: node 1 gets 49/1225 of 3000.
  const auto s = pendant_schedule({50, 3000, Attachment::kLinearSkew, 0});
  CHECK(s[1] >= 120);
  CHECK(s[1] <= 121);
  CHECK(s[49] <= 3);
}

TEST_CASE("core-periphery shape") {
  const Graph g = generate_core_periphery({50, 3000, Attachment::kLinearSkew, 1});
  CHECK(g.num_nodes() == 3050);
  const std::size_t a = 24;  // floor(49 / 2) non-central nodes in the first clique
  const std::size_t b = 25;
  CHECK(g.num_edges() == 49 + a * (a - 1) / 2 + b * (b - 1) / 2 + 3000);
  for (NodeId u = 50; u < 3050; ++u) CHECK(g.degree(u) == 1);
  CHECK(g.degree(0) == 49);

  const auto p = peel(g);
  CHECK(p.istar() == 1);
  CHECK(p.rounds[0].size() == 3000);
  CHECK(p.core_nodes.size() == 50);
  for (NodeId u = 0; u < 50; ++u) CHECK(p.survives(u, 1));
}

TEST_CASE("central node has the strictly largest score") {
  for (std::size_t v1 : {0, 100, 3000}) {
    const Graph g = generate_core_periphery({50, v1, Attachment::kLinearSkew, 2});
    const auto bc = brandes_exact(g, 0).bc;
    for (std::size_t u = 1; u < bc.size(); ++u) CHECK(bc[u] < bc[0]);
  }
  // Halving hangs a quarter of the periphery on node 1, which then outranks
  // the center.
  const Graph g = generate_core_periphery({50, 3000, Attachment::kGeometricHalving, 2});
  const auto bc = brandes_exact(g, 0).bc;
  CHECK(std::max_element(bc.begin(), bc.end()) - bc.begin() != 0);
}

TEST_CASE("odd and small cores") {
  const Graph g = generate_core_periphery({3, 4, Attachment::kLinearSkew, 0});
  CHECK(g.num_nodes() == 7);
  CHECK(g.num_edges() == 2 + 4);
  const Graph h = generate_core_periphery({7, 0, Attachment::kGeometricHalving, 0});
  CHECK(h.num_edges() == 6 + 3 + 3);
  CHECK_THROWS_AS((void)generate_core_periphery({2, 5, Attachment::kLinearSkew, 0}),
                  std::invalid_argument);
}

TEST_CASE("same spec and seed give the same graph") {
  const CorePeripherySpec spec{50, 500, Attachment::kGeometricHalving, 9};
  CHECK(generate_core_periphery(spec) == generate_core_periphery(spec));
  auto other = spec;
  other.seed = 10;
  const Graph a = generate_core_periphery(spec);
  const Graph b = generate_core_periphery(other);
  CHECK(a.num_edges() == b.num_edges());
  CHECK_FALSE(a.edge_list() == b.edge_list());
}
