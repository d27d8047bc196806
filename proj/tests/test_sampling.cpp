#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <map>
#include <stdexcept>
#include <tuple>

#include "peelbc/exact_bc.hpp"
#include "peelbc/peel_bc.hpp"
#include "peelbc/sampling.hpp"
#include "peelbc/synth.hpp"
#include "support/corpus.hpp"

using namespace peelbc;
using namespace peelbc::testing;

namespace {

SampleConfig config(std::size_t k, std::uint64_t seed) {
  SampleConfig c;
  c.k = k;
  c.seed = seed;
  return c;
}

// Independent evaluation of the Bernstein sizing formula.
double bernstein_reference(double n, double nt, double d1, double eps) {
  const double sum_sq = nt * (1 + d1) * (1 + d1) * n * n;
  return std::ceil(std::log(nt) / (eps * eps) * nt *
                   (sum_sq + (1 + d1) * eps * n * n * n / 3) / (n * n * n * n));
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(config(1, 0).validate());
  CHECK_THROWS_AS(config(0, 0).validate(), std::invalid_argument);
  auto c = config(1, 0);
  c.epsilon = 1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.epsilon = 0.5;
  c.delta_conf = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("baseline with every node as pivot is exact") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Graph g = corpus_graph(i);
    const auto est = sample_bc_baseline(g, config(g.num_nodes(), i));
    CHECK(relative_l1_error(est, brandes_exact(g)).max_abs <= 1e-12);
    CHECK(est.algorithm == "baseline");
    CHECK(est.k == g.num_nodes());
  }
  CHECK_THROWS_AS((void)sample_bc_baseline(path_graph(3), config(4, 0)),
                  std::invalid_argument);
}

TEST_CASE("baseline on K_{1,4} with one pivot") {
  const Graph g = star_graph(4);
  bool saw_center = false;
  bool saw_leaf = false;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const double c = sample_bc_baseline(g, config(1, seed)).bc[0];
    if (c == 0.0) {
      saw_center = true;  // the center as source puts no mass on itself
    } else {
      saw_leaf = true;    // a leaf as source: (n/k) * 3 / 12
      CHECK(c == doctest::Approx(5.0 * 3.0 / 12.0));
    }
  }
  CHECK(saw_center);
  CHECK(saw_leaf);
}

TEST_CASE("peeled estimator on a star is exact with one pivot") {
  const auto est = sample_bc_peeled(star_graph(4), config(1, 3));
  CHECK(est.bc[0] == doctest::Approx(1.0));
}

TEST_CASE("peeled estimator falls back to the exact bits when k >= n~") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const Graph g = corpus_graph(i);
    const auto nt = prepare_one_round(g).n_tilde();
    const auto exact = bc_one_round_mem(g);
    CHECK(sample_bc_peeled(g, config(nt, i)).bc == exact.bc);
    CHECK(sample_bc_peeled(g, config(nt + 7, i)).bc == exact.bc);
  }
}

TEST_CASE("peeled estimators average to the truth over every pivot set") {
  // Survivors 0, 1, 2, all with removed neighbors. With k = 1 there are
  // three pivot sets, each equally likely.
  const Graph g = make_graph(9, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6},
                                 {0, 7}, {0, 8}});
  const auto truth = brandes_exact(g);
  for (bool y : {false, true}) {
    CAPTURE(y);
    const auto prep = prepare_one_round(g);
    std::map<std::vector<NodeId>, std::vector<double>> outcomes;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto c = config(1, seed);
      c.exact_y_sources = y;
      const auto est = sample_bc_peeled(g, c);
      CHECK(est.algorithm == (y ? "peeled-y" : "peeled"));
      outcomes[sample_remainder_sources(prep, 1, seed)] = est.bc;
    }
    REQUIRE(outcomes.size() == 3);
    std::vector<double> mean(g.num_nodes(), 0.0);
    for (const auto& [pivots, o] : outcomes) {
      for (std::size_t i = 0; i < o.size(); ++i) mean[i] += o[i] / 3.0;
    }
    for (std::size_t i = 0; i < mean.size(); ++i) {
      CHECK(mean[i] == doctest::Approx(truth.bc[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("estimators are deterministic per seed") {
  const Graph g = corpus_graph(12);
  for (bool y : {false, true}) {
    auto c = config(3, 77);
    c.exact_y_sources = y;
    CHECK(sample_bc_peeled(g, c).bc == sample_bc_peeled(g, c).bc);
    auto wide = c;
    wide.threads = 4;
    CHECK(sample_bc_peeled(g, wide).bc == sample_bc_peeled(g, c).bc);
  }
  CHECK(sample_bc_baseline(g, config(5, 1)).bc == sample_bc_baseline(g, config(5, 1)).bc);
}

TEST_CASE("recommended pivots") {
  CHECK(recommended_pivots(54, 0.5) == 16);  // ln 54 = 3.99
  CHECK(recommended_pivots(55, 0.5) == 17);  // ln 55 = 4.007
  CHECK(recommended_pivots(2, 0.1) ==
        static_cast<std::size_t>(std::ceil(std::log(2.0) / 0.01)));
  CHECK_THROWS_AS((void)recommended_pivots(55, 1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)recommended_pivots(55, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)recommended_pivots(1, 0.5), std::invalid_argument);
}

TEST_CASE("bernstein bound") {
  for (auto [n, nt, d1, eps] :
       {std::tuple{1000000.0, 1000.0, 1000.0, 0.1}, std::tuple{5000.0, 5000.0, 0.0, 0.2},
        std::tuple{3000.0, 50.0, 40.0, 0.3}, std::tuple{100.0, 20.0, 5.0, 0.05}}) {
    CHECK(bernstein_pivot_bound(static_cast<std::size_t>(n), static_cast<std::size_t>(nt),
                                static_cast<std::size_t>(d1), eps) ==
          static_cast<std::size_t>(bernstein_reference(n, nt, d1, eps)));
  }

  SUBCASE("n~ = sqrt(n), delta1 = sqrt(n): log(n~)/eps^2 scale") {
    const auto rec = recommended_pivots(1000, 0.1);
    const auto b = bernstein_pivot_bound(1000000, 1000, 1000, 0.1);
    CHECK(b >= rec);
    CHECK(b <= 2 * rec);
  }
  SUBCASE("delta1 = 0, n~ = n: Hoeffding-like scale") {
    const auto rec = recommended_pivots(5000, 0.2);
    const auto b = bernstein_pivot_bound(5000, 5000, 0, 0.2);
    CHECK(b >= rec);
    CHECK(static_cast<double>(b) <= 1.1 * static_cast<double>(rec) + 1);
  }
  SUBCASE("grows with delta1") {
    std::size_t prev = 0;
    for (std::size_t d1 : {0, 1, 4, 16, 64}) {
      const auto b = bernstein_pivot_bound(10000, 2000, d1, 0.1);
      CHECK(b >= prev);
      prev = b;
    }
  }
}

TEST_CASE("relative l1 error") {
  BcResult truth{{0.5, 0.25, 0.25}, "t", {}, 0, 0};
  BcResult est{{0.5, 0.5, 0.0}, "e", {}, 0, 0};
  const auto r = relative_l1_error(est, truth);
  CHECK(r.rel_l1 == doctest::Approx(0.5));
  CHECK(r.max_abs == doctest::Approx(0.25));
  CHECK(r.per_node[2] == doctest::Approx(-0.25));

  BcResult zero{{0.0, 0.0}, "z", {}, 0, 0};
  CHECK(relative_l1_error(zero, zero).rel_l1 == 0.0);
  BcResult off{{0.0, 0.1}, "o", {}, 0, 0};
  CHECK(relative_l1_error(off, zero).rel_l1 == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS((void)relative_l1_error(truth, zero), std::invalid_argument);
}

TEST_CASE("peeled error beats the baseline on a pendant-heavy graph") {
  const Graph g = generate_core_periphery({50, 1000, Attachment::kGeometricHalving, 1});
  const auto truth = brandes_exact(g, 0);
  double base = 0.0;
  double peeled = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    base += relative_l1_error(sample_bc_baseline(g, config(10, seed)), truth).rel_l1;
    peeled += relative_l1_error(sample_bc_peeled(g, config(10, seed)), truth).rel_l1;
  }
  CHECK(peeled < base);
}
