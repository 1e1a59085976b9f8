#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "iqmis/graph.hpp"
#include "oracles.hpp"

using namespace iqmis;
using iqmis::checks::complete_graph;
using iqmis::checks::cycle_graph;
using iqmis::checks::er_reference;
using iqmis::checks::path_graph;
using iqmis::checks::petersen_graph;
using iqmis::checks::star_graph;

TEST_SUITE("graph") {

TEST_CASE("constructor normalizes edge order and rejects bad input") {
  const Graph g(4, {{2, 0}, {3, 1}, {1, 0}});
  REQUIRE(g.m() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(g.unit_weights());
  CHECK(g.weight(2) == 1.0);

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {}, {1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("degrees, neighborhoods and adjacency queries") {
  const Graph g = star_graph(4);
  REQUIRE(g.n() == 5);
  CHECK(g.degree(0) == 4);
  CHECK(g.degree(3) == 1);
  CHECK(g.max_degree() == 4);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3, 4});
  CHECK(g.neighbors(2) == std::vector<int>{0});
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(1, 1));
  CHECK_THROWS_AS(g.degree(5), std::invalid_argument);
}

TEST_CASE("edge triangle counts") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.edge_triangles(0, 1) == 2);
  const Graph c5 = cycle_graph(5);
  CHECK(c5.edge_triangles(0, 1) == 0);
  CHECK_THROWS_AS(c5.edge_triangles(0, 2), std::invalid_argument);
  // one triangle hanging off an edge
  const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}});
  CHECK(g.edge_triangles(0, 1) == 1);
  CHECK(g.edge_triangles(1, 3) == 0);
}

TEST_CASE("connectivity") {
  CHECK(Graph(1, {}).is_connected());
  CHECK(path_graph(6).is_connected());
  CHECK(petersen_graph().is_connected());
  CHECK_FALSE(Graph(2, {}).is_connected());
  CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("vertex deletion keeps relative order in the remap") {
  const ReducedGraph r = delete_vertex(star_graph(4), 0);
  CHECK(r.graph.n() == 4);
  CHECK(r.graph.m() == 0);
  CHECK(r.remap == std::vector<int>{-1, 0, 1, 2, 3});

  const ReducedGraph c = delete_closed_neighborhood(cycle_graph(5), 0);
  CHECK(c.graph.n() == 2);
  CHECK(c.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(c.remap == std::vector<int>{-1, -1, 0, 1, -1});

  // weights ride along with the surviving vertices
  const Graph w(3, {{0, 1}, {1, 2}}, {1.5, 2.5, 3.5});
  const ReducedGraph rw = delete_vertex(w, 1);
  CHECK(rw.graph.weights() == std::vector<double>{1.5, 3.5});
  CHECK(rw.graph.m() == 0);
}

TEST_CASE("connected sampler matches the independent reference draw for draw") {
  for (int n : {2, 5, 9, 14}) {
    const double q = default_edge_probability(n);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Graph a = er_connected(n, q, seed);
      const Graph b = er_reference(n, q, seed);
      REQUIRE(a.n() == b.n());
      REQUIRE(a.edges() == b.edges());
      CHECK(a.is_connected());
    }
  }
}

TEST_CASE("sampler edge counts follow the binomial at near-sure connectivity") {
  // n=20, q=0.5: disconnection probability is ~2e-5, so the conditioning on
  // connectivity cannot move the mean visibly
  const int draws = 300;
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < draws; ++seed) total += er_connected(20, 0.5, seed).m();
  const double mean = total / draws;
  // 190 trials at q=0.5: mean 95, per-draw sd 6.89, sem 0.40; allow 5 sigma
  CHECK(mean > 93.0);
  CHECK(mean < 97.0);
}

TEST_CASE("sampler rejects impossible requests") {
  CHECK_THROWS_AS(er_connected(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(er_connected(5, 1.5, 1), std::invalid_argument);
  // q=0 on n>=2 can never connect; the attempt budget must trip
  CHECK_THROWS_AS(er_connected(3, 0.0, 1, 50), std::runtime_error);
}

TEST_CASE("uniform weight decoration") {
  const Graph base = cycle_graph(6);
  const Graph w = with_uniform_weights(base, 1.0, 2.0, 77);
  CHECK(w.edges() == base.edges());
  CHECK_FALSE(w.unit_weights());
  for (int v = 0; v < w.n(); ++v) {
    CHECK(w.weight(v) >= 1.0);
    CHECK(w.weight(v) < 2.0);
  }
  const Graph w2 = with_uniform_weights(base, 1.0, 2.0, 77);
  CHECK(w.weights() == w2.weights());
  const Graph w3 = with_uniform_weights(base, 1.0, 2.0, 78);
  CHECK(w.weights() != w3.weights());
  CHECK_THROWS_AS(with_uniform_weights(base, 0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("default edge probability") {
  CHECK(default_edge_probability(5) == doctest::Approx(0.38626509898418406).epsilon(1e-15));
  CHECK(default_edge_probability(12) == doctest::Approx(1.2 * std::log(12.0) / 12.0).epsilon(1e-15));
  CHECK(default_edge_probability(1) == 0.0);
  CHECK(default_edge_probability(2) <= 1.0);
}

TEST_CASE("digest separates structure and weights") {
  const Graph a = cycle_graph(5);
  const Graph b = cycle_graph(5);
  CHECK(graph_digest(a) == graph_digest(b));
  CHECK(graph_digest(a) != graph_digest(path_graph(5)));
  CHECK(graph_digest(a) != graph_digest(cycle_graph(6)));
  const Graph wa = with_uniform_weights(a, 1.0, 2.0, 5);
  CHECK(graph_digest(wa) != graph_digest(a));
  CHECK(graph_digest(wa) == graph_digest(with_uniform_weights(a, 1.0, 2.0, 5)));
  CHECK(graph_digest(wa) != graph_digest(with_uniform_weights(a, 1.0, 2.0, 6)));
}

}  // TEST_SUITE
