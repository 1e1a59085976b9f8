#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "iqmis/analytic.hpp"
#include "iqmis/ising.hpp"
#include "iqmis/rng.hpp"
#include "iqmis/statevector.hpp"
#include "oracles.hpp"

using namespace iqmis;
using iqmis::checks::path_graph;
using iqmis::checks::star_graph;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("analytic") {

TEST_CASE("depth-1 closed form, frozen values") {
  CHECK(j1(2, kPi / 8.0, 0.2, 1.0) == doctest::Approx(-0.23360287714580206627).epsilon(1e-14));
  CHECK(j1_weighted(2, 1.5, kPi / 8.0, 0.2, 1.0) ==
        doctest::Approx(-0.11917704492094351002).epsilon(1e-14));
  CHECK(j1(0, 0.3, 0.7, 1.0) == doctest::Approx(std::sin(0.6) * std::sin(1.4)).epsilon(1e-14));
  CHECK(j1(3, 0.3, 0.7, 0.5) == j1_weighted(3, 1.0, 0.3, 0.7, 0.5));
  CHECK_THROWS_AS(j1(-1, 0.1, 0.1, 1.0), std::invalid_argument);
}

TEST_CASE("depth-1 closed form equals the simulator on fresh draws") {
  Rng rng(201);
  for (int d : {1, 2, 4}) {
    const Graph g = star_graph(d);  // center has degree d
    const IsingCost cost = encode_mis(g, PenaltyWeight(1.0));
    for (int i = 0; i < 5; ++i) {
      const double beta = rng.uniform(0.0, kPi / 2.0);
      const double gamma = rng.uniform(0.0, kPi);
      const QuantumState st = qaoa_state(cost, Angles{{gamma}, {beta}});
      CHECK(std::abs(expect_z(st, 0) - j1(d, beta, gamma, 1.0)) <= 1e-11);
    }
  }
}

TEST_CASE("second layer with no phase folds into one wider mixer") {
  Rng rng(202);
  for (int i = 0; i < 50; ++i) {
    const int d = static_cast<int>(rng.below(6));
    const double b1 = rng.uniform(0.0, kPi / 2.0);
    const double b2 = rng.uniform(0.0, kPi / 2.0);
    const double g1 = rng.uniform(0.0, kPi);
    const double lambda = 0.5 + rng.uniform01();
    CHECK(std::abs(j2_leading(d, b1, b2, g1, 0.0, lambda) - j1(d, b1 + b2, g1, lambda)) <= 1e-12);
  }
}

TEST_CASE("depth-2 truncation error shrinks with the second angle") {
  const IsingCost cost = encode_mis(path_graph(3), PenaltyWeight(1.0));
  const double b1 = 0.3, b2 = 0.3, g1 = 0.2;
  double err_small = 0.0, err_large = 0.0;
  for (int j = 0; j < 3; ++j) {
    const QuantumState s1 = qaoa_state(cost, Angles{{g1, 0.01}, {b1, b2}});
    const QuantumState s2 = qaoa_state(cost, Angles{{g1, 0.1}, {b1, b2}});
    err_small = std::max(err_small,
                         std::abs(expect_z(s1, j) - j2_leading(path_graph(3).degree(j), b1, b2, g1, 0.01, 1.0)));
    err_large = std::max(err_large,
                         std::abs(expect_z(s2, j) - j2_leading(path_graph(3).degree(j), b1, b2, g1, 0.1, 1.0)));
  }
  CHECK(err_small < 0.2 * err_large);
}

TEST_CASE("pair closed form misses the zero-phase limit") {
  // a closed-form pair correlator at gamma=0 should be 0 (mixer-only product
  // state); the transcribed expression is not, which is why selection rules
  // never consume it
  const double at_zero = jij_p1(1, 1, 0, kPi / 8.0, 0.0, 1.0);
  CHECK(std::abs(at_zero) > 1e-3);
  const IsingCost k2 = encode_mis(checks::complete_graph(2), PenaltyWeight(1.0));
  const QuantumState st = qaoa_state(k2, Angles{{0.0}, {kPi / 8.0}});
  CHECK(std::abs(expect_zz(st, 0, 1)) <= 1e-12);
}

TEST_CASE("cost view recovery") {
  const Graph g = with_uniform_weights(er_connected(6, 0.5, 301), 1.0, 2.0, 302);
  const IsingCost cost = encode_mis(g, PenaltyWeight(0.75));
  const MisView view = mis_view(cost);
  CHECK(view.lambda == doctest::Approx(0.75).epsilon(1e-14));
  for (int v = 0; v < g.n(); ++v) {
    CHECK(view.degree[static_cast<std::size_t>(v)] == g.degree(v));
    CHECK(view.reward[static_cast<std::size_t>(v)] == doctest::Approx(g.weight(v)).epsilon(1e-12));
  }

  IsingCost uneven = cost;
  uneven.couplings.begin()->second *= 2.0;
  CHECK_THROWS_AS(mis_view(uneven), std::invalid_argument);

  IsingCost bad_field = cost;
  bad_field.fields[0] = 100.0;  // implies a negative reward
  CHECK_THROWS_AS(mis_view(bad_field), std::invalid_argument);
}

TEST_CASE("closed-form backend mirrors the simulator singles at depth 1") {
  const Graph g = er_connected(6, 0.5, 303);
  const IsingCost cost = encode_mis(g, PenaltyWeight(1.0));
  const Angles angles{{0.45}, {0.35}};
  const CorrelatorReport mimic = mimic_correlators(cost, angles);
  const CorrelatorReport exact = correlators(cost, angles);
  for (int v = 0; v < g.n(); ++v)
    CHECK(std::abs(mimic.z[static_cast<std::size_t>(v)] -
                   exact.z[static_cast<std::size_t>(v)]) <= 1e-9);
  for (const auto& [key, value] : mimic.zz) {
    (void)key;
    CHECK(value <= 1.0);
    CHECK(value >= -1.0);
  }
  CHECK_THROWS_AS(mimic_correlators(cost, Angles{{0.1, 0.2}, {0.1, 0.2}}), std::invalid_argument);
}

TEST_CASE("surrogate angle search is deterministic and sane") {
  const IsingCost cost = encode_mis(er_connected(7, 0.45, 304), PenaltyWeight(1.0));
  OptimizerConfig oc;
  oc.seed = 9;
  const OptimizeResult a = mimic_optimize(cost, oc);
  const OptimizeResult b = mimic_optimize(cost, oc);
  CHECK(a.value == b.value);
  CHECK(a.angles.gammas == b.angles.gammas);
  REQUIRE(a.angles.p() == 1);
  // the surrogate it minimizes is the field part of its own report
  const CorrelatorReport rep = mimic_correlators(cost, a.angles);
  double fields_only = cost.constant;
  for (int i = 0; i < cost.n; ++i)
    fields_only += cost.fields[static_cast<std::size_t>(i)] * rep.z[static_cast<std::size_t>(i)];
  CHECK(a.value == doctest::Approx(fields_only).epsilon(1e-9));
}

}  // TEST_SUITE
