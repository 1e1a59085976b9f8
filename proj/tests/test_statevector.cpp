#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "iqmis/ising.hpp"
#include "iqmis/rng.hpp"
#include "iqmis/statevector.hpp"
#include "oracles.hpp"

using namespace iqmis;
using iqmis::checks::apply_unitary;
using iqmis::checks::complete_graph;
using iqmis::checks::mixer_unitary;
using iqmis::checks::path_graph;
using iqmis::checks::phase_unitary;

namespace {

std::vector<int> spins_of(std::uint64_t mask, int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
  return s;
}

QuantumState random_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  QuantumState st = uniform_state(n);
  double total = 0.0;
  for (auto& z : st.amps) {
    z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    total += std::norm(z);
  }
  for (auto& z : st.amps) z /= std::sqrt(total);
  return st;
}

double state_diff(const QuantumState& a, const QuantumState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
  return worst;
}

}  // namespace

TEST_SUITE("statevector") {

TEST_CASE("uniform start state") {
  const QuantumState st = uniform_state(3);
  REQUIRE(st.size() == 8);
  for (const auto& z : st.amps) CHECK(std::abs(z - std::complex<double>(1.0 / std::sqrt(8.0), 0)) < 1e-15);
  CHECK(norm_sq(st) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(uniform_state(0), std::invalid_argument);
  CHECK_THROWS_AS(uniform_state(kQubitCap + 1), std::invalid_argument);
  CHECK_THROWS_AS(uniform_state(5, 4), std::invalid_argument);
}

TEST_CASE("diagonal table lists the spin objective per basis state") {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial;
    Graph g = er_connected(n, 0.6, rng.next_u64());
    if (trial % 2) g = with_uniform_weights(g, 1.0, 2.0, rng.next_u64());
    const IsingCost cost = encode_mis(g, PenaltyWeight(1.0));
    const DiagonalTable table = build_diagonal(cost);
    REQUIRE(table.values.size() == (std::size_t{1} << n));
    double lowest = table.values[0];
    for (std::uint64_t mask = 0; mask < table.values.size(); ++mask) {
      REQUIRE(table.values[mask] == doctest::Approx(evaluate(cost, spins_of(mask, n))).epsilon(1e-12));
      lowest = std::min(lowest, table.values[mask]);
    }
    CHECK(table.min_value() == doctest::Approx(lowest).epsilon(1e-14));
    if (table.coded())
      for (std::uint64_t mask = 0; mask < table.values.size(); ++mask)
        REQUIRE(table.levels[table.codes[mask]] == table.values[mask]);
  }
}

TEST_CASE("integer graded costs take the coded path, generic ones do not") {
  const IsingCost unit = encode_mis(er_connected(8, 0.4, 5), PenaltyWeight(1.0));
  CHECK(build_diagonal(unit).coded());
  const Graph w = with_uniform_weights(er_connected(4, 0.6, 6), 1.0, 2.0, 7);
  // 16 random-weight levels cannot fit the 2^4/4 = 4 slot budget
  CHECK_FALSE(build_diagonal(encode_mis(w, PenaltyWeight(1.0))).coded());
}

TEST_CASE("phase walk matches the dense diagonal unitary") {
  Rng rng(47);
  for (int n : {2, 4, 6}) {
    const Graph g = er_connected(n, 0.6, rng.next_u64());
    const IsingCost cost = encode_mis(g, PenaltyWeight(0.8));
    const double gamma = rng.uniform(-2.0, 2.0);
    const QuantumState start = random_state(n, rng.next_u64());
    QuantumState got = start;
    apply_phase(got, cost, gamma);
    const QuantumState want = apply_unitary(phase_unitary(cost, gamma), start);
    REQUIRE(state_diff(got, want) < 1e-12);
    // coded and dense paths agree
    QuantumState via_table = start;
    apply_phase(via_table, build_diagonal(cost), gamma);
    REQUIRE(state_diff(got, via_table) < 1e-12);
  }
}

TEST_CASE("mixer walk matches the dense exponential") {
  Rng rng(53);
  for (int n : {1, 2, 4, 6}) {
    const double beta = rng.uniform(-2.0, 2.0);
    const QuantumState start = random_state(n, rng.next_u64());
    QuantumState got = start;
    apply_mixer(got, beta);
    const QuantumState want = apply_unitary(mixer_unitary(n, beta), start);
    REQUIRE(state_diff(got, want) < 1e-12);
    CHECK(norm_sq(got) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("a depth-1 walk on the path reproduces the frozen correlator") {
  const IsingCost cost = encode_mis(path_graph(3), PenaltyWeight(1.0));
  QuantumState st = uniform_state(3);
  apply_phase(st, cost, 0.2);
  apply_mixer(st, 3.14159265358979323846 / 8.0);
  CHECK(expect_z(st, 1) == doctest::Approx(-0.23360287714580206627).epsilon(1e-12));
}

TEST_CASE("probabilities and expectations are mutually consistent") {
  const QuantumState st = random_state(5, 61);
  const auto p = probabilities(st);
  CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int j = 0; j < 5; ++j) {
    double direct = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) direct += (i >> j) & 1 ? p[i] : -p[i];
    CHECK(expect_z(st, j) == doctest::Approx(direct).epsilon(1e-12));
  }
  double pair = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) pair += ((i >> 1) & 1) == ((i >> 3) & 1) ? p[i] : -p[i];
  CHECK(expect_zz(st, 1, 3) == doctest::Approx(pair).epsilon(1e-12));
  CHECK(expect_zz(st, 3, 1) == doctest::Approx(pair).epsilon(1e-12));
  CHECK_THROWS_AS(expect_zz(st, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)expect_z(st, 5), std::invalid_argument);
}

TEST_CASE("cost expectation assembles from the diagonal") {
  const Graph g = er_connected(5, 0.5, 71);
  const IsingCost cost = encode_mis(g, PenaltyWeight(1.3));
  const QuantumState st = random_state(5, 72);
  const DiagonalTable table = build_diagonal(cost);
  const auto p = probabilities(st);
  double want = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) want += p[i] * table.values[i];
  CHECK(expect_cost(st, cost) == doctest::Approx(want).epsilon(1e-12));
  CHECK(expect_diag(st, table) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("ground overlap of the uniform state counts the optima") {
  const IsingCost k2 = encode_mis(complete_graph(2), PenaltyWeight(1.0));
  const DiagonalTable table = build_diagonal(k2);
  // two of four basis states sit at the minimum
  CHECK(ground_overlap(uniform_state(2), table) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("measurement sampling is seeded and follows the weights") {
  const QuantumState st = uniform_state(2);
  const auto a = sample_basis(st, 4000, 17);
  const auto b = sample_basis(st, 4000, 17);
  CHECK(a == b);
  const auto c = sample_basis(st, 4000, 18);
  CHECK(a != c);
  std::vector<int> hist(4, 0);
  for (auto idx : a) {
    REQUIRE(idx < 4);
    ++hist[static_cast<std::size_t>(idx)];
  }
  for (int count : hist) {
    CHECK(count > 890);  // 1000 expected, sd ~27
    CHECK(count < 1110);
  }
  CHECK(sample_basis(st, 0, 1).empty());
}

}  // TEST_SUITE
