#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "iqmis/classical.hpp"
#include "iqmis/iqa.hpp"
#include "iqmis/rng.hpp"
#include "oracles.hpp"

using namespace iqmis;
using iqmis::checks::complete_graph;
using iqmis::checks::cycle_graph;
using iqmis::checks::star_graph;

namespace {

IqaConfig fast_qaoa(Rule rule, int threshold = 0) {
  IqaConfig cfg;
  cfg.rule = rule;
  cfg.brute_force_threshold = threshold;
  QaoaBackend backend;
  backend.optimizer.restarts = 4;
  backend.optimizer.max_evals = 600;
  cfg.backend = backend;
  return cfg;
}

}  // namespace

TEST_SUITE("iqa") {

TEST_CASE("rule names round trip") {
  for (Rule r : {Rule::minq, Rule::maxq, Rule::mmq, Rule::wmmq, Rule::edge_anti, Rule::edge_corr})
    CHECK(parse_rule(rule_name(r)) == r);
  CHECK_THROWS_AS(parse_rule("nope"), std::invalid_argument);
}

TEST_CASE("single vertex is a terminal solve") {
  const IqaResult r = run_iqa(Graph(1, {}), IqaConfig{});
  CHECK(r.bits == std::vector<std::uint8_t>{1});
  CHECK(r.set_value == doctest::Approx(1.0));
  CHECK(r.feasible);
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(r.trace.steps.front().kind == DecisionKind::terminal);
  CHECK(r.trace.terminal.at(0) == 1);
}

TEST_CASE("ring under the selection rule reproduces the greedy walk") {
  const IqaResult r = run_iqa(cycle_graph(5), fast_qaoa(Rule::minq));
  CHECK(r.bits == std::vector<std::uint8_t>{1, 0, 1, 0, 0});
  CHECK(r.set_value == doctest::Approx(2.0));
  CHECK(r.feasible);
  CHECK_FALSE(r.deviation_seen);
  REQUIRE(r.trace.steps.size() == 2);
  CHECK(r.trace.steps[0].kind == DecisionKind::fix_on);
  CHECK(r.trace.steps[0].vertices == std::vector<int>{0, 1, 4});
  CHECK(r.trace.steps[0].degenerate_tie);  // five-fold symmetry
  CHECK(r.trace.steps[0].live_after == 2);
  CHECK(back_propagate(r.trace, 5) == r.bits);
}

TEST_CASE("pairwise deletion rule walks the ring down to one vertex") {
  const IqaResult r = run_iqa(cycle_graph(5), fast_qaoa(Rule::edge_corr));
  CHECK(r.bits == std::vector<std::uint8_t>{0, 0, 0, 0, 1});
  CHECK(r.feasible);
  REQUIRE(r.trace.steps.size() == 3);
  CHECK(r.trace.steps[0].kind == DecisionKind::fix_pair_off);
  CHECK(r.trace.steps[0].vertices.size() == 2);
  CHECK(r.trace.steps[2].kind == DecisionKind::terminal);
  CHECK(back_propagate(r.trace, 5) == r.bits);
}

TEST_CASE("anticorrelation walk on a single edge") {
  IqaConfig cfg = fast_qaoa(Rule::edge_anti);
  const IqaResult r = run_iqa(complete_graph(2), cfg);
  CHECK(r.feasible);
  CHECK(r.set_value == doctest::Approx(1.0));
  CHECK(r.bits == std::vector<std::uint8_t>{0, 1});
  REQUIRE(r.trace.steps.size() == 2);
  CHECK(r.trace.steps[0].kind == DecisionKind::anti_substitute);
  // eliminated vertex first, then the one it mirrors
  CHECK(r.trace.steps[0].vertices == std::vector<int>{1, 0});
  CHECK(r.trace.steps[1].kind == DecisionKind::terminal);
  CHECK(back_propagate(r.trace, 2) == r.bits);

  cfg.brute_force_threshold = 10;
  const IqaResult direct = run_iqa(complete_graph(2), cfg);
  CHECK(direct.bits == std::vector<std::uint8_t>{0, 1});
  CHECK(direct.trace.steps.size() == 1);
}

TEST_CASE("anticorrelation mirrors are consistent in every trace") {
  Rng rng(501);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 4 + trial;
    const Graph g = er_connected(n, 0.5, rng.next_u64());
    IqaConfig cfg = fast_qaoa(Rule::edge_anti);
    cfg.seed = trial;
    const IqaResult r = run_iqa(g, cfg);
    REQUIRE(static_cast<int>(r.bits.size()) == n);
    for (const IqaStep& step : r.trace.steps) {
      if (step.kind != DecisionKind::anti_substitute) continue;
      REQUIRE(step.vertices.size() == 2);
      const int gone = step.vertices[0], kept = step.vertices[1];
      CHECK(gone > kept);  // the higher original id is always the one eliminated
      CHECK(static_cast<int>(r.bits[static_cast<std::size_t>(gone)]) ==
            1 - static_cast<int>(r.bits[static_cast<std::size_t>(kept)]));
    }
    CHECK(back_propagate(r.trace, n) == r.bits);
    // infeasible raw outputs still produce an independent corrected set
    CHECK(is_independent(g, r.corrected));
    CHECK(r.set_value == doctest::Approx(set_weight(g, r.corrected)).epsilon(1e-12));
    if (r.feasible) CHECK(r.corrected == r.bits);
  }
}

TEST_CASE("depth-1 selection equals the classical greedy on a small ensemble") {
  Rng rng(502);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 5 + trial % 3;
    const Graph g = er_connected(n, default_edge_probability(n), rng.next_u64());
    IqaConfig cfg = fast_qaoa(Rule::minq);
    cfg.backend = QaoaBackend{};  // full optimizer budget for the equivalence claim
    cfg.seed = trial;
    const IqaResult quantum = run_iqa(g, cfg);
    const SolveResult greedy = greedy_min(g);
    CHECK(quantum.bits == greedy.bits);
    CHECK(quantum.set_value == doctest::Approx(greedy.set_value).epsilon(1e-12));
    CHECK_FALSE(quantum.deviation_seen);
  }
}

TEST_CASE("other rules and backends produce feasible sets of sane value") {
  const Graph g = with_uniform_weights(er_connected(7, 0.45, 503), 1.0, 2.0, 504);
  const double opt = brute_force(g).set_value;
  for (Rule rule : {Rule::maxq, Rule::mmq, Rule::wmmq}) {
    IqaConfig cfg = fast_qaoa(rule);
    const IqaResult r = run_iqa(g, cfg);
    CHECK(r.feasible);
    CHECK(r.set_value > 0.0);
    CHECK(r.set_value <= opt + 1e-9);
    CHECK(back_propagate(r.trace, g.n()) == r.bits);
  }

  IqaConfig annealed;
  annealed.rule = Rule::minq;
  annealed.brute_force_threshold = 0;
  AnnealBackend ab;
  ab.schedule.tau = 1.0;
  annealed.backend = ab;
  const IqaResult ra = run_iqa(g, annealed);
  CHECK(ra.feasible);
  const IqaResult rb = run_iqa(g, annealed);
  CHECK(ra.bits == rb.bits);  // fully deterministic backend

  IqaConfig mimic;
  mimic.rule = Rule::minq;
  mimic.brute_force_threshold = 0;
  mimic.backend = MimicBackend{};
  const IqaResult rm = run_iqa(g, mimic);
  CHECK(rm.feasible);
  CHECK(rm.set_value > 0.0);
}

TEST_CASE("the closed-form backend cannot drive pair rules") {
  IqaConfig cfg;
  cfg.backend = MimicBackend{};
  cfg.rule = Rule::edge_corr;
  CHECK_THROWS_AS(run_iqa(cycle_graph(4), cfg), std::invalid_argument);
  cfg.rule = Rule::edge_anti;
  CHECK_THROWS_AS(run_iqa(cycle_graph(4), cfg), std::invalid_argument);
}

TEST_CASE("config validation") {
  IqaConfig cfg;
  cfg.brute_force_threshold = -1;
  CHECK_THROWS_AS(run_iqa(cycle_graph(4), cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_iqa(Graph(0, {}), IqaConfig{}), std::invalid_argument);
}

TEST_CASE("replay rejects holes and bad shapes") {
  IqaTrace empty;
  CHECK_THROWS_AS(back_propagate(empty, 3), std::invalid_argument);
  CHECK_THROWS_AS(back_propagate(empty, 0), std::invalid_argument);
  IqaTrace partial;
  partial.terminal[0] = 1;
  CHECK_THROWS_AS(back_propagate(partial, 2), std::invalid_argument);
}

TEST_CASE("terminal shortcut matches the exact solver") {
  IqaConfig cfg;
  cfg.brute_force_threshold = 24;
  const Graph g = er_connected(8, 0.4, 505);
  const IqaResult r = run_iqa(g, cfg);
  const SolveResult exact = brute_force(g);
  CHECK(r.set_value == doctest::Approx(exact.set_value).epsilon(1e-12));
  CHECK(r.bits == exact.bits);
  CHECK(r.trace.steps.size() == 1);
}

}  // TEST_SUITE
