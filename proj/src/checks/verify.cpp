#include "checks/verify.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "checks/oracles.hpp"
#include "iqmis/analytic.hpp"
#include "iqmis/iqa.hpp"
#include "iqmis/qaoa.hpp"
#include "iqmis/rng.hpp"

namespace iqmis::checks {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct AngleDraw {
  double beta;
  double gamma;
};

AngleDraw draw_angles(Rng& rng) {
  return {rng.uniform(0.0, kPi / 2.0), rng.uniform(0.0, kPi)};
}

bool suite_analytic_p1(std::ostream& out) {
  const double lambdas[] = {0.5, 1.0, 2.0};
  double worst = 0.0;
  long checks = 0;
  for (int n = 2; n <= 7; ++n) {
    for (int gi = 0; gi < 5; ++gi) {
      const Graph g = er_connected(n, default_edge_probability(n), mix64(0xA1, n, gi));
      const Graph gw = with_uniform_weights(g, 1.0, 2.0, mix64(0xA2, n, gi));
      for (double lambda : lambdas) {
        const IsingCost cost = encode_mis(g, PenaltyWeight(lambda));
        const IsingCost wcost = encode_mis(gw, PenaltyWeight(lambda));
        Rng rng(mix64(0xA3, n, gi));
        for (int a = 0; a < 10; ++a) {
          const AngleDraw ang = draw_angles(rng);
          const Angles angles{{ang.gamma}, {ang.beta}};
          const QuantumState st = qaoa_state(cost, angles);
          const QuantumState stw = qaoa_state(wcost, angles);
          for (int j = 0; j < n; ++j) {
            const int d = g.degree(j);
            worst = std::max(worst, std::abs(expect_z(st, j) - j1(d, ang.beta, ang.gamma, lambda)));
            worst = std::max(worst, std::abs(expect_z(stw, j) - j1_weighted(d, gw.weight(j),
                                                                            ang.beta, ang.gamma,
                                                                            lambda)));
            checks += 2;
          }
        }
      }
    }
  }
  out << "[analytic-p1] " << checks << " vertex comparisons, max |closed form - simulator| = "
      << worst << "\n";
  return worst <= 1e-9;
}

bool suite_analytic_p2(std::ostream& out) {
  const Graph graphs[] = {path_graph(3), complete_graph(4)};
  const double lambdas[] = {0.5, 1.0, 2.0};
  double worst_merge = 0.0;
  long checks = 0;
  for (const Graph& g : graphs) {
    for (double lambda : lambdas) {
      const IsingCost cost = encode_mis(g, PenaltyWeight(lambda));
      Rng rng(mix64(0xB1, g.n(), static_cast<std::uint64_t>(lambda * 4)));
      for (int a = 0; a < 10; ++a) {
        const double beta1 = rng.uniform(0.0, kPi / 2.0);
        const double beta2 = rng.uniform(0.0, kPi / 2.0);
        const double gamma1 = rng.uniform(0.0, kPi);
        const QuantumState st = qaoa_state(cost, Angles{{gamma1, 0.0}, {beta1, beta2}});
        for (int j = 0; j < g.n(); ++j) {
          const double closed = j2_leading(g.degree(j), beta1, beta2, gamma1, 0.0, lambda);
          worst_merge = std::max(worst_merge, std::abs(expect_z(st, j) - closed));
          ++checks;
        }
      }
    }
  }
  out << "[analytic-p2] " << checks
      << " second-layer-off comparisons, max |closed form - simulator| = " << worst_merge << "\n";

  // leading-order quality: shrinking the second phase angle tenfold must cut
  // the truncation error well below the 0.2x mark; the angles avoid the
  // accidental error cancellations this check is not about
  bool ratio_ok = true;
  const double beta1 = 0.3, beta2 = 0.3, gamma1 = 0.2;
  for (const Graph& g : graphs) {
    const IsingCost cost = encode_mis(g, PenaltyWeight(1.0));
    double err_small = 0.0, err_large = 0.0;
    for (int j = 0; j < g.n(); ++j) {
      const QuantumState s1 = qaoa_state(cost, Angles{{gamma1, 0.01}, {beta1, beta2}});
      const QuantumState s2 = qaoa_state(cost, Angles{{gamma1, 0.1}, {beta1, beta2}});
      err_small = std::max(err_small,
                           std::abs(expect_z(s1, j) -
                                    j2_leading(g.degree(j), beta1, beta2, gamma1, 0.01, 1.0)));
      err_large = std::max(err_large,
                           std::abs(expect_z(s2, j) -
                                    j2_leading(g.degree(j), beta1, beta2, gamma1, 0.1, 1.0)));
    }
    out << "[analytic-p2] n=" << g.n() << " truncation error " << err_small
        << " at second angle 0.01 vs " << err_large << " at 0.1\n";
    if (!(err_small < 0.2 * err_large)) ratio_ok = false;
  }
  return worst_merge <= 1e-9 && ratio_ok;
}

bool suite_appc(std::ostream& out) {
  const AppcStudy study = appc_study();
  print_appc(study, out);

  // the loop must refuse to run edge rules on the closed-form backend
  bool gate_ok = false;
  try {
    IqaConfig cfg;
    cfg.rule = Rule::edge_corr;
    cfg.backend = MimicBackend{};
    cfg.brute_force_threshold = 0;
    run_iqa(complete_graph(3), cfg);
  } catch (const std::invalid_argument&) {
    gate_ok = true;
  }
  out << "[appc] closed-form backend rejected for edge rules: " << (gate_ok ? "yes" : "NO")
      << "\n";

  // and an edge rule on the exact backend must consume statevector reports
  IqaConfig cfg;
  cfg.rule = Rule::edge_corr;
  cfg.backend = QaoaBackend{1, OptimizerConfig{4, 400, 1e-6, 7}};
  cfg.brute_force_threshold = 0;
  const IqaResult run = run_iqa(cycle_graph(5), cfg);
  bool used_reports = false;
  for (const IqaStep& st : run.trace.steps)
    if (st.kind != DecisionKind::terminal && st.report_digest != 0) used_reports = true;
  out << "[appc] edge rule consumed exact pair reports: " << (used_reports ? "yes" : "NO")
      << "\n";

  const bool documented = study.gamma0_simulator == 0.0 &&
                          std::abs(study.gamma0_formula) > 1e-3 && !study.reconciled;
  return gate_ok && used_reports && (study.reconciled || documented);
}

bool suite_correction(std::ostream& out) {
  std::vector<Graph> graphs = {complete_graph(3), cycle_graph(5), path_graph(4), star_graph(4)};
  for (int gi = 0; gi < 6; ++gi) {
    const int n = 4 + gi % 5;
    graphs.push_back(er_connected(n, default_edge_probability(n), mix64(0xC1, gi)));
  }
  const double lambdas[] = {0.5, 1.0};
  long cases = 0;
  for (const Graph& g : graphs) {
    for (double lambda : lambdas) {
      const std::uint32_t count = std::uint32_t{1} << g.n();
      for (std::uint32_t mask = 0; mask < count; ++mask) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.n()), 0);
        for (int i = 0; i < g.n(); ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        const std::uint64_t seed = mix64(0xC2, graph_digest(g), mask);
        const CorrectionReplay replay =
            correct_replay(g, lambda, bits, seed, FlipPolicy::uniform_endpoint);
        const std::vector<std::uint8_t> fixed =
            correct(g, PenaltyWeight(lambda), bits, seed, FlipPolicy::uniform_endpoint);
        ++cases;
        if (fixed != replay.bits) {
          out << "[correction] replay diverged from library on mask " << mask << "\n";
          return false;
        }
        for (std::size_t i = 1; i < replay.scores.size(); ++i)
          if (replay.scores[i] < replay.scores[i - 1] - 1e-12) {
            out << "[correction] penalized objective decreased at flip " << i << "\n";
            return false;
          }
        if (!is_independent(g, fixed)) {
          out << "[correction] infeasible output on mask " << mask << "\n";
          return false;
        }
        if (set_weight(g, fixed) < replay.scores.front() - 1e-12) {
          out << "[correction] final weight below the starting score on mask " << mask << "\n";
          return false;
        }
      }
    }
  }
  out << "[correction] " << cases << " exhaustive repair runs, all monotone and feasible\n";
  return true;
}

bool suite_mixer(std::ostream& out) {
  double worst = 0.0;
  double worst_norm = 0.0;
  for (int n = 1; n <= 3; ++n) {
    Rng rng(mix64(0xD1, n));
    for (int trial = 0; trial < 5; ++trial) {
      QuantumState st;
      st.n = n;
      st.amps.resize(std::size_t{1} << n);
      for (auto& a : st.amps)
        a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      const double scale = 1.0 / std::sqrt(norm_sq(st));
      for (auto& a : st.amps) a *= scale;

      const double beta = rng.uniform(-3.0, 3.0);
      QuantumState lib = st;
      apply_mixer(lib, beta);
      const QuantumState ref = apply_unitary(mixer_unitary(n, beta), st);
      for (std::size_t i = 0; i < lib.size(); ++i)
        worst = std::max(worst, std::abs(lib.amps[i] - ref.amps[i]));
      worst_norm = std::max(worst_norm, std::abs(norm_sq(lib) - 1.0));

      IsingCost cost;
      cost.n = n;
      cost.constant = rng.uniform(-1.0, 1.0);
      cost.fields.resize(static_cast<std::size_t>(n));
      for (auto& f : cost.fields) f = rng.uniform(-2.0, 2.0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.bernoulli(0.7)) cost.couplings[{i, j}] = rng.uniform(-2.0, 2.0);
      const double gamma = rng.uniform(-3.0, 3.0);
      QuantumState libp = st;
      apply_phase(libp, cost, gamma);
      const QuantumState refp = apply_unitary(phase_unitary(cost, gamma), st);
      for (std::size_t i = 0; i < libp.size(); ++i)
        worst = std::max(worst, std::abs(libp.amps[i] - refp.amps[i]));
      worst_norm = std::max(worst_norm, std::abs(norm_sq(libp) - 1.0));
    }
  }
  out << "[mixer] max |library - dense matrix exponential| = " << worst
      << ", max norm drift = " << worst_norm << "\n";
  return worst <= 1e-12 && worst_norm <= 1e-12;
}

}  // namespace

AppcStudy appc_study() {
  AppcStudy study;
  const Graph graphs[] = {complete_graph(2), path_graph(3), complete_graph(3)};
  double sum_fs = 0.0, sum_ff = 0.0;
  struct Sample {
    double formula;
    double exact;
  };
  std::vector<Sample> samples;
  for (const Graph& g : graphs) {
    const IsingCost cost = encode_mis(g, PenaltyWeight(1.0));
    Rng rng(mix64(0xE1, g.n(), g.m()));
    for (int a = 0; a < 20; ++a) {
      const AngleDraw ang = draw_angles(rng);
      const QuantumState st = qaoa_state(cost, Angles{{ang.gamma}, {ang.beta}});
      for (auto [u, v] : g.edges()) {
        const double f = jij_p1(g.degree(u), g.degree(v), g.edge_triangles(u, v), ang.beta,
                                ang.gamma, 1.0);
        const double s = expect_zz(st, u, v);
        samples.push_back({f, s});
        sum_fs += f * s;
        sum_ff += f * f;
      }
    }
  }
  study.samples = static_cast<int>(samples.size());
  study.fitted_scale = sum_ff > 0.0 ? sum_fs / sum_ff : 0.0;
  for (const Sample& s : samples) {
    study.max_error_raw = std::max(study.max_error_raw, std::abs(s.formula - s.exact));
    study.max_error_scaled =
        std::max(study.max_error_scaled, std::abs(study.fitted_scale * s.formula - s.exact));
  }
  const Graph k2 = complete_graph(2);
  const IsingCost cost = encode_mis(k2, PenaltyWeight(1.0));
  study.gamma0_formula = jij_p1(1, 1, 0, kPi / 8.0, 0.0, 1.0);
  const QuantumState st = qaoa_state(cost, Angles{{0.0}, {kPi / 8.0}});
  study.gamma0_simulator = expect_zz(st, 0, 1);
  study.reconciled = study.max_error_scaled <= 1e-9;
  return study;
}

void print_appc(const AppcStudy& s, std::ostream& out) {
  out << "[appc] " << s.samples << " edge samples on K2/P3/K3\n";
  out << "[appc] best single scale factor = " << s.fitted_scale << "\n";
  out << "[appc] max |formula - exact| = " << s.max_error_raw << " raw, " << s.max_error_scaled
      << " after scaling\n";
  out << "[appc] zero-phase sanity: formula = " << s.gamma0_formula
      << ", exact = " << s.gamma0_simulator << " (a mixer-only state has no pair correlation)\n";
  out << "[appc] " << (s.reconciled
                           ? "formula matches the simulator after scaling"
                           : "no single scale reconciles the formula; pair rules read the "
                             "simulator instead")
      << "\n";
}

std::vector<std::string> verify_suite_names() {
  return {"analytic-p1", "analytic-p2", "appc", "correction", "mixer"};
}

bool verify_suite(const std::string& name, std::ostream& out) {
  bool ok;
  if (name == "analytic-p1") ok = suite_analytic_p1(out);
  else if (name == "analytic-p2") ok = suite_analytic_p2(out);
  else if (name == "appc") ok = suite_appc(out);
  else if (name == "correction") ok = suite_correction(out);
  else if (name == "mixer") ok = suite_mixer(out);
  else throw std::invalid_argument("verify_suite: unknown suite '" + name + "'");
  out << "[" << name << "] " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

}  // namespace iqmis::checks
