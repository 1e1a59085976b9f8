#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "checks/verify.hpp"
#include "iqmis/classical.hpp"
#include "iqmis/graph.hpp"
#include "iqmis/graph_io.hpp"
#include "iqmis/harness.hpp"
#include "iqmis/iqa.hpp"
#include "iqmis/ising.hpp"
#include "iqmis/qaoa.hpp"
#include "iqmis/rng.hpp"

namespace {

std::vector<int> chosen(const std::vector<std::uint8_t>& bits) {
  std::vector<int> out;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out.push_back(static_cast<int>(i));
  return out;
}

void print_set(const std::vector<int>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) std::cout << (i ? " " : "") << set[i];
  std::cout << "\n";
}

int run_gen(int n, const std::string& q_text, bool weighted, double wlo, double whi,
            std::uint64_t seed, const std::string& out) {
  const double q = q_text == "auto" ? iqmis::default_edge_probability(n) : std::stod(q_text);
  iqmis::Graph g = iqmis::er_connected(n, q, seed);
  if (weighted) g = iqmis::with_uniform_weights(g, wlo, whi, iqmis::mix64(seed, 0x77));
  iqmis::save_graph(out, g);
  std::cout << "wrote n=" << g.n() << " m=" << g.m() << " q=" << q << " to " << out << "\n";
  return 0;
}

int run_solve(const std::string& path, const std::string& alg, int p, double tau, double lambda,
              std::uint64_t seed, bool json) {
  const iqmis::Graph g = iqmis::load_graph(path);
  const iqmis::AlgorithmSpec spec = iqmis::parse_algorithm(alg);
  nlohmann::json j;
  j["algorithm"] = alg;
  j["n"] = g.n();
  j["m"] = g.m();

  switch (spec.kind) {
    case iqmis::AlgorithmSpec::Kind::qaoa_direct: {
      const iqmis::IsingCost cost = iqmis::encode_mis(g, iqmis::PenaltyWeight(lambda));
      iqmis::OptimizerConfig oc;
      oc.seed = seed;
      const iqmis::OptimizeResult opt = iqmis::optimize_angles(cost, p, oc);
      const double expected = -opt.value / 2.0;
      const double best = iqmis::brute_force(g).set_value;
      j["expected_size"] = expected;
      j["optimum"] = best;
      j["ratio"] = expected / best;
      if (json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "algorithm: " << alg << "\nexpected_size: " << expected
                  << "\noptimum: " << best << "\nratio: " << expected / best << "\n";
      }
      return 0;
    }
    case iqmis::AlgorithmSpec::Kind::iqa: {
      iqmis::IqaConfig cfg;
      cfg.rule = spec.rule;
      cfg.lambda = lambda;
      cfg.seed = seed;
      switch (spec.backend) {
        case iqmis::AlgorithmSpec::Backend::qaoa: {
          iqmis::OptimizerConfig oc;
          cfg.backend = iqmis::QaoaBackend{p, oc};
          break;
        }
        case iqmis::AlgorithmSpec::Backend::anneal:
          cfg.backend = iqmis::AnnealBackend{iqmis::AnnealSchedule{tau, 0, false}};
          break;
        case iqmis::AlgorithmSpec::Backend::mimic:
          cfg.backend = iqmis::MimicBackend{};
          break;
      }
      const iqmis::IqaResult res = iqmis::run_iqa(g, cfg);
      int ties = 0, deviations = 0;
      for (const iqmis::IqaStep& st : res.trace.steps) {
        ties += st.degenerate_tie ? 1 : 0;
        deviations += st.deviation ? 1 : 0;
      }
      const std::vector<int> set = chosen(res.corrected);
      j["set_value"] = res.set_value;
      j["set"] = set;
      j["feasible_raw"] = res.feasible;
      j["steps"] = res.trace.steps.size();
      j["deviations"] = deviations;
      j["degenerate_ties"] = ties;
      if (json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "algorithm: " << alg << "\nset_value: " << res.set_value << "\nset: ";
        print_set(set);
        std::cout << "feasible_raw: " << (res.feasible ? "true" : "false")
                  << "\nsteps: " << res.trace.steps.size() << "  deviations: " << deviations
                  << "  degenerate_ties: " << ties << "\n";
      }
      return 0;
    }
    default: break;
  }

  iqmis::SolveResult sr;
  switch (spec.kind) {
    case iqmis::AlgorithmSpec::Kind::min: sr = iqmis::greedy_min(g); break;
    case iqmis::AlgorithmSpec::Kind::max: sr = iqmis::greedy_max(g); break;
    case iqmis::AlgorithmSpec::Kind::wmin: sr = iqmis::greedy_wmin(g); break;
    case iqmis::AlgorithmSpec::Kind::wmax: sr = iqmis::greedy_wmax(g); break;
    default: break;
  }
  const std::vector<int> set = chosen(sr.bits);
  j["set_value"] = sr.set_value;
  j["set"] = set;
  j["feasible"] = sr.feasible;
  j["steps"] = sr.trace.size();
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algorithm: " << alg << "\nset_value: " << sr.set_value << "\nset: ";
    print_set(set);
    std::cout << "feasible: " << (sr.feasible ? "true" : "false")
              << "\nsteps: " << sr.trace.size() << "\n";
  }
  return 0;
}

int run_oracle(const std::string& path) {
  const iqmis::Graph g = iqmis::load_graph(path);
  const iqmis::SolveResult best = iqmis::brute_force(g);
  std::cout << "optimum: " << best.set_value << "\nset: ";
  print_set(chosen(best.bits));
  return 0;
}

int run_verify(const std::string& suite) {
  return iqmis::checks::verify_suite(suite, std::cout) ? 0 : 1;
}

int run_experiment_cmd(const std::string& config_path, const std::string& out_dir) {
  const iqmis::ExperimentConfig cfg = iqmis::load_experiment_config(config_path);
  const iqmis::ExperimentResult res = iqmis::run_experiment(cfg);
  iqmis::write_experiment(res, out_dir);
  for (const iqmis::SummaryRow& s : res.summary) {
    std::cout << s.algorithm << " n=" << s.n << " count=" << s.count;
    if (s.count > 0) std::cout << " mean_ratio=" << s.mean_ratio << " sem=" << s.sem_ratio;
    std::cout << "\n";
  }
  std::cout << "wrote " << out_dir << "/rows.csv, summary.csv, timing.csv, metadata.txt\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum independent set toolkit: greedy, exact, quantum-style and annealing solvers"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a random connected instance");
  int gen_n = 0;
  std::string gen_q = "auto";
  bool gen_weighted = false;
  double gen_wlo = 1.0, gen_whi = 2.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--q", gen_q, "edge probability, or 'auto' for 1.2 ln(n)/n")->required();
  gen->add_flag("--weighted", gen_weighted, "draw vertex weights uniformly");
  gen->add_option("--wlo", gen_wlo, "weight range low end");
  gen->add_option("--whi", gen_whi, "weight range high end");
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output path")->required();

  auto* solve = app.add_subcommand("solve", "run one solver on a graph file");
  std::string solve_graph, solve_alg;
  int solve_p = 1;
  double solve_tau = 2.0, solve_lambda = 1.0;
  std::uint64_t solve_seed = 0;
  bool solve_json = false;
  solve->add_option("--graph", solve_graph, "graph file")->required();
  solve->add_option("--alg", solve_alg,
                    "min|max|wmin|wmax|qaoa-direct|minq|maxq|mmq|wmmq|edge-anti|edge-corr, "
                    "rules accept -anneal or -mimic suffixes")
      ->required();
  auto* opt_p = solve->add_option("--p", solve_p, "layer count for optimizer backends");
  auto* opt_tau = solve->add_option("--tau", solve_tau, "anneal duration");
  opt_p->excludes(opt_tau);
  opt_tau->excludes(opt_p);
  solve->add_option("--lambda", solve_lambda, "penalty weight");
  solve->add_option("--seed", solve_seed, "run seed");
  solve->add_flag("--json", solve_json, "emit JSON");

  auto* oracle = app.add_subcommand("oracle", "exact optimum of a graph file");
  std::string oracle_graph;
  oracle->add_option("--graph", oracle_graph, "graph file")->required();

  auto* verify = app.add_subcommand("verify", "run an oracle-equivalence suite");
  std::string verify_name;
  verify->add_option("--suite", verify_name, "suite name")
      ->required()
      ->check(CLI::IsMember(iqmis::checks::verify_suite_names()));

  auto* experiment = app.add_subcommand("experiment", "run a configured sweep");
  std::string exp_config, exp_out;
  experiment->add_option("--config", exp_config, "key=value config file")->required();
  experiment->add_option("--out-dir", exp_out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return run_gen(gen_n, gen_q, gen_weighted, gen_wlo, gen_whi, gen_seed, gen_out);
    if (solve->parsed())
      return run_solve(solve_graph, solve_alg, solve_p, solve_tau, solve_lambda, solve_seed,
                       solve_json);
    if (oracle->parsed()) return run_oracle(oracle_graph);
    if (verify->parsed()) return run_verify(verify_name);
    if (experiment->parsed()) return run_experiment_cmd(exp_config, exp_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
