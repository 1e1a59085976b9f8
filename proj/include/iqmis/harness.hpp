#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iqmis/graph.hpp"
#include "iqmis/iqa.hpp"

namespace iqmis {

// Sweep description. Every algorithm sees the same instance for a given
// (n, index): the graph seed depends only on the master seed, n and index.
struct ExperimentConfig {
  std::vector<std::string> algorithms;
  int n_min = 5;
  int n_max = 12;
  int instances = 200;
  std::optional<double> q;  // empty: 1.2 ln(n)/n per size
  double lambda = 1.0;
  bool weighted = false;
  double weight_lo = 1.0;
  double weight_hi = 2.0;
  int p = 1;          // qaoa backends
  double tau = 2.0;   // anneal backends
  int anneal_steps = 0;
  std::uint64_t seed = 0;
  // 0 by default so iterative runs exercise the backend on every step;
  // the library-level default shortcut stays out of paired comparisons
  int brute_force_threshold = 0;
  int restarts = 10;
  int max_evals = 2000;
  double tolerance = 1e-6;
  int workers = 1;
};

// key=value lines, '#' comments; unknown keys are errors
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);
void validate(const ExperimentConfig& cfg);

struct AlgorithmSpec {
  enum class Kind { min, max, wmin, wmax, qaoa_direct, iqa };
  enum class Backend { qaoa, anneal, mimic };
  Kind kind = Kind::min;
  Rule rule = Rule::minq;            // iqa only
  Backend backend = Backend::qaoa;   // iqa only
};

// tokens: min, max, wmin, wmax, qaoa-direct, and the six rule names with an
// optional -anneal or -mimic suffix (mimic pairs with vertex rules only)
AlgorithmSpec parse_algorithm(const std::string& token);

struct ExperimentRow {
  std::string algorithm;
  int n = 0;
  double q = 0.0;
  int instance = 0;
  std::uint64_t instance_seed = 0;
  std::uint64_t digest = 0;
  double set_value = 0.0;
  double opt_value = 0.0;
  double ratio = 0.0;
  bool feasible = false;
  bool deviation = false;
  bool ok = false;        // error rows keep their metric fields empty
  bool have_graph = false;
  double wall_seconds = 0.0;  // reported separately, outside the deterministic files
};

struct SummaryRow {
  std::string algorithm;
  int n = 0;
  int count = 0;  // rows that completed
  double mean_ratio = 0.0;
  double sem_ratio = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
  std::vector<SummaryRow> summary;
};

// sample standard deviation over sqrt(count); 0 for fewer than two values
double standard_error(const std::vector<double>& values);

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

// rows.csv, summary.csv and metadata.txt are byte-stable for a fixed config;
// wall times go to timing.csv
void write_experiment(const ExperimentResult& result, const std::string& out_dir);

// expected penalized size from the optimized exact state over the true optimum
double qaoa_direct_ratio(const Graph& g, int p, PenaltyWeight lambda, const OptimizerConfig& oc);

}  // namespace iqmis
