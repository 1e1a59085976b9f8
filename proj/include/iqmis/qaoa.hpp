#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "iqmis/statevector.hpp"

namespace iqmis {

struct Angles {
  std::vector<double> gammas;
  std::vector<double> betas;
  int p() const { return static_cast<int>(gammas.size()); }
};

struct OptimizerConfig {
  int restarts = 10;
  int max_evals = 2000;  // per restart
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
  // seeded restart initialization ranges; the search itself is unconstrained
  double gamma_lo = 0.0;
  double gamma_hi = 3.141592653589793;
  double beta_lo = 0.0;
  double beta_hi = 1.5707963267948966;
};

struct OptimizeResult {
  Angles angles;
  double value = 0.0;  // expectation of the cost at the returned angles
};

// Alternating phase/mixer layers on the uniform start state.
QuantumState qaoa_state(const IsingCost& cost, const Angles& angles);
QuantumState qaoa_state(const DiagonalTable& table, const Angles& angles);

// Multi-start downhill simplex over 2p raw angles, restarts seeded from
// config.seed. Deterministic; ties between restarts keep the earliest.
OptimizeResult optimize_angles(const IsingCost& cost, int p, const OptimizerConfig& cfg);

struct CorrelatorReport {
  std::vector<double> z;                          // per live qubit
  std::map<std::pair<int, int>, double> zz;       // per cost coupling
  double cost_expectation = 0.0;
};

CorrelatorReport report_from_state(const QuantumState& state, const IsingCost& cost,
                                   const DiagonalTable& table);
CorrelatorReport correlators(const IsingCost& cost, const Angles& angles);

std::uint64_t report_digest(const CorrelatorReport& report);

}  // namespace iqmis
