#include "iqmis/anneal.hpp"

#include <cmath>
#include <stdexcept>

namespace iqmis {

int effective_steps(const AnnealSchedule& sched) {
  if (!(sched.tau > 0.0)) throw std::invalid_argument("anneal: tau must be positive");
  if (sched.steps < 0) throw std::invalid_argument("anneal: negative step count");
  if (sched.steps > 0) return sched.steps;
  return static_cast<int>(std::ceil(sched.tau / 0.02));
}

QuantumState anneal(const IsingCost& cost, const AnnealSchedule& sched) {
  const int steps = effective_steps(sched);
  const double dt = sched.tau / steps;
  const DiagonalTable table = build_diagonal(cost);
  QuantumState state = uniform_state(cost.n);
  for (int k = 0; k < steps; ++k) {
    double s = (k + 0.5) / steps;
    if (sched.reversed) s = 1.0 - s;
    apply_mixer(state, 0.5 * dt * (1.0 - s));
    apply_phase(state, table, dt * s);
    apply_mixer(state, 0.5 * dt * (1.0 - s));
  }
  return state;
}

CorrelatorReport anneal_correlators(const IsingCost& cost, const AnnealSchedule& sched) {
  const DiagonalTable table = build_diagonal(cost);
  const QuantumState state = anneal(cost, sched);
  return report_from_state(state, cost, table);
}

}  // namespace iqmis
