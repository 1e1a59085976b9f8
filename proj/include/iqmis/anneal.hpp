#pragma once

#include "iqmis/qaoa.hpp"

namespace iqmis {

// Interpolating evolution between the transverse-field mixer and the diagonal
// cost. The default orientation starts on the mixer (whose ground state is
// the uniform start state) and ends on the cost. `reversed` selects the
// falling orientation instead, kept for comparison runs.
struct AnnealSchedule {
  double tau = 2.0;
  int steps = 0;  // 0 selects ceil(tau / 0.02)
  bool reversed = false;
};

int effective_steps(const AnnealSchedule& sched);

// Second-order split stepping: half mixer, full phase, half mixer per step,
// with the interpolation weight taken at the step midpoint.
QuantumState anneal(const IsingCost& cost, const AnnealSchedule& sched);

CorrelatorReport anneal_correlators(const IsingCost& cost, const AnnealSchedule& sched);

}  // namespace iqmis
