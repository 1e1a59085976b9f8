#pragma once

#include <functional>
#include <vector>

namespace iqmis {

struct NmResult {
  std::vector<double> x;
  double value = 0.0;
  int evals = 0;
};

// Downhill simplex minimizer (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5). Deterministic given the start point. Stops when the value
// spread across the simplex drops below tol or the evaluation budget is hit.
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, const std::vector<double>& steps,
                     double tol, int max_evals);

}  // namespace iqmis
