#include "iqmis/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace iqmis {

NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, const std::vector<double>& steps,
                     double tol, int max_evals) {
  const std::size_t d = x0.size();
  if (d == 0) throw std::invalid_argument("nelder_mead: empty start point");
  if (steps.size() != d) throw std::invalid_argument("nelder_mead: step count mismatch");

  std::vector<std::vector<double>> xs(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) xs[i + 1][i] += steps[i];
  std::vector<double> fs(d + 1);
  int evals = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    fs[i] = f(xs[i]);
    ++evals;
  }

  std::vector<std::size_t> order(d + 1);
  auto sort_order = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
  };

  std::vector<double> centroid(d), xr(d), xe(d), xc(d);
  while (evals < max_evals) {
    sort_order();
    const std::size_t best = order[0], worst = order[d], second = order[d - 1];
    if (fs[worst] - fs[best] <= tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < d; ++k) centroid[k] += xs[i][k];
    }
    for (std::size_t k = 0; k < d; ++k) centroid[k] /= static_cast<double>(d);

    for (std::size_t k = 0; k < d; ++k) xr[k] = centroid[k] + (centroid[k] - xs[worst][k]);
    const double fr = f(xr);
    ++evals;

    if (fr < fs[best]) {
      for (std::size_t k = 0; k < d; ++k) xe[k] = centroid[k] + 2.0 * (centroid[k] - xs[worst][k]);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[second]) {
      xs[worst] = xr;
      fs[worst] = fr;
      continue;
    }

    bool shrink = false;
    if (fr < fs[worst]) {
      for (std::size_t k = 0; k < d; ++k) xc[k] = centroid[k] + 0.5 * (xr[k] - centroid[k]);
      const double fc = f(xc);
      ++evals;
      if (fc <= fr) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        shrink = true;
      }
    } else {
      for (std::size_t k = 0; k < d; ++k) xc[k] = centroid[k] - 0.5 * (centroid[k] - xs[worst][k]);
      const double fc = f(xc);
      ++evals;
      if (fc < fs[worst]) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t i = 0; i <= d; ++i) {
        if (i == best) continue;
        for (std::size_t k = 0; k < d; ++k) xs[i][k] = xs[best][k] + 0.5 * (xs[i][k] - xs[best][k]);
        fs[i] = f(xs[i]);
        ++evals;
        if (evals >= max_evals) break;
      }
    }
  }

  sort_order();
  return {xs[order[0]], fs[order[0]], evals};
}

}  // namespace iqmis
