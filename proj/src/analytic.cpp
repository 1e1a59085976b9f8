#include "iqmis/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iqmis/nelder_mead.hpp"
#include "iqmis/rng.hpp"

namespace iqmis {

namespace {

double powi(double base, int e) {
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

double j1(int d, double beta, double gamma, double lambda) {
  return j1_weighted(d, 1.0, beta, gamma, lambda);
}

double j1_weighted(int d, double r, double beta, double gamma, double lambda) {
  if (d < 0) throw std::invalid_argument("j1: negative degree");
  return std::sin(2.0 * beta) * powi(std::cos(2.0 * gamma * lambda), d) *
         std::sin(2.0 * gamma * (r - d * lambda));
}

double j2_leading(int d, double beta1, double beta2, double gamma1, double gamma2, double lambda) {
  if (d < 0) throw std::invalid_argument("j2_leading: negative degree");
  const double c = lambda * d - 1.0;
  const double cg1 = powi(std::cos(2.0 * gamma1 * lambda), d);
  const double cg2 = powi(std::cos(2.0 * gamma2 * lambda), d);
  const double t1 = std::cos(2.0 * beta2) * std::sin(2.0 * beta1) * std::sin(2.0 * gamma1 * (1.0 - lambda * d)) * cg1;
  const double t2 = -std::sin(2.0 * beta2) * std::cos(2.0 * gamma2 * c) * cg2 * std::cos(2.0 * beta1) *
                    std::sin(2.0 * gamma1 * (lambda * d - 1.0)) * cg1;
  const double t3 = std::sin(2.0 * beta2) * std::sin(2.0 * gamma2 * c) * cg2 *
                    std::cos(2.0 * gamma1 * (lambda * d - 1.0)) * cg1;
  return t1 + t2 + t3;
}

double jij_p1(int d_i, int d_j, int t, double beta, double gamma, double lambda) {
  if (d_i < 1 || d_j < 1 || t < 0) throw std::invalid_argument("jij_p1: bad edge parameters");
  const double c = std::cos(2.0 * gamma * lambda);
  const double s4b = std::sin(4.0 * beta);
  const double s2b = std::sin(2.0 * beta);
  const double lin = 2.0 * s4b * std::sin(2.0 * gamma * lambda) * std::cos(2.0 * gamma * (1.0 - lambda));
  const double quad = 8.0 * s2b * s2b;
  const double c4 = std::cos(4.0 * gamma * (2.0 * lambda - 1.0));
  return lin * powi(c, d_i) + lin * powi(c, d_j) + quad * powi(c, d_i + d_j - 2 * t) * c4 -
         quad * powi(c, d_i + d_j) * c4 + quad * powi(c, d_i + d_j - 2 * t);
}

MisView mis_view(const IsingCost& cost) {
  MisView view;
  view.degree.assign(static_cast<std::size_t>(cost.n), 0);
  bool have_lambda = false;
  for (const auto& [key, J] : cost.couplings) {
    if (!have_lambda) {
      view.lambda = J;
      have_lambda = true;
    } else if (J != view.lambda) {
      throw std::invalid_argument("mis_view: couplings are not a single penalty weight");
    }
    ++view.degree[static_cast<std::size_t>(key.first)];
    ++view.degree[static_cast<std::size_t>(key.second)];
  }
  if (have_lambda && !(view.lambda > 0.0))
    throw std::invalid_argument("mis_view: penalty weight must be positive");
  view.reward.resize(static_cast<std::size_t>(cost.n));
  for (int i = 0; i < cost.n; ++i) {
    const double r = view.lambda * view.degree[static_cast<std::size_t>(i)] - cost.fields[static_cast<std::size_t>(i)];
    if (!(r > 0.0)) throw std::invalid_argument("mis_view: recovered rewards must be positive");
    view.reward[static_cast<std::size_t>(i)] = r;
  }
  return view;
}

CorrelatorReport mimic_correlators(const IsingCost& cost, const Angles& angles) {
  if (angles.p() != 1) throw std::invalid_argument("mimic_correlators: depth-1 only");
  const MisView view = mis_view(cost);
  const double gamma = angles.gammas[0];
  const double beta = angles.betas[0];
  CorrelatorReport rep;
  rep.z.resize(static_cast<std::size_t>(cost.n));
  for (int i = 0; i < cost.n; ++i)
    rep.z[static_cast<std::size_t>(i)] =
        j1_weighted(view.degree[static_cast<std::size_t>(i)], view.reward[static_cast<std::size_t>(i)], beta, gamma,
                    view.lambda);
  rep.cost_expectation = cost.constant;
  for (int i = 0; i < cost.n; ++i)
    rep.cost_expectation += cost.fields[static_cast<std::size_t>(i)] * rep.z[static_cast<std::size_t>(i)];
  for (const auto& [key, J] : cost.couplings) {
    const int di = view.degree[static_cast<std::size_t>(key.first)];
    const int dj = view.degree[static_cast<std::size_t>(key.second)];
    // triangle count through the pair, recovered from shared coupling partners
    int t = 0;
    for (int w = 0; w < cost.n; ++w) {
      if (w == key.first || w == key.second) continue;
      auto has = [&](int a, int b) {
        return cost.couplings.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
      };
      if (has(key.first, w) && has(key.second, w)) ++t;
    }
    const double raw = jij_p1(di, dj, t, beta, gamma, view.lambda);
    rep.zz[key] = std::min(1.0, std::max(-1.0, raw));
    rep.cost_expectation += J * rep.zz[key];
  }
  return rep;
}

OptimizeResult mimic_optimize(const IsingCost& cost, const OptimizerConfig& cfg) {
  const MisView view = mis_view(cost);
  auto objective = [&](const std::vector<double>& x) {
    const double gamma = x[0];
    const double beta = x[1];
    double acc = cost.constant;
    for (int i = 0; i < cost.n; ++i)
      acc += cost.fields[static_cast<std::size_t>(i)] *
             j1_weighted(view.degree[static_cast<std::size_t>(i)], view.reward[static_cast<std::size_t>(i)], beta,
                         gamma, view.lambda);
    return acc;
  };
  const std::vector<double> steps{0.1 * (cfg.gamma_hi - cfg.gamma_lo), 0.1 * (cfg.beta_hi - cfg.beta_lo)};
  bool have_best = false;
  NmResult best;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(mix64(cfg.seed, static_cast<std::uint64_t>(r)));
    const std::vector<double> x0{rng.uniform(cfg.gamma_lo, cfg.gamma_hi), rng.uniform(cfg.beta_lo, cfg.beta_hi)};
    NmResult res = nelder_mead(objective, x0, steps, cfg.tolerance, cfg.max_evals);
    if (!have_best || res.value < best.value) {
      best = std::move(res);
      have_best = true;
    }
  }
  OptimizeResult out;
  out.angles.gammas = {best.x[0]};
  out.angles.betas = {best.x[1]};
  out.value = best.value;
  return out;
}

}  // namespace iqmis
