#include "iqmis/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "iqmis/kernels.hpp"
#include "iqmis/nelder_mead.hpp"
#include "iqmis/rng.hpp"

namespace iqmis {

namespace {

void check_angles(const Angles& a) {
  if (a.gammas.size() != a.betas.size()) throw std::invalid_argument("angles: layer count mismatch");
  if (a.gammas.empty()) throw std::invalid_argument("angles: need at least one layer");
}

// evaluation context reused across optimizer calls; avoids per-eval allocation
struct LayerWalker {
  const DiagonalTable& table;
  std::vector<std::complex<double>> phases;

  explicit LayerWalker(const DiagonalTable& t) : table(t) {
    if (t.coded()) phases.resize(t.levels.size());
  }

  void run(QuantumState& state, const Angles& a) {
    const auto& k = kernels::ops();
    const std::size_t m = state.size();
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(m));
    std::fill(state.amps.begin(), state.amps.end(), std::complex<double>(amp0, 0.0));
    for (int layer = 0; layer < a.p(); ++layer) {
      const double gamma = a.gammas[static_cast<std::size_t>(layer)];
      const double beta = a.betas[static_cast<std::size_t>(layer)];
      if (table.coded()) {
        for (std::size_t i = 0; i < table.levels.size(); ++i) {
          const double ang = -gamma * table.levels[i];
          phases[i] = {std::cos(ang), std::sin(ang)};
        }
        k.phase_apply_coded(state.amps.data(), table.codes.data(), m, phases.data());
      } else {
        k.phase_apply(state.amps.data(), table.values.data(), m, gamma);
      }
      const double c = std::cos(beta);
      const double s = std::sin(beta);
      for (int t = 0; t < state.n; ++t) k.mixer(state.amps.data(), m, t, c, s);
    }
  }
};

}  // namespace

QuantumState qaoa_state(const DiagonalTable& table, const Angles& angles) {
  check_angles(angles);
  QuantumState state = uniform_state(table.n);
  LayerWalker walker(table);
  walker.run(state, angles);
  return state;
}

QuantumState qaoa_state(const IsingCost& cost, const Angles& angles) {
  return qaoa_state(build_diagonal(cost), angles);
}

OptimizeResult optimize_angles(const IsingCost& cost, int p, const OptimizerConfig& cfg) {
  if (p < 1) throw std::invalid_argument("optimize_angles: need at least one layer");
  if (cfg.restarts < 1 || cfg.max_evals < 1) throw std::invalid_argument("optimize_angles: bad budget");
  const DiagonalTable table = build_diagonal(cost);
  LayerWalker walker(table);
  QuantumState state = uniform_state(cost.n);
  std::vector<double> probs(state.size());
  Angles work;
  work.gammas.resize(static_cast<std::size_t>(p));
  work.betas.resize(static_cast<std::size_t>(p));

  const auto& k = kernels::ops();
  auto objective = [&](const std::vector<double>& x) {
    for (int i = 0; i < p; ++i) {
      work.gammas[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
      work.betas[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(p + i)];
    }
    walker.run(state, work);
    k.probabilities(state.amps.data(), probs.data(), probs.size());
    return k.dot(table.values.data(), probs.data(), probs.size());
  };

  const std::size_t d = static_cast<std::size_t>(2 * p);
  std::vector<double> steps(d);
  for (int i = 0; i < p; ++i) {
    steps[static_cast<std::size_t>(i)] = 0.1 * (cfg.gamma_hi - cfg.gamma_lo);
    steps[static_cast<std::size_t>(p + i)] = 0.1 * (cfg.beta_hi - cfg.beta_lo);
  }

  bool have_best = false;
  NmResult best;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(mix64(cfg.seed, static_cast<std::uint64_t>(r)));
    std::vector<double> x0(d);
    for (int i = 0; i < p; ++i) {
      x0[static_cast<std::size_t>(i)] = rng.uniform(cfg.gamma_lo, cfg.gamma_hi);
      x0[static_cast<std::size_t>(p + i)] = rng.uniform(cfg.beta_lo, cfg.beta_hi);
    }
    NmResult res = nelder_mead(objective, x0, steps, cfg.tolerance, cfg.max_evals);
    if (!have_best || res.value < best.value) {
      best = std::move(res);
      have_best = true;
    }
  }

  OptimizeResult out;
  out.angles.gammas.assign(best.x.begin(), best.x.begin() + p);
  out.angles.betas.assign(best.x.begin() + p, best.x.end());
  out.value = best.value;
  return out;
}

CorrelatorReport report_from_state(const QuantumState& state, const IsingCost& cost,
                                   const DiagonalTable& table) {
  const auto& k = kernels::ops();
  std::vector<double> probs(state.size());
  k.probabilities(state.amps.data(), probs.data(), probs.size());
  CorrelatorReport rep;
  rep.z.resize(static_cast<std::size_t>(state.n));
  auto clamp1 = [](double v) { return std::min(1.0, std::max(-1.0, v)); };
  for (int j = 0; j < state.n; ++j)
    rep.z[static_cast<std::size_t>(j)] = clamp1(k.signed_sum_bit(probs.data(), probs.size(), j));
  for (const auto& [key, J] : cost.couplings) {
    (void)J;
    rep.zz[key] = clamp1(k.signed_sum_pair(probs.data(), probs.size(), key.first, key.second));
  }
  rep.cost_expectation = k.dot(table.values.data(), probs.data(), probs.size());
  return rep;
}

CorrelatorReport correlators(const IsingCost& cost, const Angles& angles) {
  const DiagonalTable table = build_diagonal(cost);
  const QuantumState state = qaoa_state(table, angles);
  return report_from_state(state, cost, table);
}

namespace {

inline void fnv_doubles(std::uint64_t& h, const double* data, std::size_t count) {
  const auto* p = reinterpret_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < count * sizeof(double); ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

std::uint64_t report_digest(const CorrelatorReport& report) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv_doubles(h, report.z.data(), report.z.size());
  for (const auto& [key, v] : report.zz) {
    const double kk[2] = {static_cast<double>(key.first), static_cast<double>(key.second)};
    fnv_doubles(h, kk, 2);
    fnv_doubles(h, &v, 1);
  }
  fnv_doubles(h, &report.cost_expectation, 1);
  return h;
}

}  // namespace iqmis
