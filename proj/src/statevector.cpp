#include "iqmis/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iqmis/kernels.hpp"
#include "iqmis/rng.hpp"

namespace iqmis {

QuantumState uniform_state(int n, int cap) {
  if (n < 1) throw std::invalid_argument("uniform_state: need at least one qubit");
  if (n > cap) throw std::invalid_argument("uniform_state: qubit count above cap");
  QuantumState s;
  s.n = n;
  const std::size_t m = std::size_t{1} << n;
  s.amps.assign(m, std::complex<double>(1.0 / std::sqrt(static_cast<double>(m)), 0.0));
  return s;
}

double DiagonalTable::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

DiagonalTable build_diagonal(const IsingCost& cost) {
  if (cost.n < 1) throw std::invalid_argument("build_diagonal: need at least one qubit");
  if (cost.n > kQubitCap) throw std::invalid_argument("build_diagonal: qubit count above cap");
  DiagonalTable t;
  t.n = cost.n;
  const std::size_t m = std::size_t{1} << cost.n;
  t.values.assign(m, cost.constant);
  const auto& k = kernels::ops();
  for (int i = 0; i < cost.n; ++i) {
    const double h = cost.fields[static_cast<std::size_t>(i)];
    if (h != 0.0) k.diag_field(t.values.data(), m, i, h);
  }
  for (const auto& [key, J] : cost.couplings)
    if (J != 0.0) k.diag_coupling(t.values.data(), m, key.first, key.second, J);

  // code the table when few distinct levels exist (exact equality grouping)
  std::vector<double> sorted = t.values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t max_levels = std::min<std::size_t>(65535, m / 4);
  if (sorted.size() <= max_levels) {
    t.levels = std::move(sorted);
    t.codes.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto it = std::lower_bound(t.levels.begin(), t.levels.end(), t.values[i]);
      t.codes[i] = static_cast<std::uint16_t>(it - t.levels.begin());
    }
  }
  return t;
}

namespace {

void check_state(const QuantumState& s) {
  if (s.n < 1 || s.amps.size() != (std::size_t{1} << s.n))
    throw std::invalid_argument("statevector: amplitude count does not match qubit count");
}

}  // namespace

void apply_phase(QuantumState& state, const DiagonalTable& table, double gamma) {
  check_state(state);
  if (table.n != state.n) throw std::invalid_argument("apply_phase: table size mismatch");
  const auto& k = kernels::ops();
  if (table.coded()) {
    std::vector<std::complex<double>> phases(table.levels.size());
    for (std::size_t i = 0; i < table.levels.size(); ++i) {
      const double ang = -gamma * table.levels[i];
      phases[i] = {std::cos(ang), std::sin(ang)};
    }
    k.phase_apply_coded(state.amps.data(), table.codes.data(), state.size(), phases.data());
  } else {
    k.phase_apply(state.amps.data(), table.values.data(), state.size(), gamma);
  }
}

void apply_phase(QuantumState& state, const IsingCost& cost, double gamma) {
  apply_phase(state, build_diagonal(cost), gamma);
}

void apply_mixer(QuantumState& state, double beta) {
  check_state(state);
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const auto& k = kernels::ops();
  for (int t = 0; t < state.n; ++t) k.mixer(state.amps.data(), state.size(), t, c, s);
}

double norm_sq(const QuantumState& state) {
  check_state(state);
  return kernels::ops().norm_sq(state.amps.data(), state.size());
}

std::vector<double> probabilities(const QuantumState& state) {
  check_state(state);
  std::vector<double> p(state.size());
  kernels::ops().probabilities(state.amps.data(), p.data(), state.size());
  return p;
}

double expect_z(const QuantumState& state, int j) {
  check_state(state);
  if (j < 0 || j >= state.n) throw std::invalid_argument("expect_z: qubit out of range");
  const std::vector<double> p = probabilities(state);
  return kernels::ops().signed_sum_bit(p.data(), p.size(), j);
}

double expect_zz(const QuantumState& state, int i, int j) {
  check_state(state);
  if (i < 0 || i >= state.n || j < 0 || j >= state.n || i == j)
    throw std::invalid_argument("expect_zz: invalid qubit pair");
  const std::vector<double> p = probabilities(state);
  return kernels::ops().signed_sum_pair(p.data(), p.size(), std::min(i, j), std::max(i, j));
}

double expect_cost(const QuantumState& state, const IsingCost& cost) {
  return expect_diag(state, build_diagonal(cost));
}

double expect_diag(const QuantumState& state, const DiagonalTable& table) {
  check_state(state);
  if (table.n != state.n) throw std::invalid_argument("expect_diag: table size mismatch");
  const std::vector<double> p = probabilities(state);
  return kernels::ops().dot(table.values.data(), p.data(), p.size());
}

double ground_overlap(const QuantumState& state, const DiagonalTable& table, double tol) {
  check_state(state);
  if (table.n != state.n) throw std::invalid_argument("ground_overlap: table size mismatch");
  const double lo = table.min_value();
  const std::vector<double> p = probabilities(state);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (table.values[i] <= lo + tol) acc += p[i];
  return acc;
}

std::vector<std::uint64_t> sample_basis(const QuantumState& state, int shots, std::uint64_t seed) {
  check_state(state);
  if (shots < 0) throw std::invalid_argument("sample_basis: negative shot count");
  const std::vector<double> p = probabilities(state);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  Rng rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (int s = 0; s < shots; ++s) {
    const double u = rng.uniform01() * acc;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    out.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
  }
  return out;
}

}  // namespace iqmis
