#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "iqmis/ising.hpp"

namespace iqmis {

// Exact statevector over n qubits, little endian: bit i of the basis index
// is qubit i, bit value 1 is spin +1.
struct QuantumState {
  int n = 0;
  std::vector<std::complex<double>> amps;
  std::size_t size() const { return amps.size(); }
};

inline constexpr int kQubitCap = 24;

QuantumState uniform_state(int n, int cap = kQubitCap);

// Cached diagonal of a cost in the computational basis. When the diagonal
// collapses to few distinct levels (integer-graded instances), a code table
// lets the phase walk reuse one sincos per level instead of one per basis
// state.
struct DiagonalTable {
  int n = 0;
  std::vector<double> values;
  std::vector<std::uint16_t> codes;
  std::vector<double> levels;
  bool coded() const { return !codes.empty(); }
  double min_value() const;
};

DiagonalTable build_diagonal(const IsingCost& cost);

// state *= exp(-i gamma C) with C the diagonal cost
void apply_phase(QuantumState& state, const DiagonalTable& table, double gamma);
void apply_phase(QuantumState& state, const IsingCost& cost, double gamma);

// state *= exp(i beta sum_j X_j), i.e. per qubit cos(beta) I + i sin(beta) X
void apply_mixer(QuantumState& state, double beta);

double norm_sq(const QuantumState& state);
std::vector<double> probabilities(const QuantumState& state);

double expect_z(const QuantumState& state, int j);
double expect_zz(const QuantumState& state, int i, int j);
double expect_cost(const QuantumState& state, const IsingCost& cost);
double expect_diag(const QuantumState& state, const DiagonalTable& table);

// total probability of basis states whose diagonal value is within tol of
// the minimum (adiabatic quality measure)
double ground_overlap(const QuantumState& state, const DiagonalTable& table, double tol = 1e-9);

// Seeded measurement sampling; returns basis indices. Estimator only, the
// expectation operations above stay exact.
std::vector<std::uint64_t> sample_basis(const QuantumState& state, int shots, std::uint64_t seed);

}  // namespace iqmis
