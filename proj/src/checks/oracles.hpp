#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "iqmis/classical.hpp"
#include "iqmis/graph.hpp"
#include "iqmis/ising.hpp"
#include "iqmis/statevector.hpp"

namespace iqmis::checks {

// dense row-major complex matrix, sized for a handful of qubits
struct Mat {
  int dim = 0;
  std::vector<std::complex<double>> a;
  explicit Mat(int d) : dim(d), a(static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {}
  std::complex<double>& at(int r, int c) {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c)];
  }
  const std::complex<double>& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c)];
  }
};

Mat identity(int dim);
Mat multiply(const Mat& x, const Mat& y);
// Taylor series with scaling and squaring
Mat expm(const Mat& x);

// e^{-i beta B} for B = -sum_t X_t, built densely and exponentiated
Mat mixer_unitary(int n, double beta);
// e^{-i gamma C} with the diagonal taken from direct spin evaluation
Mat phase_unitary(const IsingCost& cost, double gamma);

QuantumState apply_unitary(const Mat& u, const QuantumState& state);

// selection score counted straight off the bitstring: -2 r(x) + 4 lambda p(x)
double objective_oracle(const Graph& g, double lambda, const std::vector<std::uint8_t>& bits);

struct EnumeratedBest {
  double value = 0.0;
  std::uint64_t optima = 0;        // number of optimal sets
  std::vector<std::uint8_t> bits;  // lexicographically smallest optimum
};
// full subset scan against the adjacency matrix; n <= 20
EnumeratedBest enumerate_best_set(const Graph& g);

// same draw sequence as er_connected, union-find connectivity instead of DFS
Graph er_reference(int n, double q, std::uint64_t seed, int max_attempts = 10000);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph petersen_graph();

struct CorrectionReplay {
  std::vector<double> scores;  // penalized objective before and after every flip
  std::vector<std::uint8_t> bits;
};
CorrectionReplay correct_replay(const Graph& g, double lambda, std::vector<std::uint8_t> bits,
                                std::uint64_t seed, FlipPolicy policy);

}  // namespace iqmis::checks
