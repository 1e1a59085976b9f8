#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "iqmis/graph.hpp"

namespace iqmis {

struct PenaltyWeight {
  double value;
  explicit PenaltyWeight(double v);
};

// Diagonal cost over spins z_i in {-1,+1} (bit 1 maps to spin +1):
//   constant + sum_i fields[i] z_i + sum_{i<j} couplings[{i,j}] z_i z_j
// Qubit ids are dense 0..n-1; removing a qubit shifts the ids above it down.
struct IsingCost {
  int n = 0;
  double constant = 0.0;
  std::vector<double> fields;
  std::map<std::pair<int, int>, double> couplings;
};

// Independent-set objective: selecting vertex i scores -2 r_i, every edge
// with both ends selected costs 4 lambda. encode_mis produces the spin form
// with fields -r_i + lambda deg(i), couplings lambda per edge and constant
// -sum r_i + lambda |E|.
IsingCost encode_mis(const Graph& g, PenaltyWeight lambda);

struct RewardPenalty {
  double reward;       // sum of selected weights
  long penalized;      // number of edges with both ends selected
};
RewardPenalty reward_penalty(const Graph& g, const std::vector<std::uint8_t>& bits);

double evaluate(const IsingCost& cost, const std::vector<int>& spins);

// Fixes spin i to s (+1 or -1), folding its contributions into the constant
// and the neighbouring fields. Remaining qubits are renumbered densely.
IsingCost fix_spin(const IsingCost& cost, int i, int s);

// Enforces z_l = -z_k and eliminates qubit l. Coupling merges that cancel to
// exactly zero are pruned.
IsingCost substitute_anticorrelated(const IsingCost& cost, int l, int k);

// structural fingerprint over n, constant, fields, and couplings
std::uint64_t cost_digest(const IsingCost& cost);

}  // namespace iqmis
