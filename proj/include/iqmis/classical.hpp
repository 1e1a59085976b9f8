#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iqmis/graph.hpp"
#include "iqmis/ising.hpp"

namespace iqmis {

struct TraceEntry {
  std::string kind;
  std::vector<int> vertices;      // original ids
  std::uint64_t snapshot_digest;  // digest of the live induced subgraph before the move
};

struct SolveResult {
  std::vector<std::uint8_t> bits;
  double set_value = 0.0;
  bool feasible = false;
  std::vector<TraceEntry> trace;
};

bool is_independent(const Graph& g, const std::vector<std::uint8_t>& bits);
double set_weight(const Graph& g, const std::vector<std::uint8_t>& bits);

// r(x) - 2 lambda p(x); the quantity the flip correction never decreases
double penalized_objective(const Graph& g, PenaltyWeight lambda, const std::vector<std::uint8_t>& bits);

// Greedy selection by minimum live degree (ties to the lowest original id),
// removing the closed neighbourhood of each pick.
SolveResult greedy_min(const Graph& g);
// Greedy deletion of a maximum-degree vertex until no edges remain.
SolveResult greedy_max(const Graph& g);
// Weighted variants: select argmax r/(d+1); delete argmin r/(d(d+1)) among
// non-isolated vertices.
SolveResult greedy_wmin(const Graph& g);
SolveResult greedy_wmax(const Graph& g);

// Exact maximum-weight independent set, n <= 24. Ties resolve to the
// lexicographically smallest bitstring.
SolveResult brute_force(const Graph& g);

enum class FlipPolicy { uniform_endpoint, lighter_endpoint };

// Repairs an infeasible bitstring by repeatedly picking a random penalized
// edge and dropping one endpoint until independent. For lambda >= 1/2 on
// unit weights the penalized objective never decreases along the way.
std::vector<std::uint8_t> correct(const Graph& g, PenaltyWeight lambda, std::vector<std::uint8_t> bits,
                                  std::uint64_t seed, FlipPolicy policy = FlipPolicy::uniform_endpoint);

}  // namespace iqmis
