#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iqmis/anneal.hpp"
#include "iqmis/classical.hpp"
#include "iqmis/graph.hpp"
#include "iqmis/ising.hpp"
#include "iqmis/qaoa.hpp"

namespace iqmis {

enum class Rule { minq, maxq, mmq, wmmq, edge_anti, edge_corr };

std::string rule_name(Rule rule);
Rule parse_rule(const std::string& name);

struct QaoaBackend {
  int p = 1;
  OptimizerConfig optimizer;
};

struct AnnealBackend {
  AnnealSchedule schedule;
};

// Closed-form expectations; no statevector. Fixed angles when provided,
// otherwise a fresh two-angle search per iteration.
struct MimicBackend {
  std::optional<Angles> angles;
  OptimizerConfig optimizer;
};

using BackendConfig = std::variant<QaoaBackend, AnnealBackend, MimicBackend>;

struct IqaConfig {
  Rule rule = Rule::minq;
  BackendConfig backend = QaoaBackend{};
  double lambda = 1.0;
  int brute_force_threshold = 10;  // remainder of this size or smaller is solved exactly
  std::uint64_t seed = 0;
  FlipPolicy flip_policy = FlipPolicy::uniform_endpoint;
};

enum class DecisionKind { fix_on, fix_off, fix_pair_off, anti_substitute, terminal };

struct IqaStep {
  int index = 0;
  DecisionKind kind = DecisionKind::fix_on;
  // original ids; fix_on lists the vertex then its removed neighbors,
  // anti_substitute lists the eliminated vertex then the one it mirrors
  std::vector<int> vertices;
  std::uint64_t report_digest = 0;
  bool deviation = false;       // selection no degree rule could have made
  bool degenerate_tie = false;  // winner drawn from near-equal ranking keys
  int live_after = 0;
  // reduced problem after the move; for terminal steps, the problem it solved
  std::uint64_t snapshot_digest = 0;
};

struct IqaTrace {
  std::vector<IqaStep> steps;
  std::map<int, std::uint8_t> terminal;  // original id -> bit from the terminal solve
};

struct IqaResult {
  std::vector<std::uint8_t> bits;  // raw reconstruction over original ids
  double set_value = 0.0;          // weight of the corrected set
  bool feasible = false;           // raw reconstruction already independent
  std::vector<std::uint8_t> corrected;
  IqaTrace trace;
  bool deviation_seen = false;
};

// Iterative selection and reduction. Vertex rules keep a reduced graph and
// re-encode it each round; edge_anti abandons the graph view and walks the
// generic cost via anti-correlation substitutions, so only that rule can
// return an infeasible raw bitstring.
IqaResult run_iqa(const Graph& g, const IqaConfig& cfg);

// Replays a trace into a total assignment; throws if any vertex stays unset.
std::vector<std::uint8_t> back_propagate(const IqaTrace& trace, int n_original);

}  // namespace iqmis
