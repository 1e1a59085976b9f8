#include "iqmis/classical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "iqmis/rng.hpp"

namespace iqmis {

bool is_independent(const Graph& g, const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != g.n()) throw std::invalid_argument("is_independent: length mismatch");
  for (auto [u, v] : g.edges())
    if (bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)]) return false;
  return true;
}

double set_weight(const Graph& g, const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != g.n()) throw std::invalid_argument("set_weight: length mismatch");
  double acc = 0.0;
  for (int v = 0; v < g.n(); ++v)
    if (bits[static_cast<std::size_t>(v)]) acc += g.weight(v);
  return acc;
}

double penalized_objective(const Graph& g, PenaltyWeight lambda, const std::vector<std::uint8_t>& bits) {
  const RewardPenalty rp = reward_penalty(g, bits);
  return rp.reward - 2.0 * lambda.value * static_cast<double>(rp.penalized);
}

namespace {

Graph induced(const Graph& g, const std::vector<char>& live) {
  std::vector<int> remap(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  std::vector<double> weights;
  for (int v = 0; v < g.n(); ++v) {
    if (!live[static_cast<std::size_t>(v)]) continue;
    remap[static_cast<std::size_t>(v)] = next++;
    weights.push_back(g.weight(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    const int nu = remap[static_cast<std::size_t>(u)];
    const int nv = remap[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  return Graph(next, std::move(edges), std::move(weights));
}

int live_degree(const Graph& g, const std::vector<char>& live, int v) {
  int d = 0;
  for (int w : g.neighbors(v))
    if (live[static_cast<std::size_t>(w)]) ++d;
  return d;
}

}  // namespace

SolveResult greedy_min(const Graph& g) {
  SolveResult res;
  res.bits.assign(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> live(static_cast<std::size_t>(g.n()), 1);
  int remaining = g.n();
  while (remaining > 0) {
    int pick = -1, pick_deg = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (!live[static_cast<std::size_t>(v)]) continue;
      const int d = live_degree(g, live, v);
      if (pick < 0 || d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    res.trace.push_back({"select", {pick}, graph_digest(induced(g, live))});
    res.bits[static_cast<std::size_t>(pick)] = 1;
    live[static_cast<std::size_t>(pick)] = 0;
    --remaining;
    for (int w : g.neighbors(pick)) {
      if (live[static_cast<std::size_t>(w)]) {
        live[static_cast<std::size_t>(w)] = 0;
        --remaining;
      }
    }
  }
  res.set_value = set_weight(g, res.bits);
  res.feasible = true;
  return res;
}

SolveResult greedy_max(const Graph& g) {
  SolveResult res;
  res.bits.assign(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> live(static_cast<std::size_t>(g.n()), 1);
  for (;;) {
    int pick = -1, pick_deg = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (!live[static_cast<std::size_t>(v)]) continue;
      const int d = live_degree(g, live, v);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    if (pick < 0) break;  // edgeless
    res.trace.push_back({"delete", {pick}, graph_digest(induced(g, live))});
    live[static_cast<std::size_t>(pick)] = 0;
  }
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v)
    if (live[static_cast<std::size_t>(v)]) {
      res.bits[static_cast<std::size_t>(v)] = 1;
      rest.push_back(v);
    }
  res.trace.push_back({"collect", rest, graph_digest(induced(g, live))});
  res.set_value = set_weight(g, res.bits);
  res.feasible = true;
  return res;
}

SolveResult greedy_wmin(const Graph& g) {
  SolveResult res;
  res.bits.assign(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> live(static_cast<std::size_t>(g.n()), 1);
  int remaining = g.n();
  while (remaining > 0) {
    int pick = -1, pick_deg = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (!live[static_cast<std::size_t>(v)]) continue;
      const int d = live_degree(g, live, v);
      // argmax r/(d+1) by cross multiplication
      if (pick < 0 || g.weight(v) * (pick_deg + 1) > g.weight(pick) * (d + 1)) {
        pick = v;
        pick_deg = d;
      }
    }
    res.trace.push_back({"select", {pick}, graph_digest(induced(g, live))});
    res.bits[static_cast<std::size_t>(pick)] = 1;
    live[static_cast<std::size_t>(pick)] = 0;
    --remaining;
    for (int w : g.neighbors(pick)) {
      if (live[static_cast<std::size_t>(w)]) {
        live[static_cast<std::size_t>(w)] = 0;
        --remaining;
      }
    }
  }
  res.set_value = set_weight(g, res.bits);
  res.feasible = true;
  return res;
}

SolveResult greedy_wmax(const Graph& g) {
  SolveResult res;
  res.bits.assign(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> live(static_cast<std::size_t>(g.n()), 1);
  for (;;) {
    int pick = -1, pick_deg = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (!live[static_cast<std::size_t>(v)]) continue;
      const int d = live_degree(g, live, v);
      if (d < 1) continue;  // isolated vertices are never deleted
      // argmin r/(d(d+1)) by cross multiplication
      if (pick < 0 ||
          g.weight(v) * (pick_deg * (pick_deg + 1)) < g.weight(pick) * (d * (d + 1))) {
        pick = v;
        pick_deg = d;
      }
    }
    if (pick < 0) break;
    res.trace.push_back({"delete", {pick}, graph_digest(induced(g, live))});
    live[static_cast<std::size_t>(pick)] = 0;
  }
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v)
    if (live[static_cast<std::size_t>(v)]) {
      res.bits[static_cast<std::size_t>(v)] = 1;
      rest.push_back(v);
    }
  res.trace.push_back({"collect", rest, graph_digest(induced(g, live))});
  res.set_value = set_weight(g, res.bits);
  res.feasible = true;
  return res;
}

namespace {

// lexicographic bitstring order: the lowest differing vertex decides
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t d = a ^ b;
  if (d == 0) return false;
  return ((a >> std::countr_zero(d)) & 1u) == 0;
}

struct ExactSearch {
  const Graph& g;
  std::vector<std::uint32_t> adj;
  std::vector<double> weight;
  double best_val = -1.0;
  std::uint32_t best_mask = 0;

  double remaining_weight(std::uint32_t cand) const {
    double acc = 0.0;
    while (cand) {
      const int v = std::countr_zero(cand);
      acc += weight[static_cast<std::size_t>(v)];
      cand &= cand - 1;
    }
    return acc;
  }

  void consider(double val, std::uint32_t mask) {
    if (val > best_val || (val == best_val && lex_less(mask, best_mask))) {
      best_val = val;
      best_mask = mask;
    }
  }

  void search(std::uint32_t cand, std::uint32_t mask, double val) {
    if (val + remaining_weight(cand) < best_val) return;
    if (cand == 0) {
      consider(val, mask);
      return;
    }
    const int v = std::countr_zero(cand);
    const std::uint32_t bit = std::uint32_t{1} << v;
    search(cand & ~adj[static_cast<std::size_t>(v)] & ~bit, mask | bit,
           val + weight[static_cast<std::size_t>(v)]);
    search(cand & ~bit, mask, val);
  }
};

}  // namespace

SolveResult brute_force(const Graph& g) {
  if (g.n() > 24) throw std::invalid_argument("brute_force: instance too large");
  ExactSearch ex{g, {}, g.weights(), -1.0, 0};
  ex.adj.assign(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    ex.adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
    ex.adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
  }
  // greedy incumbent sharpens pruning without affecting tie resolution
  const SolveResult seed = greedy_min(g);
  std::uint32_t seed_mask = 0;
  for (int v = 0; v < g.n(); ++v)
    if (seed.bits[static_cast<std::size_t>(v)]) seed_mask |= std::uint32_t{1} << v;
  ex.best_val = seed.set_value;
  ex.best_mask = seed_mask;
  const std::uint32_t all = g.n() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.n()) - 1;
  ex.search(all, 0, 0.0);

  SolveResult res;
  res.bits.assign(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> chosen;
  for (int v = 0; v < g.n(); ++v)
    if ((ex.best_mask >> v) & 1u) {
      res.bits[static_cast<std::size_t>(v)] = 1;
      chosen.push_back(v);
    }
  res.set_value = ex.best_val;
  res.feasible = true;
  res.trace.push_back({"exact", chosen, graph_digest(g)});
  return res;
}

std::vector<std::uint8_t> correct(const Graph& g, PenaltyWeight lambda, std::vector<std::uint8_t> bits,
                                  std::uint64_t seed, FlipPolicy policy) {
  if (static_cast<int>(bits.size()) != g.n()) throw std::invalid_argument("correct: length mismatch");
  (void)lambda;  // the guarantee needs lambda >= 1/2; the procedure itself does not use it
  Rng rng(seed);
  for (;;) {
    std::vector<std::pair<int, int>> penalized;
    for (auto [u, v] : g.edges())
      if (bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)]) penalized.emplace_back(u, v);
    if (penalized.empty()) break;
    const auto [u, v] = penalized[rng.below(penalized.size())];
    int flip;
    if (policy == FlipPolicy::uniform_endpoint) {
      flip = rng.below(2) == 0 ? u : v;
    } else {
      flip = g.weight(u) < g.weight(v) ? u : (g.weight(v) < g.weight(u) ? v : std::min(u, v));
    }
    bits[static_cast<std::size_t>(flip)] = 0;
  }
  return bits;
}

}  // namespace iqmis
