#include "iqmis/iqa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "iqmis/analytic.hpp"
#include "iqmis/rng.hpp"

namespace iqmis {

std::string rule_name(Rule rule) {
  switch (rule) {
    case Rule::minq: return "minq";
    case Rule::maxq: return "maxq";
    case Rule::mmq: return "mmq";
    case Rule::wmmq: return "wmmq";
    case Rule::edge_anti: return "edge-anti";
    case Rule::edge_corr: return "edge-corr";
  }
  throw std::logic_error("rule_name: unknown rule");
}

Rule parse_rule(const std::string& name) {
  if (name == "minq") return Rule::minq;
  if (name == "maxq") return Rule::maxq;
  if (name == "mmq") return Rule::mmq;
  if (name == "wmmq") return Rule::wmmq;
  if (name == "edge-anti") return Rule::edge_anti;
  if (name == "edge-corr") return Rule::edge_corr;
  throw std::invalid_argument("parse_rule: unknown rule '" + name + "'");
}

namespace {

constexpr double kTieTol = 1e-9;

CorrelatorReport backend_report(const BackendConfig& backend, const IsingCost& cost,
                                std::uint64_t seed, int iter) {
  if (const auto* qb = std::get_if<QaoaBackend>(&backend)) {
    OptimizerConfig oc = qb->optimizer;
    oc.seed = mix64(seed, static_cast<std::uint64_t>(iter));
    return correlators(cost, optimize_angles(cost, qb->p, oc).angles);
  }
  if (const auto* ab = std::get_if<AnnealBackend>(&backend)) {
    return anneal_correlators(cost, ab->schedule);
  }
  const auto& mb = std::get<MimicBackend>(backend);
  if (mb.angles) return mimic_correlators(cost, *mb.angles);
  OptimizerConfig oc = mb.optimizer;
  oc.seed = mix64(seed, static_cast<std::uint64_t>(iter));
  return mimic_correlators(cost, mimic_optimize(cost, oc).angles);
}

struct Pick {
  int index = -1;
  bool tie = false;
};

// candidates within kTieTol of the extremum count as tied; the lowest index
// wins, and index order tracks original-id order on both problem views
Pick pick_extremal(const std::vector<double>& key, bool want_max) {
  const double m = want_max ? *std::max_element(key.begin(), key.end())
                            : *std::min_element(key.begin(), key.end());
  Pick p;
  int count = 0;
  for (int i = 0; i < static_cast<int>(key.size()); ++i) {
    const bool hit = want_max ? key[static_cast<std::size_t>(i)] >= m - kTieTol
                              : key[static_cast<std::size_t>(i)] <= m + kTieTol;
    if (!hit) continue;
    if (p.index < 0) p.index = i;
    ++count;
  }
  p.tie = count > 1;
  return p;
}

struct EdgePick {
  std::pair<int, int> key{-1, -1};
  bool tie = false;
};

EdgePick pick_extremal_edge(const std::map<std::pair<int, int>, double>& zz, bool want_max) {
  if (zz.empty()) throw std::logic_error("pick_extremal_edge: empty report");
  double m = want_max ? -std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::infinity();
  for (const auto& [key, val] : zz) m = want_max ? std::max(m, val) : std::min(m, val);
  EdgePick p;
  int count = 0;
  for (const auto& [key, val] : zz) {
    const bool hit = want_max ? val >= m - kTieTol : val <= m + kTieTol;
    if (!hit) continue;
    if (p.key.first < 0) p.key = key;  // map order is already lexicographic
    ++count;
  }
  p.tie = count > 1;
  return p;
}

bool off_extremal_degree(const Graph& g, int selected, bool minimum) {
  int ext = g.degree(0);
  for (int v = 1; v < g.n(); ++v)
    ext = minimum ? std::min(ext, g.degree(v)) : std::max(ext, g.degree(v));
  return g.degree(selected) != ext;
}

void apply_remap(Graph& cur, std::vector<int>& cur2orig, ReducedGraph&& r) {
  std::vector<int> next(static_cast<std::size_t>(r.graph.n()));
  for (int i = 0; i < static_cast<int>(cur2orig.size()); ++i) {
    const int j = r.remap[static_cast<std::size_t>(i)];
    if (j >= 0) next[static_cast<std::size_t>(j)] = cur2orig[static_cast<std::size_t>(i)];
  }
  cur = std::move(r.graph);
  cur2orig = std::move(next);
}

bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t d = a ^ b;
  if (d == 0) return false;
  return ((a >> std::countr_zero(d)) & 1u) == 0;
}

IqaTrace run_graph_rules(const Graph& g, const IqaConfig& cfg, PenaltyWeight lambda) {
  Graph cur = g;
  std::vector<int> cur2orig(static_cast<std::size_t>(g.n()));
  std::iota(cur2orig.begin(), cur2orig.end(), 0);
  IqaTrace trace;
  int iter = 0;
  for (;;) {
    if (cur.n() == 0) break;
    if (cur.n() <= cfg.brute_force_threshold || cur.m() == 0) {
      std::vector<std::uint8_t> bits;
      if (cur.m() == 0) {
        bits.assign(static_cast<std::size_t>(cur.n()), 1);  // positive weights: take all
      } else {
        bits = brute_force(cur).bits;
      }
      IqaStep st;
      st.index = iter;
      st.kind = DecisionKind::terminal;
      for (int v = 0; v < cur.n(); ++v) {
        trace.terminal[cur2orig[static_cast<std::size_t>(v)]] = bits[static_cast<std::size_t>(v)];
        if (bits[static_cast<std::size_t>(v)])
          st.vertices.push_back(cur2orig[static_cast<std::size_t>(v)]);
      }
      st.live_after = 0;
      st.snapshot_digest = graph_digest(cur);
      trace.steps.push_back(std::move(st));
      break;
    }

    const IsingCost cost = encode_mis(cur, lambda);
    const CorrelatorReport rep = backend_report(cfg.backend, cost, cfg.seed, iter);
    IqaStep st;
    st.index = iter;
    st.report_digest = report_digest(rep);

    if (cfg.rule == Rule::edge_corr) {
      const EdgePick pick = pick_extremal_edge(rep.zz, true);
      const auto [u, v] = pick.key;
      st.kind = DecisionKind::fix_pair_off;
      st.degenerate_tie = pick.tie;
      st.vertices = {cur2orig[static_cast<std::size_t>(u)], cur2orig[static_cast<std::size_t>(v)]};
      ReducedGraph r1 = delete_vertex(cur, v);  // larger index first keeps u valid
      const int u2 = r1.remap[static_cast<std::size_t>(u)];
      apply_remap(cur, cur2orig, std::move(r1));
      apply_remap(cur, cur2orig, delete_vertex(cur, u2));
    } else {
      std::vector<double> key(static_cast<std::size_t>(cur.n()));
      bool want_max = true;
      for (int i = 0; i < cur.n(); ++i) {
        const double z = rep.z[static_cast<std::size_t>(i)];
        switch (cfg.rule) {
          case Rule::minq: key[static_cast<std::size_t>(i)] = z; break;
          case Rule::maxq:
            key[static_cast<std::size_t>(i)] = z;
            want_max = false;
            break;
          case Rule::mmq: key[static_cast<std::size_t>(i)] = std::abs(z); break;
          case Rule::wmmq: key[static_cast<std::size_t>(i)] = cur.weight(i) * std::abs(z); break;
          default: throw std::logic_error("run_graph_rules: edge rule in vertex path");
        }
      }
      const Pick pick = pick_extremal(key, want_max);
      const int v = pick.index;
      st.degenerate_tie = pick.tie;
      bool fix_on = true;
      switch (cfg.rule) {
        case Rule::minq:
          st.deviation = off_extremal_degree(cur, v, true);
          break;
        case Rule::maxq:
          fix_on = false;
          st.deviation = off_extremal_degree(cur, v, false);
          break;
        case Rule::mmq:
        case Rule::wmmq:
          fix_on = rep.z[static_cast<std::size_t>(v)] >= 0.0;  // exact zero goes on, flagged
          if (std::abs(rep.z[static_cast<std::size_t>(v)]) <= kTieTol) st.degenerate_tie = true;
          break;
        default: break;
      }
      if (fix_on) {
        st.kind = DecisionKind::fix_on;
        st.vertices.push_back(cur2orig[static_cast<std::size_t>(v)]);
        for (int w : cur.neighbors(v)) st.vertices.push_back(cur2orig[static_cast<std::size_t>(w)]);
        apply_remap(cur, cur2orig, delete_closed_neighborhood(cur, v));
      } else {
        st.kind = DecisionKind::fix_off;
        st.vertices = {cur2orig[static_cast<std::size_t>(v)]};
        apply_remap(cur, cur2orig, delete_vertex(cur, v));
      }
    }
    st.live_after = cur.n();
    st.snapshot_digest = graph_digest(cur);
    trace.steps.push_back(std::move(st));
    ++iter;
  }
  return trace;
}

IqaTrace run_anti_substitution(const Graph& g, const IqaConfig& cfg, PenaltyWeight lambda) {
  IsingCost cost = encode_mis(g, lambda);
  std::vector<int> live2orig(static_cast<std::size_t>(g.n()));
  std::iota(live2orig.begin(), live2orig.end(), 0);
  IqaTrace trace;
  int iter = 0;
  for (;;) {
    if (cost.n == 0) break;
    if (cost.couplings.empty()) {
      // fields decouple: minimize each h_i s_i on its own
      IqaStep st;
      st.index = iter;
      st.kind = DecisionKind::terminal;
      for (int i = 0; i < cost.n; ++i) {
        const std::uint8_t bit = cost.fields[static_cast<std::size_t>(i)] < 0.0 ? 1 : 0;
        trace.terminal[live2orig[static_cast<std::size_t>(i)]] = bit;
        if (bit) st.vertices.push_back(live2orig[static_cast<std::size_t>(i)]);
      }
      st.live_after = 0;
      st.snapshot_digest = cost_digest(cost);
      trace.steps.push_back(std::move(st));
      break;
    }
    if (cost.n <= cfg.brute_force_threshold) {
      if (cost.n > 24)
        throw std::invalid_argument("run_iqa: terminal remainder too large to enumerate");
      const std::uint32_t count = std::uint32_t{1} << cost.n;
      std::vector<int> spins(static_cast<std::size_t>(cost.n));
      double best = std::numeric_limits<double>::infinity();
      std::uint32_t best_mask = 0;
      for (std::uint32_t mask = 0; mask < count; ++mask) {
        for (int i = 0; i < cost.n; ++i)
          spins[static_cast<std::size_t>(i)] = ((mask >> i) & 1u) ? 1 : -1;
        const double c = evaluate(cost, spins);
        if (c < best || (c == best && lex_less(mask, best_mask))) {
          best = c;
          best_mask = mask;
        }
      }
      IqaStep st;
      st.index = iter;
      st.kind = DecisionKind::terminal;
      for (int i = 0; i < cost.n; ++i) {
        const std::uint8_t bit = (best_mask >> i) & 1u;
        trace.terminal[live2orig[static_cast<std::size_t>(i)]] = bit;
        if (bit) st.vertices.push_back(live2orig[static_cast<std::size_t>(i)]);
      }
      st.live_after = 0;
      st.snapshot_digest = cost_digest(cost);
      trace.steps.push_back(std::move(st));
      break;
    }

    const CorrelatorReport rep = backend_report(cfg.backend, cost, cfg.seed, iter);
    const EdgePick pick = pick_extremal_edge(rep.zz, false);
    const auto [k, l] = pick.key;  // k < l, so l carries the higher original id
    IqaStep st;
    st.index = iter;
    st.kind = DecisionKind::anti_substitute;
    st.report_digest = report_digest(rep);
    st.degenerate_tie = pick.tie;
    st.vertices = {live2orig[static_cast<std::size_t>(l)], live2orig[static_cast<std::size_t>(k)]};
    cost = substitute_anticorrelated(cost, l, k);
    live2orig.erase(live2orig.begin() + l);
    st.live_after = cost.n;
    st.snapshot_digest = cost_digest(cost);
    trace.steps.push_back(std::move(st));
    ++iter;
  }
  return trace;
}

}  // namespace

std::vector<std::uint8_t> back_propagate(const IqaTrace& trace, int n_original) {
  if (n_original <= 0) throw std::invalid_argument("back_propagate: bad vertex count");
  constexpr std::uint8_t kUnset = 255;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_original), kUnset);
  auto put = [&](int v, std::uint8_t b) {
    if (v < 0 || v >= n_original)
      throw std::invalid_argument("back_propagate: vertex out of range");
    bits[static_cast<std::size_t>(v)] = b;
  };
  for (const auto& [v, b] : trace.terminal) put(v, b);
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const auto& vs = it->vertices;
    switch (it->kind) {
      case DecisionKind::fix_on:
        if (vs.empty()) throw std::invalid_argument("back_propagate: malformed step");
        put(vs[0], 1);
        for (std::size_t i = 1; i < vs.size(); ++i) put(vs[i], 0);
        break;
      case DecisionKind::fix_off:
      case DecisionKind::fix_pair_off:
        for (int v : vs) put(v, 0);
        break;
      case DecisionKind::anti_substitute: {
        if (vs.size() != 2 || vs[1] < 0 || vs[1] >= n_original)
          throw std::invalid_argument("back_propagate: malformed step");
        const std::uint8_t partner = bits[static_cast<std::size_t>(vs[1])];
        if (partner == kUnset) throw std::invalid_argument("back_propagate: incomplete trace");
        put(vs[0], partner ? 0 : 1);
        break;
      }
      case DecisionKind::terminal: break;  // covered by the terminal map
    }
  }
  for (std::uint8_t b : bits)
    if (b == kUnset) throw std::invalid_argument("back_propagate: incomplete trace");
  return bits;
}

IqaResult run_iqa(const Graph& g, const IqaConfig& cfg) {
  if (g.n() == 0) throw std::invalid_argument("run_iqa: empty graph");
  if (cfg.brute_force_threshold < 0)
    throw std::invalid_argument("run_iqa: negative brute_force_threshold");
  const PenaltyWeight lambda(cfg.lambda);
  const bool edge_rule = cfg.rule == Rule::edge_anti || cfg.rule == Rule::edge_corr;
  if (edge_rule && std::holds_alternative<MimicBackend>(cfg.backend))
    throw std::invalid_argument("run_iqa: edge rules need pair correlators from a state backend");

  IqaResult res;
  res.trace = cfg.rule == Rule::edge_anti ? run_anti_substitution(g, cfg, lambda)
                                          : run_graph_rules(g, cfg, lambda);
  res.bits = back_propagate(res.trace, g.n());
  res.feasible = is_independent(g, res.bits);
  res.corrected = res.feasible
                      ? res.bits
                      : correct(g, lambda, res.bits, mix64(cfg.seed, 0x7265706169726564ULL),
                                cfg.flip_policy);
  res.set_value = set_weight(g, res.corrected);
  for (const IqaStep& st : res.trace.steps) res.deviation_seen = res.deviation_seen || st.deviation;
  return res;
}

}  // namespace iqmis
