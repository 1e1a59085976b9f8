#include "iqmis/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "iqmis/rng.hpp"

namespace iqmis {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : Graph(n, std::move(edges), std::vector<double>(static_cast<std::size_t>(std::max(n, 0)), 1.0)) {}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<double> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
  if (static_cast<int>(weights_.size()) != n_)
    throw std::invalid_argument("graph: weight count does not match vertex count");
  for (double w : weights_)
    if (!(w > 0.0)) throw std::invalid_argument("graph: weights must be positive");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: duplicate edge");
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex id out of range");
}

double Graph::weight(int v) const {
  check_vertex(v);
  return weights_[static_cast<std::size_t>(v)];
}

bool Graph::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_triangles(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("edge_triangles: not an edge");
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

namespace {

ReducedGraph delete_set(const Graph& g, const std::vector<char>& gone) {
  std::vector<int> remap(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) remap[static_cast<std::size_t>(v)] = next++;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int nu = remap[static_cast<std::size_t>(u)];
    int nv = remap[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(next));
  for (int v = 0; v < g.n(); ++v)
    if (remap[static_cast<std::size_t>(v)] >= 0) weights.push_back(g.weight(v));
  return {Graph(next, std::move(edges), std::move(weights)), std::move(remap)};
}

}  // namespace

ReducedGraph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("delete_vertex: vertex id out of range");
  std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
  gone[static_cast<std::size_t>(v)] = 1;
  return delete_set(g, gone);
}

ReducedGraph delete_closed_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("delete_closed_neighborhood: vertex id out of range");
  std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
  gone[static_cast<std::size_t>(v)] = 1;
  for (int w : g.neighbors(v)) gone[static_cast<std::size_t>(w)] = 1;
  return delete_set(g, gone);
}

Graph er_connected(int n, double q, std::uint64_t seed, int max_attempts) {
  if (n < 1) throw std::invalid_argument("er_connected: need at least one vertex");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("er_connected: q outside [0,1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(q)) edges.emplace_back(u, v);
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("er_connected: no connected sample within attempt budget");
}

Graph with_uniform_weights(const Graph& g, double lo, double hi, std::uint64_t seed) {
  if (!(lo > 0.0) || hi < lo) throw std::invalid_argument("with_uniform_weights: need 0 < lo <= hi");
  Rng rng(seed);
  std::vector<double> w(static_cast<std::size_t>(g.n()));
  for (auto& x : w) x = rng.uniform(lo, hi);
  return Graph(g.n(), g.edges(), std::move(w));
}

double default_edge_probability(int n) {
  if (n < 2) return 0.0;
  return std::min(1.0, 1.2 * std::log(static_cast<double>(n)) / static_cast<double>(n));
}

namespace {

inline void fnv_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

std::uint64_t graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::int64_t n = g.n();
  fnv_bytes(h, &n, sizeof n);
  for (auto [u, v] : g.edges()) {
    std::int32_t e[2] = {u, v};
    fnv_bytes(h, e, sizeof e);
  }
  if (!g.unit_weights())
    for (double w : g.weights()) fnv_bytes(h, &w, sizeof w);
  return h;
}

}  // namespace iqmis
