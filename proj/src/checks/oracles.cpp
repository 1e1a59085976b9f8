#include "checks/oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "iqmis/rng.hpp"

namespace iqmis::checks {

Mat identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat multiply(const Mat& x, const Mat& y) {
  if (x.dim != y.dim) throw std::invalid_argument("multiply: dimension mismatch");
  Mat out(x.dim);
  for (int r = 0; r < x.dim; ++r)
    for (int k = 0; k < x.dim; ++k) {
      const std::complex<double> v = x.at(r, k);
      if (v == 0.0) continue;
      for (int c = 0; c < x.dim; ++c) out.at(r, c) += v * y.at(k, c);
    }
  return out;
}

namespace {

double max_abs(const Mat& m) {
  double v = 0.0;
  for (const auto& z : m.a) v = std::max(v, std::abs(z));
  return v;
}

}  // namespace

Mat expm(const Mat& x) {
  const double scale = max_abs(x);
  int squarings = 0;
  while (scale / std::pow(2.0, squarings) > 0.5) ++squarings;
  const double inv = std::pow(2.0, -squarings);
  Mat b(x.dim);
  for (std::size_t i = 0; i < x.a.size(); ++i) b.a[i] = x.a[i] * inv;

  Mat sum = identity(x.dim);
  Mat term = identity(x.dim);
  for (int k = 1; k <= 200; ++k) {
    term = multiply(term, b);
    for (auto& z : term.a) z /= static_cast<double>(k);
    for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += term.a[i];
    if (max_abs(term) < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) sum = multiply(sum, sum);
  return sum;
}

Mat mixer_unitary(int n, double beta) {
  if (n < 1 || n > 6) throw std::invalid_argument("mixer_unitary: size out of range");
  const int dim = 1 << n;
  Mat gen(dim);
  for (int i = 0; i < dim; ++i)
    for (int t = 0; t < n; ++t) gen.at(i ^ (1 << t), i) -= 1.0;  // B = -sum X_t
  const std::complex<double> factor(0.0, -beta);
  for (auto& z : gen.a) z *= factor;
  return expm(gen);
}

Mat phase_unitary(const IsingCost& cost, double gamma) {
  if (cost.n < 1 || cost.n > 6) throw std::invalid_argument("phase_unitary: size out of range");
  const int dim = 1 << cost.n;
  Mat u(dim);
  std::vector<int> spins(static_cast<std::size_t>(cost.n));
  for (int z = 0; z < dim; ++z) {
    for (int i = 0; i < cost.n; ++i) spins[static_cast<std::size_t>(i)] = ((z >> i) & 1) ? 1 : -1;
    const double c = evaluate(cost, spins);
    u.at(z, z) = std::exp(std::complex<double>(0.0, -gamma * c));
  }
  return u;
}

QuantumState apply_unitary(const Mat& u, const QuantumState& state) {
  if (static_cast<std::size_t>(u.dim) != state.size())
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  QuantumState out;
  out.n = state.n;
  out.amps.assign(state.size(), 0.0);
  for (int r = 0; r < u.dim; ++r) {
    std::complex<double> acc = 0.0;
    for (int c = 0; c < u.dim; ++c) acc += u.at(r, c) * state.amps[static_cast<std::size_t>(c)];
    out.amps[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

double objective_oracle(const Graph& g, double lambda, const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != g.n())
    throw std::invalid_argument("objective_oracle: length mismatch");
  double reward = 0.0;
  for (int v = 0; v < g.n(); ++v)
    if (bits[static_cast<std::size_t>(v)]) reward += g.weight(v);
  long bad = 0;
  for (auto [u, v] : g.edges())
    if (bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)]) ++bad;
  return -2.0 * reward + 4.0 * lambda * static_cast<double>(bad);
}

EnumeratedBest enumerate_best_set(const Graph& g) {
  if (g.n() > 20) throw std::invalid_argument("enumerate_best_set: instance too large");
  const int n = g.n();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  EnumeratedBest best;
  best.value = -1.0;
  std::string best_str;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!((mask >> i) & 1u)) continue;
      for (int j = i + 1; j < n && ok; ++j)
        if (((mask >> j) & 1u) && adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          ok = false;
    }
    if (!ok) continue;
    double value = 0.0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) value += g.weight(i);
    std::string str(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) str[static_cast<std::size_t>(i)] = '1';
    if (value > best.value) {
      best.value = value;
      best.optima = 1;
      best_str = str;
    } else if (value == best.value) {
      ++best.optima;
      if (str < best_str) best_str = str;
    }
  }
  best.bits.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    if (best_str[static_cast<std::size_t>(i)] == '1') best.bits[static_cast<std::size_t>(i)] = 1;
  return best;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Graph er_reference(int n, double q, std::uint64_t seed, int max_attempts) {
  if (n < 1) throw std::invalid_argument("er_reference: need at least one vertex");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(q)) edges.emplace_back(u, v);
    UnionFind uf(n);
    for (auto [u, v] : edges) uf.unite(u, v);
    bool connected = true;
    for (int v = 1; v < n && connected; ++v) connected = uf.find(v) == uf.find(0);
    if (connected) return Graph(n, std::move(edges));
  }
  throw std::runtime_error("er_reference: no connected sample within attempt budget");
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);      // outer cycle
    edges.emplace_back(i, i + 5);            // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

CorrectionReplay correct_replay(const Graph& g, double lambda, std::vector<std::uint8_t> bits,
                                std::uint64_t seed, FlipPolicy policy) {
  auto score = [&] {
    double reward = 0.0;
    for (int v = 0; v < g.n(); ++v)
      if (bits[static_cast<std::size_t>(v)]) reward += g.weight(v);
    long bad = 0;
    for (auto [u, v] : g.edges())
      if (bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)]) ++bad;
    return reward - 2.0 * lambda * static_cast<double>(bad);
  };
  CorrectionReplay rep;
  Rng rng(seed);
  rep.scores.push_back(score());
  for (;;) {
    std::vector<std::pair<int, int>> penalized;
    for (auto [u, v] : g.edges())
      if (bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)])
        penalized.emplace_back(u, v);
    if (penalized.empty()) break;
    const auto [u, v] = penalized[rng.below(penalized.size())];
    int flip;
    if (policy == FlipPolicy::uniform_endpoint) {
      flip = rng.below(2) == 0 ? u : v;
    } else {
      flip = g.weight(u) < g.weight(v) ? u : (g.weight(v) < g.weight(u) ? v : std::min(u, v));
    }
    bits[static_cast<std::size_t>(flip)] = 0;
    rep.scores.push_back(score());
  }
  rep.bits = std::move(bits);
  return rep;
}

}  // namespace iqmis::checks
