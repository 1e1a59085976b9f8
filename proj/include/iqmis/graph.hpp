#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace iqmis {

// Simple undirected graph with positive vertex weights. Vertices are
// 0..n-1; edges are stored sorted with u < v and no duplicates. Instances
// are immutable after construction; reduction operations return new graphs
// together with an id remap table.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);
  Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<double> weights);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(int v) const;
  bool unit_weights() const;

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;

  // number of common neighbors of the edge {u,v}; errors if {u,v} is not an edge
  int edge_triangles(int u, int v) const;

  int max_degree() const;
  bool is_connected() const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> adj_;
};

// Reduction result: remap[old_id] is the new id, or -1 for deleted vertices.
// Surviving ids keep their relative order.
struct ReducedGraph {
  Graph graph;
  std::vector<int> remap;
};

ReducedGraph delete_vertex(const Graph& g, int v);
ReducedGraph delete_closed_neighborhood(const Graph& g, int v);

// Connected Erdos-Renyi sample: each of the C(n,2) edges is drawn
// independently with probability q and the whole graph is redrawn until
// connected. Throws after max_attempts rejections.
Graph er_connected(int n, double q, std::uint64_t seed, int max_attempts = 10000);

// Same topology with fresh i.i.d. uniform [lo, hi] weights.
Graph with_uniform_weights(const Graph& g, double lo, double hi, std::uint64_t seed);

// edge probability used throughout the experiments: 1.2 ln(n) / n
double default_edge_probability(int n);

// FNV-1a over n, edge list and weight bit patterns; used to tag rows and
// trace snapshots so that runs over the same instance can be matched up.
std::uint64_t graph_digest(const Graph& g);

}  // namespace iqmis
