#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dthresh {

// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable finite simple undirected graph on vertices 0..n-1.
//
// Edges are indexed by their position in the lexicographically sorted edge
// list. Every module uses this indexing, so induced edge actions of vertex
// permutations are deterministic.
class Graph {
 public:
  Graph() = default;

  // Validates the pairs (range, no loops, no duplicates); pairs may be given in
  // either orientation and any order.
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  int max_degree() const;
  std::span<const int> neighbors(int v) const { return neighbors_[v]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  // Index of {u, v} in edges(), or nullopt if u and v are not adjacent.
  std::optional<int> edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> edge_id_;
};

bool is_connected(const Graph& g);

// Component label per vertex, labels numbered in order of first vertex.
std::vector<int> component_labels(const Graph& g);

// Induced subgraph on `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Vertex i of the result is edge i of g; adjacency means the edges share an
// endpoint. Throws EmptyEdgeSet when g has no edges.
Graph line_graph(const Graph& g);

// Product vertex (x_1, ..., x_k) gets the mixed-radix label with the last
// coordinate varying fastest. Requires at least two connected nonempty factors.
Graph cartesian_product(std::span<const Graph> factors);

// Mixed-radix helpers matching cartesian_product's labelling.
std::vector<int> product_coordinates(std::span<const Graph> factors, int label);
int product_label(std::span<const Graph> factors, std::span<const int> coordinates);

}  // namespace dthresh
