#include "dthresh/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "dthresh/errors.hpp"

namespace dthresh {

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  if (order < 0) throw ParameterOutOfRange("graph order must be >= 0");
  Graph g;
  g.n_ = order;
  const auto n = static_cast<std::size_t>(order);
  g.adj_.assign(n * n, 0);
  g.edge_id_.assign(n * n, -1);
  g.neighbors_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw ParameterOutOfRange("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} has an endpoint outside 0.." + std::to_string(order - 1));
    }
    if (e.u == e.v) throw ParameterOutOfRange("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    auto& cell = g.adj_[e.u * n + e.v];
    if (cell) {
      throw ParameterOutOfRange("duplicate edge {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "}");
    }
    cell = 1;
    g.adj_[e.v * n + e.u] = 1;
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.edge_id_[e.u * n + e.v] = i;
    g.edge_id_[e.v * n + e.u] = i;
    g.neighbors_[e.u].push_back(e.v);
    g.neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const int id = edge_id_[static_cast<std::size_t>(u) * n_ + v];
  if (id < 0) return std::nullopt;
  return id;
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw EmptyEdgeSet();
  std::vector<Edge> edges;
  for (int v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        edges.push_back({*g.edge_index(v, nb[i]), *g.edge_index(v, nb[j])});
      }
    }
  }
  // In a simple graph two distinct edges share at most one endpoint, so no
  // pair is produced twice.
  return Graph::from_edges(g.size(), edges);
}

std::vector<int> product_coordinates(std::span<const Graph> factors, int label) {
  std::vector<int> coords(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    coords[i] = label % factors[i].order();
    label /= factors[i].order();
  }
  return coords;
}

int product_label(std::span<const Graph> factors, std::span<const int> coordinates) {
  int label = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    label = label * factors[i].order() + coordinates[i];
  }
  return label;
}

Graph cartesian_product(std::span<const Graph> factors) {
  if (factors.size() < 2) {
    throw ParameterOutOfRange("cartesian product needs at least 2 factors, got " +
                              std::to_string(factors.size()));
  }
  long long total = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_connected(factors[i])) {
      throw DisconnectedFactor("factor " + std::to_string(i) + " is empty or disconnected");
    }
    total *= factors[i].order();
    if (total > (1 << 16)) throw ParameterOutOfRange("product order exceeds 65536 vertices");
  }
  const int n = static_cast<int>(total);
  // stride[i] = weight of coordinate i in the mixed-radix label.
  std::vector<int> stride(factors.size(), 1);
  for (std::size_t i = factors.size() - 1; i-- > 0;) {
    stride[i] = stride[i + 1] * factors[i + 1].order();
  }
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    const auto coords = product_coordinates(factors, x);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (int w : factors[i].neighbors(coords[i])) {
        if (w > coords[i]) edges.push_back({x, x + (w - coords[i]) * stride[i]});
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace dthresh
