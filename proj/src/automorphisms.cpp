#include "dthresh/automorphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "dthresh/errors.hpp"

namespace dthresh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[x]) {
      throw ParameterOutOfRange("image array is not a bijection on 0.." +
                                std::to_string(size() - 1));
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

int Permutation::cycle_count() const {
  std::vector<char> seen(images_.size(), 0);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int x = i; !seen[x]; x = images_[x]) seen[x] = 1;
  }
  return cycles;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw DimensionMismatch("composing permutations of different sizes");
  std::vector<int> images(inner.size());
  for (int i = 0; i < inner.size(); ++i) images[i] = outer(inner(i));
  return Permutation(std::move(images));
}

AutomorphismGroup::AutomorphismGroup(std::vector<Permutation> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  }
  // p is a bijection, so mapping edges into edges is enough.
  return true;
}

Permutation induced_edge_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw DimensionMismatch("permutation size differs from graph order");
  std::vector<int> images(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    const auto j = g.edge_index(p(e.u), p(e.v));
    if (!j) {
      throw NotAnAutomorphism("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} maps to a non-edge");
    }
    images[i] = *j;
  }
  return Permutation(std::move(images));
}

CycleStats cycle_stats(const Graph& g, const Permutation& p) {
  CycleStats s;
  s.edge_cycles = induced_edge_permutation(g, p).cycle_count();
  s.vertex_cycles = p.cycle_count();
  s.total_cycles = s.vertex_cycles + s.edge_cycles;
  return s;
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

std::vector<int> refine(const Adjacency& nbrs) {
  const std::size_t n = nbrs.size();
  std::vector<int> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<int>(nbrs[v].size());
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.reserve(nbrs[v].size() + 1);
      for (int w : nbrs[v]) sig.push_back(color[w]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), color[v]);
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& sig : signature) ids.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = ids[signature[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

Adjacency adjacency_lists(const Graph& g, int offset = 0) {
  Adjacency out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.neighbors(v)) out[v].push_back(w + offset);
  }
  return out;
}

// Backtracking search for adjacency-preserving bijections from -> to that
// respect the given colourings. `visit` returns false to stop the search.
class MapSearch {
 public:
  MapSearch(const Graph& from, const Graph& to, std::vector<int> from_color,
            std::vector<int> to_color)
      : from_(from),
        to_(to),
        from_color_(std::move(from_color)),
        to_color_(std::move(to_color)),
        map_(from.order(), -1),
        used_(to.order(), 0),
        placed_(from.order(), 0) {
    build_order();
  }

  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    extend(0);
  }

 private:
  void build_order() {
    const int n = from_.order();
    const int colors = from_color_.empty() ? 0 : *std::max_element(from_color_.begin(), from_color_.end()) + 1;
    std::vector<int> cell_size(colors, 0);
    for (int c : from_color_) ++cell_size[c];
    std::vector<char> seen(n, 0);
    parent_.assign(n, -1);
    while (static_cast<int>(order_.size()) < n) {
      int start = -1;
      for (int v = 0; v < n; ++v) {
        if (!seen[v] && (start < 0 || cell_size[from_color_[v]] < cell_size[from_color_[start]])) {
          start = v;
        }
      }
      seen[start] = 1;
      std::size_t head = order_.size();
      order_.push_back(start);
      while (head < order_.size()) {
        const int v = order_[head++];
        for (int w : from_.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = 1;
            parent_[w] = v;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool consistent(int v, int w) const {
    if (used_[w] || from_color_[v] != to_color_[w]) return false;
    int placed_nbrs = 0;
    for (int u : from_.neighbors(v)) {
      if (placed_[u]) {
        ++placed_nbrs;
        if (!to_.adjacent(map_[u], w)) return false;
      }
    }
    int used_nbrs = 0;
    for (int x : to_.neighbors(w)) used_nbrs += used_[x];
    return placed_nbrs == used_nbrs;
  }

  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      if (!(*visit_)(map_)) stopped_ = true;
      return;
    }
    const int v = order_[depth];
    auto attempt = [&](int w) {
      if (!consistent(v, w)) return;
      map_[v] = w;
      used_[w] = 1;
      placed_[v] = 1;
      extend(depth + 1);
      placed_[v] = 0;
      used_[w] = 0;
      map_[v] = -1;
    };
    if (parent_[v] >= 0) {
      for (int w : to_.neighbors(map_[parent_[v]])) {
        attempt(w);
        if (stopped_) return;
      }
    } else {
      for (int w = 0; w < to_.order(); ++w) {
        attempt(w);
        if (stopped_) return;
      }
    }
  }

  const Graph& from_;
  const Graph& to_;
  std::vector<int> from_color_;
  std::vector<int> to_color_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<char> placed_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

std::vector<int> equitable_partition(const Graph& g) { return refine(adjacency_lists(g)); }

AutomorphismGroup enumerate_automorphisms(const Graph& g, std::size_t cap) {
  if (g.order() == 0) throw PreconditionViolated("automorphisms of the null graph");
  if (cap == 0) throw ParameterOutOfRange("automorphism cap must be >= 1");
  auto color = equitable_partition(g);
  std::vector<Permutation> found;
  MapSearch search(g, g, color, color);
  search.run([&](const std::vector<int>& images) {
    if (found.size() == cap) throw CapExceeded(cap, found.size() + 1);
    found.emplace_back(images);
    return true;
  });
  return AutomorphismGroup(std::move(found));
}

std::optional<Permutation> find_isomorphism(const Graph& from, const Graph& to) {
  if (from.order() != to.order() || from.size() != to.size()) return std::nullopt;
  if (from.order() == 0) return Permutation{};
  // Refine the disjoint union so both sides share one colour vocabulary.
  Adjacency joint = adjacency_lists(from);
  for (auto& list : adjacency_lists(to, from.order())) joint.push_back(std::move(list));
  const auto color = refine(joint);
  std::vector<int> from_color(color.begin(), color.begin() + from.order());
  std::vector<int> to_color(color.begin() + from.order(), color.end());
  auto a = from_color, b = to_color;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;

  std::optional<Permutation> result;
  MapSearch search(from, to, std::move(from_color), std::move(to_color));
  search.run([&](const std::vector<int>& images) {
    result.emplace(images);
    return false;
  });
  return result;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace dthresh
