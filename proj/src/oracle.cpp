#include "dthresh/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>

#include "dthresh/errors.hpp"

namespace dthresh {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Vertex: return "vertex";
    case Mode::Edge: return "edge";
    case Mode::Total: return "total";
  }
  return "?";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::ClosedForm: return "closed-form";
    case Method::CycleLemma: return "cycle-lemma";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "vertex") return Mode::Vertex;
  if (text == "edge") return Mode::Edge;
  if (text == "total") return Mode::Total;
  return std::nullopt;
}

bool Coloring::surjective() const {
  std::vector<char> used(k + 1, 0);
  for (int c : assignment) {
    if (c >= 1 && c <= k) used[c] = 1;
  }
  return std::count(used.begin() + 1, used.end(), 1) == k;
}

int domain_size(const Graph& g, Mode mode) {
  switch (mode) {
    case Mode::Vertex: return g.order();
    case Mode::Edge: return g.size();
    case Mode::Total: return g.order() + g.size();
  }
  return 0;
}

Permutation domain_action(const Graph& g, const Permutation& p, Mode mode) {
  if (mode == Mode::Vertex) return p;
  const auto edges = induced_edge_permutation(g, p);
  if (mode == Mode::Edge) return edges;
  std::vector<int> images(p.images().begin(), p.images().end());
  for (int i = 0; i < edges.size(); ++i) images.push_back(g.order() + edges(i));
  return Permutation(std::move(images));
}

bool is_distinguishing(const Graph& g, const AutomorphismGroup& group, const Coloring& c) {
  const int d = domain_size(g, c.mode);
  if (static_cast<int>(c.assignment.size()) != d) {
    throw DimensionMismatch("coloring has " + std::to_string(c.assignment.size()) +
                            " entries, domain has " + std::to_string(d));
  }
  for (int x : c.assignment) {
    if (x < 1 || x > c.k) throw DimensionMismatch("colour value outside 1..k");
  }
  for (const auto& p : group.elements()) {
    if (p.is_identity()) continue;
    const auto act = domain_action(g, p, c.mode);
    bool preserved = true;
    for (int x = 0; x < d && preserved; ++x) preserved = c.assignment[act(x)] == c.assignment[x];
    if (preserved) return false;
  }
  return true;
}

namespace {

// Depth-first search over colorings of the domain, one element at a time in a
// fixed search order, tracking which non-identity automorphisms still preserve
// the partial assignment. Colorings are enumerated as restricted growth
// strings, since whether a coloring is preserved depends only on the partition
// it induces.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const AutomorphismGroup& group, Mode mode)
      : mode_(mode), d_(domain_size(g, mode)) {
    build_order(g);
    for (const auto& p : group.elements()) {
      if (p.is_identity()) continue;
      const auto act = domain_action(g, p, mode);
      for (int x = 0; x < d_; ++x) act_.push_back(static_cast<std::uint16_t>(act(x)));
      for (int x = 0; x < d_; ++x) inv_.push_back(0);
      const std::size_t base = (elements_.size()) * d_;
      for (int x = 0; x < d_; ++x) inv_[base + act(x)] = static_cast<std::uint16_t>(x);
      elements_.push_back(&p);
    }
    color_.assign(d_, -1);
    alive_.assign(d_ + 1, {});
    alive_[0].resize(elements_.size());
    std::iota(alive_[0].begin(), alive_[0].end(), 0);
  }

  bool has_symmetry() const { return !elements_.empty(); }

  // Surjective k-coloring preserved by some non-identity element.
  std::optional<NonDistinguishingWitness> find_preserved(int k) {
    target_ = k;
    std::fill(color_.begin(), color_.end(), -1);
    if (k < 1 || k > d_ || !has_symmetry()) return std::nullopt;
    if (!preserved_dfs(0, 0)) return std::nullopt;
    return NonDistinguishingWitness{current_coloring(k), *elements_[alive_[d_].front()]};
  }

  // Coloring with at most k colours preserved by no non-identity element.
  std::optional<Coloring> find_distinguishing(int k) {
    target_ = k;
    std::fill(color_.begin(), color_.end(), -1);
    if (!has_symmetry()) return Coloring{mode_, std::max(k, 1), std::vector<int>(d_, 1)};
    if (k < 1) return std::nullopt;
    if (!distinguishing_dfs(0, 0)) return std::nullopt;
    for (int& c : color_) c = std::max(c, 0);
    auto out = current_coloring(k);
    std::fill(color_.begin(), color_.end(), -1);
    return out;
  }

 private:
  // Edges are placed right after their later endpoint so that constraints
  // between an edge and its endpoints close early.
  void build_order(const Graph& g) {
    std::vector<int> vertex_order;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::size_t head = vertex_order.size();
      vertex_order.push_back(s);
      while (head < vertex_order.size()) {
        const int v = vertex_order[head++];
        for (int w : g.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = 1;
            vertex_order.push_back(w);
          }
        }
      }
    }
    std::vector<char> placed(g.order(), 0);
    for (int v : vertex_order) {
      if (mode_ != Mode::Edge) order_.push_back(v);
      placed[v] = 1;
      if (mode_ == Mode::Vertex) continue;
      for (int w : g.neighbors(v)) {
        if (!placed[w] || w == v) continue;
        const int e = *g.edge_index(v, w);
        order_.push_back(mode_ == Mode::Edge ? e : g.order() + e);
      }
    }
    pos_.assign(d_, 0);
    for (int i = 0; i < d_; ++i) pos_[order_[i]] = i;
  }

  // Filters alive_[depth] into alive_[depth + 1] after colouring order_[depth].
  void filter(int depth) {
    const int x = order_[depth];
    const int c = color_[x];
    auto& next = alive_[depth + 1];
    next.clear();
    for (int a : alive_[depth]) {
      const std::size_t base = static_cast<std::size_t>(a) * d_;
      const int y = act_[base + x];
      if (pos_[y] <= depth && color_[y] != c) continue;
      const int z = inv_[base + x];
      if (pos_[z] <= depth && color_[z] != c) continue;
      next.push_back(a);
    }
  }

  bool preserved_dfs(int depth, int blocks) {
    if (depth == d_) return blocks == target_;
    if (blocks + (d_ - depth) < target_) return false;
    const int x = order_[depth];
    const int top = std::min(blocks, target_ - 1);
    for (int c = 0; c <= top; ++c) {
      color_[x] = c;
      filter(depth);
      if (!alive_[depth + 1].empty() && preserved_dfs(depth + 1, blocks + (c == blocks))) {
        return true;
      }
    }
    color_[x] = -1;
    return false;
  }

  bool distinguishing_dfs(int depth, int blocks) {
    if (depth == d_) return false;
    const int x = order_[depth];
    const int top = std::min(blocks, target_ - 1);
    for (int c = 0; c <= top; ++c) {
      color_[x] = c;
      filter(depth);
      if (alive_[depth + 1].empty()) return true;
      if (distinguishing_dfs(depth + 1, blocks + (c == blocks))) return true;
    }
    color_[x] = -1;
    return false;
  }

  Coloring current_coloring(int k) const {
    Coloring out{mode_, k, {}};
    out.assignment.reserve(d_);
    for (int c : color_) out.assignment.push_back(c + 1);
    return out;
  }

  Mode mode_;
  int d_;
  int target_ = 0;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<const Permutation*> elements_;
  std::vector<std::uint16_t> act_;
  std::vector<std::uint16_t> inv_;
  std::vector<int> color_;
  std::vector<std::vector<int>> alive_;
};

void check_domain(const Graph& g, Mode mode, int limit) {
  const int d = domain_size(g, mode);
  if (d > limit) {
    throw SizeLimitExceeded(std::string(to_string(mode)) + " domain has " + std::to_string(d) +
                            " elements, oracle limit is " + std::to_string(limit));
  }
  if (d > 65535) throw SizeLimitExceeded("domain too large for the oracle");
}

}  // namespace

std::optional<NonDistinguishingWitness> find_preserved_coloring(const Graph& g,
                                                                const AutomorphismGroup& group,
                                                                Mode mode, int k) {
  check_domain(g, mode, 65535);
  ColoringSearch search(g, group, mode);
  return search.find_preserved(k);
}

ExactThreshold exact_threshold(const Graph& g, const AutomorphismGroup& group, Mode mode,
                               const OracleLimits& limits) {
  check_domain(g, mode, limits.max_domain);
  const int d = domain_size(g, mode);
  ColoringSearch search(g, group, mode);
  if (d == 0) {
    // The only coloring is empty, preserved by everything.
    if (!search.has_symmetry()) return {Threshold::of(1), std::nullopt};
    return {Threshold::undefined(),
            NonDistinguishingWitness{Coloring{mode, 0, {}}, group.elements()[1]}};
  }
  std::optional<NonDistinguishingWitness> last;
  for (int k = 1; k <= d; ++k) {
    auto witness = search.find_preserved(k);
    if (!witness) return {Threshold::of(k), std::move(last)};
    last = std::move(witness);
  }
  return {Threshold::undefined(), std::move(last)};
}

std::optional<Coloring> find_distinguishing_coloring(const Graph& g,
                                                     const AutomorphismGroup& group, Mode mode,
                                                     int k) {
  check_domain(g, mode, 65535);
  ColoringSearch search(g, group, mode);
  return search.find_distinguishing(k);
}

std::string to_string(BigCount value) {
  if (value == 0) return "0";
  std::string s;
  while (value > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {s.rbegin(), s.rend()};
}

BigCount stirling2(int n, int k) {
  if (k < 0 || n < 0 || k > n || n > 30) {
    throw ParameterOutOfRange("stirling2 needs 0 <= k <= n <= 30, got n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
  }
  std::vector<BigCount> row(k + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = static_cast<BigCount>(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigCount r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<BigCount>(n - k + i) / static_cast<BigCount>(i);
  return r;
}

BigCount factorial(int n) {
  if (n < 0 || n > 33) throw ParameterOutOfRange("factorial argument outside 0..33");
  BigCount r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<BigCount>(i);
  return r;
}

ColoringClassCount count_classes(const Graph& g, const AutomorphismGroup& group, int k,
                                 const OracleLimits& limits) {
  const int n = g.order();
  if (n > limits.max_count_order) {
    throw SizeLimitExceeded("class counting limited to " + std::to_string(limits.max_count_order) +
                            " vertices, graph has " + std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw ParameterOutOfRange("count_classes needs 1 <= k <= n, got k=" + std::to_string(k));
  }
  std::vector<std::vector<int>> moves;
  for (const auto& p : group.elements()) {
    if (!p.is_identity()) moves.emplace_back(p.images().begin(), p.images().end());
  }

  ColoringClassCount out;
  out.k = k;
  out.phi.assign(k + 1, 0);
  std::vector<int> c(n, 0);
  std::vector<int> image(n);
  auto encode = [&](const std::vector<int>& col) {
    std::uint64_t code = 0;
    for (int v = 0; v < n; ++v) code = code * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(col[v]);
    return code;
  };
  while (true) {
    bool distinguishing = true;
    for (const auto& a : moves) {
      bool preserved = true;
      for (int v = 0; v < n && preserved; ++v) preserved = c[a[v]] == c[v];
      if (preserved) {
        distinguishing = false;
        break;
      }
    }
    if (distinguishing) {
      // The orbit of c is {c ∘ α}; count c only if it is the orbit minimum.
      const std::uint64_t own = encode(c);
      bool minimal = true;
      for (const auto& a : moves) {
        for (int v = 0; v < n; ++v) image[v] = c[a[v]];
        if (encode(image) < own) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        ++out.Phi_k;
        int used_mask = 0;
        for (int v = 0; v < n; ++v) used_mask |= 1 << c[v];
        const int used = std::popcount(static_cast<unsigned>(used_mask));
        if (used_mask == (1 << used) - 1) ++out.phi[used];
      }
    }
    int pos = n - 1;
    while (pos >= 0 && c[pos] == k - 1) c[pos--] = 0;
    if (pos < 0) break;
    ++c[pos];
  }
  out.phi_k = out.phi[k];

  BigCount sum = 0;
  for (int i = 1; i <= k; ++i) sum += binomial(k, i) * out.phi[i];
  out.sum_identity_holds = sum == out.Phi_k;

  out.theta = static_cast<int>(exact_threshold(g, group, Mode::Vertex, OracleLimits{n, n}).threshold.value());
  out.stirling_identity_applies = k >= out.theta;
  if (out.stirling_identity_applies) {
    out.stirling_identity_holds =
        static_cast<BigCount>(out.phi_k) * group.order() == factorial(k) * stirling2(n, k);
  }
  return out;
}

}  // namespace dthresh
