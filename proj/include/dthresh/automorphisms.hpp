#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dthresh/graph.hpp"

namespace dthresh {

// Bijection on 0..n-1, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws ParameterOutOfRange unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Orbit count; fixed points count as cycles of length 1.
  int cycle_count() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (outer ∘ inner)(x) = outer(inner(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);

// |α|, |α|_e and |α|_t = |α| + |α|_e for one automorphism α.
struct CycleStats {
  int vertex_cycles = 0;
  int edge_cycles = 0;
  int total_cycles = 0;

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

// The full automorphism group as an explicit element list, sorted
// lexicographically by image array (the identity is always first).
class AutomorphismGroup {
 public:
  explicit AutomorphismGroup(std::vector<Permutation> elements);

  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  bool trivial() const noexcept { return elements_.size() == 1; }

 private:
  std::vector<Permutation> elements_;
};

inline constexpr std::size_t kDefaultAutomorphismCap = 1'000'000;

// Every automorphism of g. Throws CapExceeded once more than `cap` elements
// have been found.
AutomorphismGroup enumerate_automorphisms(const Graph& g,
                                          std::size_t cap = kDefaultAutomorphismCap);

bool is_automorphism(const Graph& g, const Permutation& p);

// Edge {u,v} (by index) maps to the index of {p(u), p(v)}.
Permutation induced_edge_permutation(const Graph& g, const Permutation& p);

CycleStats cycle_stats(const Graph& g, const Permutation& p);

// Stable colour refinement starting from degrees. Colours are small integers
// assigned canonically (by signature), so isomorphic graphs get matching
// colour multisets.
std::vector<int> equitable_partition(const Graph& g);

// A vertex bijection from -> to preserving adjacency, if one exists.
std::optional<Permutation> find_isomorphism(const Graph& from, const Graph& to);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace dthresh
