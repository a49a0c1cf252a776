#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dthresh/automorphisms.hpp"
#include "dthresh/graph.hpp"

namespace dthresh {

// Factor list of a Cartesian product. Factors are asserted, not checked, to be
// Cartesian-prime. Either every multiplicity is 1 (pairwise non-isomorphic
// factors) or there is a single factor with multiplicity k >= 2 (a power).
struct ProductSpec {
  std::vector<Graph> factors;
  std::vector<int> multiplicities;

  static ProductSpec distinct(std::vector<Graph> factors);
  static ProductSpec power(Graph base, int exponent);

  bool is_power() const { return factors.size() == 1; }
  // Expanded factor list (a power repeats its base).
  std::vector<Graph> expanded() const;
  Graph assemble() const { return cartesian_product(expanded()); }
};

// q(β) = |β|_e · |V(Q)| + |β| · |E(Q)| for β acting on one factor and Q the
// product of the remaining factors.
std::int64_t q_value(const CycleStats& beta, std::int64_t quotient_vertices,
                     std::int64_t quotient_edges);

// How the factor-transposition contribution of a power G^k is counted.
enum class TranspositionTerm {
  // (k/2)·|G|^(k-1)·|E(G)|, i.e. half of |E(G^k)|, rounded up.
  HalfEdgeCount,
  // The exact number of edge cycles of a transposition of two coordinates:
  // (|E(G^k)| + (k-2)·|G|^(k-2)·|E(G)|) / 2. Edges along a third coordinate
  // whose two swapped coordinates agree are fixed, so this exceeds the
  // half count when k >= 3.
  TranspositionCycles,
};

// Edge threshold of G_1 □ ... □ G_k for pairwise non-isomorphic connected
// factors: max over i and non-identity β in Aut(G_i) of q(β), plus 1.
// Throws IsomorphicFactors, DisconnectedFactor, ParameterOutOfRange (k < 2).
std::int64_t theta_prime_product_distinct(std::span<const Graph> factors,
                                          std::size_t automorphism_cap = kDefaultAutomorphismCap);

// Edge threshold of G^k: max{transposition term, r} + 1, where r is the
// distinct-factor maximum with quotient G^(k-1).
std::int64_t theta_prime_product_power(const Graph& base, int k,
                                       TranspositionTerm term = TranspositionTerm::HalfEdgeCount,
                                       std::size_t automorphism_cap = kDefaultAutomorphismCap);

// Vertex threshold: max_i (θ(G_i) - 1)·|G|/|G_i| + 1.
std::int64_t theta_product_vertex(std::span<const Graph> factors,
                                  std::size_t automorphism_cap = kDefaultAutomorphismCap);

// Vertex threshold of G^k: |G|^(k-1)·max{(|G|+1)/2, θ(G) - 1} + 1.
std::int64_t theta_power_vertex(const Graph& base, int k,
                                std::size_t automorphism_cap = kDefaultAutomorphismCap);

std::int64_t theta_prime_product(const ProductSpec& spec,
                                 TranspositionTerm term = TranspositionTerm::HalfEdgeCount);
std::int64_t theta_product(const ProductSpec& spec);

}  // namespace dthresh
