#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dthresh/automorphisms.hpp"
#include "dthresh/graph.hpp"
#include "dthresh/types.hpp"

namespace dthresh {

// Colour assignment over the mode's domain (vertices, edges, or vertices then
// edges) with values in 1..k.
struct Coloring {
  Mode mode = Mode::Vertex;
  int k = 1;
  std::vector<int> assignment;

  bool surjective() const;
};

int domain_size(const Graph& g, Mode mode);

// The action of an automorphism on the mode's domain.
Permutation domain_action(const Graph& g, const Permutation& p, Mode mode);

// True iff no non-identity element of `group` preserves c. Throws
// DimensionMismatch if c does not fit the graph and mode, or if a value lies
// outside 1..k.
bool is_distinguishing(const Graph& g, const AutomorphismGroup& group, const Coloring& c);

struct OracleLimits {
  int max_domain = 12;
  int max_count_order = 8;
};

struct NonDistinguishingWitness {
  Coloring coloring;
  Permutation automorphism;  // non-identity, preserves `coloring`
};

struct ExactThreshold {
  Threshold threshold;
  // A non-distinguishing coloring with threshold-1 colours (or with the full
  // domain size when the threshold is undefined). Absent when threshold is 1.
  std::optional<NonDistinguishingWitness> witness;
};

// Some surjective k-coloring preserved by a non-identity automorphism, found by
// depth-first search in lexicographic order of restricted growth strings.
std::optional<NonDistinguishingWitness> find_preserved_coloring(const Graph& g,
                                                                const AutomorphismGroup& group,
                                                                Mode mode, int k);

// Smallest k such that every surjective k-coloring of the domain is
// distinguishing; undefined when even the injective coloring is preserved.
// Throws SizeLimitExceeded when the domain exceeds limits.max_domain.
ExactThreshold exact_threshold(const Graph& g, const AutomorphismGroup& group, Mode mode,
                               const OracleLimits& limits = {});

// A distinguishing coloring using at most k colours, if one exists.
std::optional<Coloring> find_distinguishing_coloring(const Graph& g,
                                                     const AutomorphismGroup& group, Mode mode,
                                                     int k);

using BigCount = unsigned __int128;
std::string to_string(BigCount value);

// S(n, k) for 0 <= k <= n <= 30. Throws ParameterOutOfRange otherwise.
BigCount stirling2(int n, int k);
BigCount binomial(int n, int k);
BigCount factorial(int n);

// Tallies of inequivalent distinguishing vertex colorings.
struct ColoringClassCount {
  int k = 0;
  std::uint64_t phi_k = 0;  // surjective onto {1..k}
  std::uint64_t Phi_k = 0;  // colours drawn from {1..k}
  std::vector<std::uint64_t> phi;  // phi[i] for i = 0..k, phi[0] = 0
  int theta = 0;                   // vertex threshold found by exact_threshold
  bool sum_identity_holds = false;       // Phi_k = sum_i C(k,i) phi_i
  bool stirling_identity_applies = false;  // k >= theta
  bool stirling_identity_holds = false;    // phi_k = k! S(n,k) / |Aut|
};

// Enumerates all k^n vertex colorings, keeps the distinguishing ones, and
// counts orbits by keeping each coloring that is the lexicographic minimum of
// its orbit. Requires 1 <= k <= n <= limits.max_count_order.
ColoringClassCount count_classes(const Graph& g, const AutomorphismGroup& group, int k,
                                 const OracleLimits& limits = {});

}  // namespace dthresh
