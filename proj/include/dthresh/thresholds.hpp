#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dthresh/automorphisms.hpp"
#include "dthresh/families.hpp"
#include "dthresh/graph.hpp"
#include "dthresh/oracle.hpp"
#include "dthresh/types.hpp"

namespace dthresh {

// Maximum vertex, edge and total cycle counts over the non-identity
// automorphisms, with one maximising element for each.
struct CycleExtremes {
  CycleStats max;
  std::optional<Permutation> vertex_argmax;
  std::optional<Permutation> edge_argmax;
  std::optional<Permutation> total_argmax;
  // Some non-identity automorphism fixes every edge.
  bool edge_fixing_symmetry = false;
};

CycleExtremes scan_cycles(const Graph& g, const AutomorphismGroup& group);

// An asymmetric graph has threshold 1 in every mode.
int theta_by_lemma(const Graph& g, const AutomorphismGroup& group);
int theta_by_lemma(const Graph& g);

// Undefined when a non-identity automorphism fixes every edge.
Threshold theta_prime_by_lemma(const Graph& g, const AutomorphismGroup& group);
Threshold theta_prime_by_lemma(const Graph& g);

int theta_total_by_lemma(const Graph& g, const AutomorphismGroup& group);
int theta_total_by_lemma(const Graph& g);

// Structural test: no K_2 component and at most one isolated vertex.
bool breakable_by_edges(const Graph& g);

// Family formulas. Vertex mode: K_n, K_{m,n}, stars, P_n (n >= 2), C_n,
// empty graphs, K(n,2). Edge mode: P_n, C_n, K_n (n >= 3), K_{m,n} with
// 2 <= m <= n and n >= 3, K_{1,m} with m >= 2. Anything else throws
// OutOfTheoremRange; the caller falls back to the cycle lemma.
std::int64_t threshold_closed_form(const FamilySpec& spec, Mode mode);

enum class SmallEdgeThresholdCase { None, K12, P4, K13, K3 };

struct SmallEdgeThresholdClassification {
  Threshold theta_prime;
  SmallEdgeThresholdCase match = SmallEdgeThresholdCase::None;
};

// For connected g: theta' = 2 forces K_{1,2}; theta' = 3 forces P_4, K_{1,3}
// or K_3. Throws TheoremViolation if g breaks either statement.
SmallEdgeThresholdClassification classify_theta_prime_small(const Graph& g);

struct Theta3Structure {
  int order = 0;
  bool small_case = false;  // n == 3

  std::optional<int> prime;     // p with n = 2p, p prime, p not 3 or 5
  bool connected = false;
  bool bi_regular = false;      // exactly two degree classes, each of size p
  std::vector<int> class_low;   // vertices of the smaller degree
  std::vector<int> class_high;
  bool low_circulant = false;
  bool high_circulant = false;
  bool classes_nonisomorphic = false;
  bool cross_degrees_in_range = false;  // 3 <= |N(v) in other class| <= p - 3

  bool large_case() const {
    return prime.has_value() && connected && bi_regular && low_circulant && high_circulant &&
           classes_nonisomorphic && cross_degrees_in_range;
  }
};

// Evaluates each structural condition on g without any precondition.
Theta3Structure theta3_structure(const Graph& g);

// As theta3_structure, but first requires theta(g) = 3 by the cycle lemma and
// n = 3 or n > 4; throws PreconditionViolated otherwise.
Theta3Structure verify_theta3_structure(const Graph& g);

// Undefined when no coloring in the mode is distinguishing. Throws
// SizeLimitExceeded beyond limits.max_domain.
Threshold distinguishing_number(const Graph& g, const AutomorphismGroup& group, Mode mode,
                                const OracleLimits& limits = {});

struct TaggedThreshold {
  Threshold value;
  Method method;
};

struct ThresholdReport {
  std::size_t automorphism_count = 0;
  std::optional<TaggedThreshold> theta;
  std::optional<TaggedThreshold> theta_prime;
  std::optional<TaggedThreshold> theta_total;
  std::optional<TaggedThreshold> dist_number;
  std::optional<TaggedThreshold> dist_index;
  bool breakable_by_edges = true;
  CycleExtremes extremes;
};

struct ReportOptions {
  bool vertex = true;
  bool edge = true;
  bool total = true;
  bool distinguishing_numbers = false;  // oracle D / D' when within limits
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
  OracleLimits limits;
};

ThresholdReport threshold_report(const Graph& g, const ReportOptions& options = {});

}  // namespace dthresh
