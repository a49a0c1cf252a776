#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dthresh/graph.hpp"

namespace dthresh {

namespace family {

struct Path { int n = 1; };
struct Cycle { int n = 3; };
struct Complete { int n = 1; };
// Normalised so that m <= n when built or evaluated.
struct CompleteBipartite { int m = 1; int n = 1; };
struct Star { int m = 1; };            // K_{1,m}
struct DoubleStar { int n = 1; };      // two nonadjacent centres sharing n leaves
struct Kneser { int n = 5; int k = 2; };
struct Circulant { int n = 1; std::vector<int> connections; };
struct Empty { int n = 1; };

}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete,
                                family::CompleteBipartite, family::Star, family::DoubleStar,
                                family::Kneser, family::Circulant, family::Empty>;

// Throws ParameterOutOfRange naming the violated bound.
void validate(const FamilySpec& spec);

// Canonical labelled instance:
//   Path        0-1-...-(n-1)
//   Cycle       path plus {0, n-1}
//   biclique    parts {0..m-1} and {m..m+n-1}
//   Star        centre 0, leaves 1..m
//   DoubleStar  leaves 0..n-1, centres n and n+1
//   Kneser      2-subsets of {0..n-1} in lexicographic order, adjacent iff disjoint
//   Circulant   i ~ j iff (i - j mod n) in S or -S
Graph build_family(const FamilySpec& spec);

// `name:params` with names path, cycle, complete, biclique, star, doublestar,
// kneser, circulant, empty. Examples: path:4, biclique:2,3, kneser:5,
// circulant:7:1,2.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

}  // namespace dthresh
