#pragma once

#include <string>
#include <string_view>

#include "dthresh/graph.hpp"

namespace dthresh {

inline constexpr int kDefaultGraph6OrderCap = 64;

// graph6: order N(n) (one byte for n <= 62, '~' plus three bytes up to
// 258047), then the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed six bits per byte, each byte offset by 63. An optional ">>graph6<<"
// header and a trailing newline are accepted.
Graph parse_graph6(std::string_view text, int order_cap = kDefaultGraph6OrderCap);
std::string emit_graph6(const Graph& g);

}  // namespace dthresh
