#include "dthresh/graph6.hpp"

#include <vector>

#include "dthresh/errors.hpp"

namespace dthresh {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text, int order_cap) {
  using Kind = Graph6Error::Kind;
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(Kind::MalformedHeader, "graph6: empty input");
  for (char c : text) {
    if (!printable(c)) {
      throw Graph6Error(Kind::MalformedHeader,
                        "graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                            " outside 63..126");
    }
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw Graph6Error(Kind::OrderExceedsCap, "graph6: 8-byte order form exceeds cap");
    }
    if (text.size() < 4) throw Graph6Error(Kind::MalformedHeader, "graph6: short order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
    if (n <= 62) {
      throw Graph6Error(Kind::MalformedHeader, "graph6: extended order used for n <= 62");
    }
    pos = 4;
  }
  if (n > order_cap) {
    throw Graph6Error(Kind::OrderExceedsCap, "graph6: order " + std::to_string(n) +
                                                 " exceeds cap " + std::to_string(order_cap));
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::size_t available = text.size() - pos;
  if (available < bytes) {
    throw Graph6Error(Kind::TruncatedBits, "graph6: expected " + std::to_string(bytes) +
                                               " data bytes, found " + std::to_string(available));
  }
  if (available > bytes) {
    throw Graph6Error(Kind::TrailingData, "graph6: " + std::to_string(available - bytes) +
                                              " unexpected trailing bytes");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace dthresh
