#include "dthresh/families.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "dthresh/errors.hpp"

namespace dthresh {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterOutOfRange(message);
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ParameterOutOfRange("bad integer '" + std::string(s) + "' in family spec '" +
                              std::string(context) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view context) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(
      Overloaded{
          [](const family::Path& f) { require(f.n >= 1, "path needs n >= 1"); },
          [](const family::Cycle& f) { require(f.n >= 3, "cycle needs n >= 3"); },
          [](const family::Complete& f) { require(f.n >= 1, "complete graph needs n >= 1"); },
          [](const family::CompleteBipartite& f) {
            require(f.m >= 1 && f.n >= 1, "complete bipartite graph needs m >= 1 and n >= 1");
          },
          [](const family::Star& f) { require(f.m >= 1, "star needs m >= 1"); },
          [](const family::DoubleStar& f) { require(f.n >= 1, "double star needs n >= 1"); },
          [](const family::Kneser& f) {
            require(f.k == 2, "only Kneser graphs K(n,2) are supported");
            require(f.n >= 5, "Kneser graph needs n >= 5");
          },
          [](const family::Circulant& f) {
            require(f.n >= 1, "circulant needs n >= 1");
            std::set<int> seen;
            for (int s : f.connections) {
              require(s >= 1 && s <= f.n / 2,
                      "circulant connection " + std::to_string(s) + " outside 1.." +
                          std::to_string(f.n / 2));
              require(seen.insert(s).second, "circulant connection set has a repeat");
            }
          },
          [](const family::Empty& f) { require(f.n >= 1, "empty graph needs n >= 1"); },
      },
      spec);
}

Graph build_family(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [](const family::Path& f) {
            std::vector<Edge> e;
            for (int i = 0; i + 1 < f.n; ++i) e.push_back({i, i + 1});
            return Graph::from_edges(f.n, e);
          },
          [](const family::Cycle& f) {
            std::vector<Edge> e;
            for (int i = 0; i < f.n; ++i) e.push_back({i, (i + 1) % f.n});
            return Graph::from_edges(f.n, e);
          },
          [](const family::Complete& f) {
            std::vector<Edge> e;
            for (int i = 0; i < f.n; ++i)
              for (int j = i + 1; j < f.n; ++j) e.push_back({i, j});
            return Graph::from_edges(f.n, e);
          },
          [](const family::CompleteBipartite& f) {
            const int m = std::min(f.m, f.n);
            const int n = std::max(f.m, f.n);
            std::vector<Edge> e;
            for (int i = 0; i < m; ++i)
              for (int j = 0; j < n; ++j) e.push_back({i, m + j});
            return Graph::from_edges(m + n, e);
          },
          [](const family::Star& f) {
            std::vector<Edge> e;
            for (int i = 1; i <= f.m; ++i) e.push_back({0, i});
            return Graph::from_edges(f.m + 1, e);
          },
          [](const family::DoubleStar& f) {
            std::vector<Edge> e;
            for (int i = 0; i < f.n; ++i) {
              e.push_back({i, f.n});
              e.push_back({i, f.n + 1});
            }
            return Graph::from_edges(f.n + 2, e);
          },
          [](const family::Kneser& f) {
            std::vector<std::pair<int, int>> subsets;
            for (int a = 0; a < f.n; ++a)
              for (int b = a + 1; b < f.n; ++b) subsets.emplace_back(a, b);
            std::vector<Edge> e;
            for (std::size_t i = 0; i < subsets.size(); ++i) {
              for (std::size_t j = i + 1; j < subsets.size(); ++j) {
                const auto [a, b] = subsets[i];
                const auto [c, d] = subsets[j];
                if (a != c && a != d && b != c && b != d) {
                  e.push_back({static_cast<int>(i), static_cast<int>(j)});
                }
              }
            }
            return Graph::from_edges(static_cast<int>(subsets.size()), e);
          },
          [](const family::Circulant& f) {
            std::set<Edge> e;
            for (int i = 0; i < f.n; ++i) {
              for (int s : f.connections) {
                const int j = (i + s) % f.n;
                e.insert({std::min(i, j), std::max(i, j)});
              }
            }
            return Graph::from_edges(f.n, std::vector<Edge>(e.begin(), e.end()));
          },
          [](const family::Empty& f) { return Graph::from_edges(f.n, {}); },
      },
      spec);
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterOutOfRange("family spec '" + std::string(text) + "' lacks ':'");
  }
  const auto name = text.substr(0, colon);
  const auto params = text.substr(colon + 1);
  FamilySpec spec;
  auto single = [&] { return parse_int(params, text); };
  auto list = [&](std::size_t expected_min, std::size_t expected_max) {
    auto v = parse_int_list(params, text);
    if (v.size() < expected_min || v.size() > expected_max) {
      throw ParameterOutOfRange("wrong parameter count in family spec '" + std::string(text) +
                                "'");
    }
    return v;
  };
  if (name == "path") {
    spec = family::Path{single()};
  } else if (name == "cycle") {
    spec = family::Cycle{single()};
  } else if (name == "complete") {
    spec = family::Complete{single()};
  } else if (name == "biclique") {
    auto v = list(2, 2);
    spec = family::CompleteBipartite{v[0], v[1]};
  } else if (name == "star") {
    spec = family::Star{single()};
  } else if (name == "doublestar") {
    spec = family::DoubleStar{single()};
  } else if (name == "kneser") {
    auto v = list(1, 2);
    spec = family::Kneser{v[0], v.size() == 2 ? v[1] : 2};
  } else if (name == "circulant") {
    const auto second = params.find(':');
    const int n = parse_int(params.substr(0, second), text);
    std::vector<int> s;
    if (second != std::string_view::npos) s = parse_int_list(params.substr(second + 1), text);
    spec = family::Circulant{n, std::move(s)};
  } else if (name == "empty") {
    spec = family::Empty{single()};
  } else {
    throw ParameterOutOfRange("unknown family '" + std::string(name) + "'");
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Path& f) { return "path:" + std::to_string(f.n); },
          [](const family::Cycle& f) { return "cycle:" + std::to_string(f.n); },
          [](const family::Complete& f) { return "complete:" + std::to_string(f.n); },
          [](const family::CompleteBipartite& f) {
            return "biclique:" + std::to_string(f.m) + "," + std::to_string(f.n);
          },
          [](const family::Star& f) { return "star:" + std::to_string(f.m); },
          [](const family::DoubleStar& f) { return "doublestar:" + std::to_string(f.n); },
          [](const family::Kneser& f) {
            return "kneser:" + std::to_string(f.n) + "," + std::to_string(f.k);
          },
          [](const family::Circulant& f) {
            std::string s = "circulant:" + std::to_string(f.n) + ":";
            for (std::size_t i = 0; i < f.connections.size(); ++i) {
              if (i) s += ",";
              s += std::to_string(f.connections[i]);
            }
            return s;
          },
          [](const family::Empty& f) { return "empty:" + std::to_string(f.n); },
      },
      spec);
}

}  // namespace dthresh
