#include "dthresh/thresholds.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dthresh/errors.hpp"

namespace dthresh {

CycleExtremes scan_cycles(const Graph& g, const AutomorphismGroup& group) {
  CycleExtremes out;
  for (const auto& p : group.elements()) {
    if (p.is_identity()) continue;
    const auto edges = induced_edge_permutation(g, p);
    const CycleStats s{p.cycle_count(), edges.cycle_count(), 0};
    const int total = s.vertex_cycles + s.edge_cycles;
    if (edges.is_identity()) out.edge_fixing_symmetry = true;
    if (!out.vertex_argmax || s.vertex_cycles > out.max.vertex_cycles) {
      out.max.vertex_cycles = s.vertex_cycles;
      out.vertex_argmax = p;
    }
    if (!out.edge_argmax || s.edge_cycles > out.max.edge_cycles) {
      out.max.edge_cycles = s.edge_cycles;
      out.edge_argmax = p;
    }
    if (!out.total_argmax || total > out.max.total_cycles) {
      out.max.total_cycles = total;
      out.total_argmax = p;
    }
  }
  return out;
}

int theta_by_lemma(const Graph& g, const AutomorphismGroup& group) {
  const auto x = scan_cycles(g, group);
  return x.vertex_argmax ? x.max.vertex_cycles + 1 : 1;
}

int theta_by_lemma(const Graph& g) { return theta_by_lemma(g, enumerate_automorphisms(g)); }

Threshold theta_prime_by_lemma(const Graph& g, const AutomorphismGroup& group) {
  const auto x = scan_cycles(g, group);
  if (x.edge_fixing_symmetry) return Threshold::undefined();
  return Threshold::of(x.edge_argmax ? x.max.edge_cycles + 1 : 1);
}

Threshold theta_prime_by_lemma(const Graph& g) {
  return theta_prime_by_lemma(g, enumerate_automorphisms(g));
}

int theta_total_by_lemma(const Graph& g, const AutomorphismGroup& group) {
  const auto x = scan_cycles(g, group);
  return x.total_argmax ? x.max.total_cycles + 1 : 1;
}

int theta_total_by_lemma(const Graph& g) {
  return theta_total_by_lemma(g, enumerate_automorphisms(g));
}

bool breakable_by_edges(const Graph& g) {
  const auto label = component_labels(g);
  std::map<int, std::pair<int, int>> shape;  // component -> (vertices, degree sum)
  for (int v = 0; v < g.order(); ++v) {
    auto& [vertices, degrees] = shape[label[v]];
    ++vertices;
    degrees += g.degree(v);
  }
  int isolated = 0;
  for (const auto& [component, s] : shape) {
    if (s.first == 2 && s.second == 2) return false;
    if (s.first == 1) ++isolated;
  }
  return isolated <= 1;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void out_of_range(const FamilySpec& spec, Mode mode, const std::string& why) {
  throw OutOfTheoremRange("no " + std::string(to_string(mode)) + " closed form for " +
                          to_string(spec) + ": " + why);
}

std::int64_t vertex_closed_form(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [&](const family::Path& f) -> std::int64_t {
            if (f.n < 2) out_of_range(spec, Mode::Vertex, "path formula needs n >= 2");
            return (f.n + 1) / 2 + 1;
          },
          [](const family::Cycle& f) -> std::int64_t { return f.n / 2 + 2; },
          [](const family::Complete& f) -> std::int64_t { return f.n; },
          [](const family::CompleteBipartite& f) -> std::int64_t { return f.m + f.n; },
          [](const family::Star& f) -> std::int64_t { return f.m + 1; },
          [](const family::Empty& f) -> std::int64_t { return f.n; },
          [](const family::Kneser& f) -> std::int64_t {
            const std::int64_t n = f.n;
            return (n * n - 3 * n + 6) / 2;
          },
          [&](const family::DoubleStar&) -> std::int64_t {
            out_of_range(spec, Mode::Vertex, "no formula for double stars");
          },
          [&](const family::Circulant&) -> std::int64_t {
            out_of_range(spec, Mode::Vertex, "no formula for circulants");
          },
      },
      spec);
}

std::int64_t edge_closed_form(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [&](const family::Path& f) -> std::int64_t {
            if (f.n < 3) out_of_range(spec, Mode::Edge, "path formula needs n >= 3");
            return f.n / 2 + 1;
          },
          [](const family::Cycle& f) -> std::int64_t { return f.n / 2 + 2; },
          [&](const family::Complete& f) -> std::int64_t {
            if (f.n < 3) out_of_range(spec, Mode::Edge, "complete-graph formula needs n >= 3");
            if (f.n == 3) return 3;
            const std::int64_t n = f.n;
            return (n - 1) * (n - 2) / 2 + 2;
          },
          [&](const family::CompleteBipartite& f) -> std::int64_t {
            const std::int64_t m = std::min(f.m, f.n);
            const std::int64_t n = std::max(f.m, f.n);
            if (m == 1) {
              if (n < 2) out_of_range(spec, Mode::Edge, "star formula needs m >= 2");
              return n;
            }
            if (n < 3) out_of_range(spec, Mode::Edge, "biclique formula needs m >= 2, n >= 3");
            return m * n - m + 1;
          },
          [&](const family::Star& f) -> std::int64_t {
            if (f.m < 2) out_of_range(spec, Mode::Edge, "star formula needs m >= 2");
            return f.m;
          },
          [&](const auto&) -> std::int64_t {
            out_of_range(spec, Mode::Edge, "family not covered");
          },
      },
      spec);
}

Graph star(int m) { return build_family(family::Star{m}); }

}  // namespace

std::int64_t threshold_closed_form(const FamilySpec& spec, Mode mode) {
  validate(spec);
  switch (mode) {
    case Mode::Vertex: return vertex_closed_form(spec);
    case Mode::Edge: return edge_closed_form(spec);
    case Mode::Total: break;
  }
  out_of_range(spec, mode, "no total-mode formulas");
}

SmallEdgeThresholdClassification classify_theta_prime_small(const Graph& g) {
  if (!is_connected(g)) throw PreconditionViolated("classification needs a connected graph");
  SmallEdgeThresholdClassification out{theta_prime_by_lemma(g), SmallEdgeThresholdCase::None};
  if (!out.theta_prime.defined()) return out;
  const auto value = out.theta_prime.value();
  if (value == 2) {
    if (!are_isomorphic(g, star(2))) {
      throw TheoremViolation("edge threshold 2 on a graph other than K_{1,2}");
    }
    out.match = SmallEdgeThresholdCase::K12;
  } else if (value == 3) {
    if (are_isomorphic(g, build_family(family::Path{4}))) {
      out.match = SmallEdgeThresholdCase::P4;
    } else if (are_isomorphic(g, star(3))) {
      out.match = SmallEdgeThresholdCase::K13;
    } else if (are_isomorphic(g, build_family(family::Complete{3}))) {
      out.match = SmallEdgeThresholdCase::K3;
    } else {
      throw TheoremViolation("edge threshold 3 on a graph other than P_4, K_{1,3}, K_3");
    }
  }
  return out;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Circulant iff some automorphism is a single cycle through all vertices.
bool is_circulant(const Graph& h) {
  if (h.order() <= 1) return true;
  const auto group = enumerate_automorphisms(h);
  return std::any_of(group.elements().begin(), group.elements().end(),
                     [](const Permutation& p) { return p.cycle_count() == 1; });
}

}  // namespace

Theta3Structure theta3_structure(const Graph& g) {
  Theta3Structure s;
  const int n = g.order();
  s.order = n;
  s.small_case = n == 3;
  s.connected = is_connected(g);
  if (n % 2 == 0 && is_prime(n / 2) && n / 2 != 3 && n / 2 != 5) s.prime = n / 2;

  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
  if (by_degree.size() == 2) {
    s.class_low = by_degree.begin()->second;
    s.class_high = by_degree.rbegin()->second;
  }
  const int p = n / 2;
  s.bi_regular = n % 2 == 0 && by_degree.size() == 2 &&
                 static_cast<int>(s.class_low.size()) == p &&
                 static_cast<int>(s.class_high.size()) == p;
  if (!s.bi_regular) return s;

  const Graph low = induced_subgraph(g, s.class_low);
  const Graph high = induced_subgraph(g, s.class_high);
  s.low_circulant = is_circulant(low);
  s.high_circulant = is_circulant(high);
  s.classes_nonisomorphic = !are_isomorphic(low, high);

  std::vector<char> in_low(n, 0);
  for (int v : s.class_low) in_low[v] = 1;
  s.cross_degrees_in_range = true;
  for (int v = 0; v < n; ++v) {
    int cross = 0;
    for (int w : g.neighbors(v)) cross += in_low[w] != in_low[v];
    if (cross < 3 || cross > p - 3) s.cross_degrees_in_range = false;
  }
  return s;
}

Theta3Structure verify_theta3_structure(const Graph& g) {
  const int theta = theta_by_lemma(g);
  if (theta != 3) {
    throw PreconditionViolated("theta is " + std::to_string(theta) + ", not 3");
  }
  if (g.order() != 3 && g.order() <= 4) {
    throw PreconditionViolated("structure check needs n = 3 or n > 4");
  }
  return theta3_structure(g);
}

Threshold distinguishing_number(const Graph& g, const AutomorphismGroup& group, Mode mode,
                                const OracleLimits& limits) {
  const int d = domain_size(g, mode);
  if (d > limits.max_domain) {
    throw SizeLimitExceeded(std::string(to_string(mode)) + " domain has " + std::to_string(d) +
                            " elements, oracle limit is " + std::to_string(limits.max_domain));
  }
  for (int k = 1; k <= std::max(d, 1); ++k) {
    if (find_distinguishing_coloring(g, group, mode, k)) return Threshold::of(k);
  }
  return Threshold::undefined();
}

ThresholdReport threshold_report(const Graph& g, const ReportOptions& options) {
  ThresholdReport r;
  const auto group = enumerate_automorphisms(g, options.automorphism_cap);
  r.automorphism_count = group.order();
  r.extremes = scan_cycles(g, group);
  const auto& x = r.extremes;
  const bool symmetric = x.vertex_argmax.has_value();
  r.breakable_by_edges = !x.edge_fixing_symmetry;
  if (options.vertex) {
    r.theta = TaggedThreshold{Threshold::of(symmetric ? x.max.vertex_cycles + 1 : 1),
                              Method::CycleLemma};
  }
  if (options.edge) {
    r.theta_prime = TaggedThreshold{
        r.breakable_by_edges ? Threshold::of(symmetric ? x.max.edge_cycles + 1 : 1)
                             : Threshold::undefined(),
        Method::CycleLemma};
  }
  if (options.total) {
    r.theta_total = TaggedThreshold{Threshold::of(symmetric ? x.max.total_cycles + 1 : 1),
                                    Method::CycleLemma};
  }
  if (options.distinguishing_numbers) {
    if (options.vertex && g.order() <= options.limits.max_domain) {
      r.dist_number = TaggedThreshold{distinguishing_number(g, group, Mode::Vertex, options.limits),
                                      Method::Oracle};
    }
    if (options.edge && g.size() <= options.limits.max_domain) {
      r.dist_index = TaggedThreshold{distinguishing_number(g, group, Mode::Edge, options.limits),
                                     Method::Oracle};
    }
  }
  return r;
}

}  // namespace dthresh
