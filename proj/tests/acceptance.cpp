// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "dthresh/cartesian.hpp"
#include "dthresh/errors.hpp"
#include "dthresh/families.hpp"
#include "dthresh/oracle.hpp"
#include "dthresh/thresholds.hpp"
#include "support/test_support.hpp"

using namespace dthresh;
namespace t = dthresh::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back("FAIL: " + why);
  }
  void note(const std::string& text) { notes.push_back(text); }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 for no limit
  std::function<Outcome()> body;
};

std::string str(const Threshold& x) { return x.to_string(); }

std::string edges_of(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " {";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    s += (i ? " " : "") + std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s + "}";
}

std::vector<Graph> corpus(const std::string& name, int max_order = 1 << 30) {
  std::vector<Graph> out;
  for (auto& entry : t::load_corpus(name))
    if (entry.graph.order() <= max_order) out.push_back(std::move(entry.graph));
  return out;
}

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

// ---------------------------------------------------------------------------

Outcome family_edge_formulas() {
  Outcome o;
  int checked = 0;
  auto expect = [&](const FamilySpec& spec, std::int64_t formula) {
    const auto lemma = theta_prime_by_lemma(build_family(spec));
    std::int64_t closed = -1;
    try {
      closed = threshold_closed_form(spec, Mode::Edge);
    } catch (const OutOfTheoremRange& e) {
      o.fail(to_string(spec) + ": closed form refused: " + e.what());
    }
    ++checked;
    if (lemma != Threshold::of(formula) || closed != formula) {
      o.fail(to_string(spec) + ": formula " + std::to_string(formula) + ", closed form " +
             std::to_string(closed) + ", lemma " + str(lemma));
    }
  };
  // P_2 lies outside the theorem's n >= 3: K_2 cannot be edge-distinguished.
  {
    bool refused = false;
    try {
      threshold_closed_form(family::Path{2}, Mode::Edge);
    } catch (const OutOfTheoremRange&) {
      refused = true;
    }
    const auto lemma = theta_prime_by_lemma(build_family(family::Path{2}));
    ++checked;
    if (!refused || lemma.defined()) o.fail("path:2 should be refused and undefined, lemma " + str(lemma));
    else o.note("path:2: closed form refuses (n >= 3 required), lemma reports undefined");
  }
  for (int n = 3; n <= 9; ++n) expect(family::Path{n}, n / 2 + 1);
  for (int n = 3; n <= 9; ++n) expect(family::Cycle{n}, n / 2 + 2);
  expect(family::Complete{3}, 3);
  for (int n = 4; n <= 6; ++n) expect(family::Complete{n}, (n - 1) * (n - 2) / 2 + 2);
  for (int m = 2; m <= 7; ++m)
    for (int n = 3; m + n <= 7; ++n)
      if (m <= n) expect(family::CompleteBipartite{m, n}, m * n - m + 1);
  for (int m = 2; m <= 7; ++m) expect(family::Star{m}, m);
  o.detail = std::to_string(checked) + " instances";
  return o;
}

Outcome family_vertex_formulas() {
  Outcome o;
  int checked = 0;
  auto expect = [&](const FamilySpec& spec, std::int64_t formula) {
    const auto lemma = theta_by_lemma(build_family(spec));
    const auto closed = threshold_closed_form(spec, Mode::Vertex);
    ++checked;
    if (lemma != formula || closed != formula) {
      o.fail(to_string(spec) + ": formula " + std::to_string(formula) + ", closed form " +
             std::to_string(closed) + ", lemma " + std::to_string(lemma));
    }
  };
  for (int n = 2; n <= 9; ++n) expect(family::Path{n}, ceil_half(n) + 1);
  for (int n = 3; n <= 9; ++n) expect(family::Cycle{n}, n / 2 + 2);
  for (int n = 3; n <= 6; ++n) expect(family::Complete{n}, n);
  for (int m = 2; m <= 7; ++m)
    for (int n = 3; m + n <= 7; ++n)
      if (m <= n) expect(family::CompleteBipartite{m, n}, m + n);
  const int kn = 5;
  expect(family::Kneser{kn, 2}, (kn * kn - 3 * kn + 6) / 2);
  if (theta_by_lemma(build_family(family::Kneser{5, 2})) != 8) o.fail("Petersen graph is not 8");
  o.detail = std::to_string(checked) + " instances, Petersen = 8";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const OracleLimits limits{19, 8};
  int graphs = 0;
  for (const auto& g : corpus("connected_le10_edges.g6")) {
    if (g.size() > 9) continue;
    ++graphs;
    const auto group = enumerate_automorphisms(g);
    const auto vertex = exact_threshold(g, group, Mode::Vertex, limits).threshold;
    const auto edge = exact_threshold(g, group, Mode::Edge, limits).threshold;
    const auto total = exact_threshold(g, group, Mode::Total, limits).threshold;
    if (vertex != Threshold::of(theta_by_lemma(g, group)))
      o.fail("vertex mode on " + edges_of(g));
    if (edge != theta_prime_by_lemma(g, group)) o.fail("edge mode on " + edges_of(g));
    if (total != Threshold::of(theta_total_by_lemma(g, group)))
      o.fail("total mode on " + edges_of(g));
  }
  if (graphs != 1069) o.fail("corpus has " + std::to_string(graphs) + " graphs, expected 1069");
  o.detail = std::to_string(graphs) + " graphs x 3 modes";
  return o;
}

// Graphs in `hits` matched against `expected` up to isomorphism, by brute force.
void compare_sets(Outcome& o, const std::vector<Graph>& hits,
                  const std::vector<std::pair<std::string, Graph>>& expected) {
  std::vector<bool> seen(expected.size(), false);
  for (const auto& h : hits) {
    bool known = false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (t::brute_force_isomorphic(h, expected[i].second)) {
        if (seen[i]) o.fail("duplicate of " + expected[i].first);
        seen[i] = known = true;
      }
    }
    if (!known) o.fail("unexpected graph " + edges_of(h));
  }
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (!seen[i]) o.fail("missing " + expected[i].first);
}

Outcome census(std::int64_t value, const std::vector<std::pair<std::string, Graph>>& expected) {
  Outcome o;
  std::vector<Graph> hits;
  const auto graphs = corpus("connected_le7.g6");
  for (const auto& g : graphs)
    if (theta_prime_by_lemma(g) == Threshold::of(value)) hits.push_back(g);
  compare_sets(o, hits, expected);
  o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(hits.size()) +
             " with edge threshold " + std::to_string(value);
  for (const auto& h : hits) {
    const auto exact = exact_threshold(h, enumerate_automorphisms(h), Mode::Edge, {19, 8});
    o.note(edges_of(h) + ": oracle edge threshold " + str(exact.threshold));
  }
  return o;
}

Outcome line_graph_identity() {
  Outcome o;
  int checked = 0;
  for (const auto& g : corpus("connected_le7.g6", 6)) {
    if (g.size() < 2) continue;
    ++checked;
    const auto edge = theta_prime_by_lemma(g);
    const auto line = theta_by_lemma(line_graph(g));
    if (edge != Threshold::of(line)) {
      const auto lg = line_graph(g);
      const auto group = enumerate_automorphisms(g);
      const auto line_group = enumerate_automorphisms(lg);
      const OracleLimits limits{19, 8};
      o.fail(edges_of(g) + ": edge threshold " + str(edge) + " (oracle " +
             str(exact_threshold(g, group, Mode::Edge, limits).threshold) +
             "), line graph threshold " + std::to_string(line) + " (oracle " +
             str(exact_threshold(lg, line_group, Mode::Vertex, limits).threshold) +
             "), |Aut(G)| = " + std::to_string(group.order()) +
             ", |Aut(L(G))| = " + std::to_string(line_group.order()));
    }
  }
  o.detail = std::to_string(checked) + " graphs";
  return o;
}

Outcome total_bounds() {
  Outcome o;
  int checked = 0;
  for (const auto& g : corpus("connected_le7.g6", 6)) {
    ++checked;
    const auto group = enumerate_automorphisms(g);
    const auto total = theta_total_by_lemma(g, group);
    const auto vertex = theta_by_lemma(g, group);
    const auto edge = theta_prime_by_lemma(g, group);
    if (edge.defined() && total > vertex + edge.value() - 1) {
      o.fail(edges_of(g) + ": total " + std::to_string(total) + " > theta + theta' - 1 = " +
             std::to_string(vertex + edge.value() - 1));
    }
    if (total > g.order() + g.size() - 1) {
      o.fail(edges_of(g) + ": total " + std::to_string(total) + " > n + m - 1 = " +
             std::to_string(g.order() + g.size() - 1));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const auto star = build_family(family::Star{n});
    const auto total = theta_total_by_lemma(star);
    const auto exact =
        exact_threshold(star, enumerate_automorphisms(star), Mode::Total, {19, 8}).threshold;
    if (total != 2 * n || exact != Threshold::of(2 * n)) {
      o.fail("star:" + std::to_string(n) + ": lemma " + std::to_string(total) + ", oracle " +
             str(exact) + ", expected " + std::to_string(2 * n));
    }
  }
  o.detail = std::to_string(checked) + " graphs, stars 2..6";
  return o;
}

Outcome product_distinct() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<Graph>>> pairs{
      {"path:2 x path:3", {build_family(family::Path{2}), build_family(family::Path{3})}},
      {"path:2 x complete:3", {build_family(family::Path{2}), build_family(family::Complete{3})}},
      {"path:3 x star:3", {build_family(family::Path{3}), build_family(family::Star{3})}},
  };
  std::string detail;
  for (const auto& [name, factors] : pairs) {
    const auto formula = theta_prime_product_distinct(factors);
    const auto direct = theta_prime_by_lemma(cartesian_product(factors));
    detail += (detail.empty() ? "" : ", ") + name + " = " + std::to_string(formula);
    if (direct != Threshold::of(formula))
      o.fail(name + ": formula " + std::to_string(formula) + ", assembled " + str(direct));
  }
  o.detail = detail;
  return o;
}

Outcome product_power() {
  Outcome o;
  const std::vector<std::tuple<std::string, Graph, int>> powers{
      {"path:3^2", build_family(family::Path{3}), 2},
      {"complete:3^2", build_family(family::Complete{3}), 2},
      {"path:2^3", build_family(family::Path{2}), 3},
      {"path:2^2", build_family(family::Path{2}), 2},
  };
  std::string detail;
  for (const auto& [name, base, k] : powers) {
    const auto formula = theta_prime_product_power(base, k);
    const auto direct = theta_prime_by_lemma(ProductSpec::power(base, k).assemble());
    detail += (detail.empty() ? "" : ", ") + name + " = " + std::to_string(formula);
    if (direct != Threshold::of(formula))
      o.fail(name + ": formula " + std::to_string(formula) + ", assembled " + str(direct));
  }
  const auto c4 = threshold_closed_form(family::Cycle{4}, Mode::Edge);
  if (c4 != 4 || theta_prime_product_power(build_family(family::Path{2}), 2) != c4)
    o.fail("path:2^2 does not match the cycle:4 closed form 4");
  o.detail = detail + "; cycle:4 closed form 4";

  // The half-edge transposition term against the exact transposition count.
  const auto asym = Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 3}});
  for (int k : {2, 3}) {
    const auto half = theta_prime_product_power(asym, k, TranspositionTerm::HalfEdgeCount);
    const auto exact = theta_prime_product_power(asym, k, TranspositionTerm::TranspositionCycles);
    const auto direct = theta_prime_by_lemma(ProductSpec::power(asym, k).assemble());
    o.note("asymmetric 6-vertex base, k=" + std::to_string(k) + ": half-edge term " +
           std::to_string(half) + ", transposition-cycle term " + std::to_string(exact) +
           ", assembled " + str(direct));
  }
  return o;
}

Outcome counting_identities() {
  Outcome o;
  int checked = 0;
  for (const auto& g : corpus("connected_le7.g6", 5)) {
    const auto group = enumerate_automorphisms(g);
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
      const auto c = count_classes(g, group, k);
      ++checked;
      // Sum over subsets of the palette.
      std::uint64_t sum = 0;
      for (int i = 1; i <= k; ++i) sum += static_cast<std::uint64_t>(binomial(k, i)) * c.phi[i];
      if (sum != c.Phi_k || !c.sum_identity_holds)
        o.fail(edges_of(g) + " k=" + std::to_string(k) + ": sum identity");
      if (k >= c.theta) {
        // Surjections by inclusion-exclusion, independent of the Stirling table.
        std::int64_t surjections = 0;
        for (int j = 0; j <= k; ++j) {
          std::int64_t p = 1;
          for (int e = 0; e < n; ++e) p *= k - j;
          surjections += (j % 2 ? -1 : 1) * static_cast<std::int64_t>(binomial(k, j)) * p;
        }
        const auto expected = static_cast<std::uint64_t>(surjections) / group.order();
        if (surjections % static_cast<std::int64_t>(group.order()) != 0 || c.phi_k != expected ||
            !c.stirling_identity_holds)
          o.fail(edges_of(g) + " k=" + std::to_string(k) + ": Stirling identity");
        if (static_cast<std::uint64_t>(factorial(k) * stirling2(n, k)) !=
            static_cast<std::uint64_t>(surjections))
          o.fail("k! S(" + std::to_string(n) + "," + std::to_string(k) + ") mismatch");
      }
    }
  }
  o.detail = std::to_string(checked) + " (graph, k) pairs";
  return o;
}

}  // namespace

int main() {
  const auto k12 = build_family(family::Star{2});
  const std::vector<Criterion> criteria{
      {1, "edge threshold family formulas", 10, family_edge_formulas},
      {2, "vertex threshold family formulas", 10, family_vertex_formulas},
      {3, "oracle equals cycle lemma, connected graphs with <= 9 edges", 300, oracle_equivalence},
      {4, "edge threshold 2 census, connected graphs on <= 7 vertices", 0,
       [&] { return census(2, {{"star:2", k12}}); }},
      {5, "edge threshold 3 census, connected graphs on <= 7 vertices", 0,
       [] {
         return census(3, {{"path:4", build_family(family::Path{4})},
                           {"star:3", build_family(family::Star{3})},
                           {"complete:3", build_family(family::Complete{3})}});
       }},
      {6, "edge threshold of G equals vertex threshold of L(G), <= 6 vertices", 0,
       line_graph_identity},
      {7, "total threshold bounds, connected graphs on <= 6 vertices", 0, total_bounds},
      {8, "products of distinct factors against assembled products", 60, product_distinct},
      {9, "powers against assembled products", 0, product_power},
      {10, "class counting identities, connected graphs on <= 5 vertices", 120,
       counting_identities},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << o.detail
              << " (" << timing << ")\n";
    for (const auto& n : o.notes) std::cout << "       " << n << '\n';
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
