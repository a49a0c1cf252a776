#include <doctest.h>

#include "dthresh/cartesian.hpp"
#include "dthresh/errors.hpp"
#include "dthresh/families.hpp"
#include "dthresh/thresholds.hpp"

using namespace dthresh;

namespace {

Graph named(std::string_view spec) { return build_family(parse_family(spec)); }

// Smallest asymmetric connected graph with six vertices and six edges.
Graph asymmetric6() {
  return Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 3}});
}

// The connected prime graphs with a non-trivial automorphism on at most four
// vertices (C_4 = K_2 x K_2 is the only composite one).
std::vector<Graph> small_symmetric_primes() {
  return {named("path:2"),
          named("path:3"),
          named("complete:3"),
          named("path:4"),
          named("star:3"),
          Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),          // paw
          Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}),  // diamond
          named("complete:4")};
}

}  // namespace

TEST_CASE("q_value examples") {
  CHECK(q_value({2, 1, 3}, 2, 1) == 4);
  CHECK(q_value({1, 1, 2}, 3, 2) == 5);
  CHECK(q_value({3, 7, 10}, 1, 0) == 7);
  CHECK_THROWS_AS(q_value({1, 1, 2}, -1, 0), ParameterOutOfRange);
  CHECK_THROWS_AS(q_value({1, 1 << 30, 0}, std::int64_t{1} << 40, 0), ArithmeticOverflow);
}

TEST_CASE("q_value is monotone in each argument") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int qv = 1; qv <= 4; ++qv)
        for (int qe = 0; qe <= 4; ++qe) {
          const auto base = q_value({a, b, a + b}, qv, qe);
          CHECK(q_value({a + 1, b, a + b + 1}, qv, qe) >= base);
          CHECK(q_value({a, b + 1, a + b + 1}, qv, qe) >= base);
          CHECK(q_value({a, b, a + b}, qv + 1, qe) >= base);
          CHECK(q_value({a, b, a + b}, qv, qe + 1) >= base);
        }
}

TEST_CASE("product specs") {
  const auto spec = ProductSpec::power(named("path:2"), 3);
  CHECK(spec.is_power());
  CHECK(spec.expanded().size() == 3);
  CHECK(spec.assemble().order() == 8);
  CHECK_THROWS_AS(ProductSpec::power(named("path:2"), 1), ParameterOutOfRange);
  CHECK_FALSE(ProductSpec::distinct({named("path:2"), named("path:3")}).is_power());
}

TEST_CASE("edge threshold of products of distinct factors") {
  const std::vector pp{named("path:2"), named("path:3")};
  CHECK(theta_prime_product_distinct(pp) == 6);
  CHECK(theta_prime_product_distinct(std::vector{named("path:2"), named("complete:3")}) == 7);
  CHECK(theta_prime_product_distinct(std::vector{named("path:3"), named("star:3")}) == 13);
  const auto a = asymmetric6();
  CHECK(theta_prime_product_distinct(std::vector{named("path:2"), a}) == 1 * 6 + 1 * 6 + 1);
  CHECK(theta_prime_product_distinct(std::vector{named("path:2"), a}) ==
        theta_prime_by_lemma(cartesian_product(std::vector{named("path:2"), a})).value());
}

TEST_CASE("distinct-factor errors") {
  CHECK_THROWS_AS(theta_prime_product_distinct(std::vector{named("path:3"), named("path:3")}),
                  IsomorphicFactors);
  CHECK_THROWS_AS(theta_prime_product_distinct(std::vector{named("path:3")}), ParameterOutOfRange);
  CHECK_THROWS_AS(theta_prime_product_distinct(std::vector{named("path:3"), named("empty:2")}),
                  DisconnectedFactor);
  CHECK_THROWS_AS(theta_product_vertex(std::vector{named("star:3"), named("star:3")}),
                  IsomorphicFactors);
}

TEST_CASE("products of asymmetric factors") {
  const auto a = asymmetric6();
  // Spider with legs of length 1, 2 and 3: the smallest asymmetric tree.
  const auto b = Graph::from_edges(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
  REQUIRE(enumerate_automorphisms(b).trivial());
  CHECK(theta_prime_product_distinct(std::vector{a, b}) == 1);
  CHECK(theta_product_vertex(std::vector{a, b}) == 1);
}

TEST_CASE("distinct-factor formulas match the assembled product") {
  const auto primes = small_symmetric_primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::vector pair{primes[i], primes[j]};
      const auto product = cartesian_product(pair);
      const auto group = enumerate_automorphisms(product);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(Threshold::of(theta_prime_product_distinct(pair)) ==
            theta_prime_by_lemma(product, group));
      CHECK(theta_product_vertex(pair) == theta_by_lemma(product, group));
    }
  }
}

TEST_CASE("edge threshold of powers") {
  CHECK(theta_prime_product_power(named("path:3"), 2) == 8);
  CHECK(theta_prime_product_power(named("complete:3"), 2) == 13);
  CHECK(theta_prime_product_power(named("path:2"), 3) == 9);
  CHECK(theta_prime_product_power(named("path:2"), 2) == 4);
  CHECK(theta_prime_product_power(named("path:2"), 2) ==
        threshold_closed_form(family::Cycle{4}, Mode::Edge));
  CHECK_THROWS_AS(theta_prime_product_power(named("path:2"), 1), ParameterOutOfRange);
  CHECK_THROWS_AS(theta_prime_product_power(named("empty:2"), 2), DisconnectedFactor);
}

TEST_CASE("power formulas match the assembled power for small bases") {
  for (const auto& base : {named("path:2"), named("path:3"), named("complete:3")}) {
    const auto power = ProductSpec::power(base, 2).assemble();
    const auto group = enumerate_automorphisms(power);
    CHECK(Threshold::of(theta_prime_product_power(base, 2)) == theta_prime_by_lemma(power, group));
    CHECK(Threshold::of(theta_prime_product_power(base, 2, TranspositionTerm::TranspositionCycles)) ==
          theta_prime_by_lemma(power, group));
    CHECK(theta_power_vertex(base, 2) == theta_by_lemma(power, group));
  }
}

TEST_CASE("the half-edge transposition term undercounts for odd-free cubes") {
  // A transposition of two coordinates of G^3 fixes the edges along the third
  // coordinate whose swapped coordinates agree, so it has more than
  // |E(G^3)| / 2 edge cycles. With an asymmetric base it is the only symmetry
  // that matters.
  const auto a = asymmetric6();
  const auto cube = ProductSpec::power(a, 3).assemble();
  const auto lemma = theta_prime_by_lemma(cube);
  CHECK(lemma == Threshold::of(343));
  CHECK(theta_prime_product_power(a, 3, TranspositionTerm::TranspositionCycles) == 343);
  CHECK(theta_prime_product_power(a, 3, TranspositionTerm::HalfEdgeCount) == 325);
  CHECK(theta_prime_product_power(a, 2, TranspositionTerm::HalfEdgeCount) == 37);
  CHECK(theta_prime_product_power(a, 2, TranspositionTerm::TranspositionCycles) == 37);
}

TEST_CASE("vertex threshold of products") {
  CHECK(theta_product_vertex(std::vector{named("path:2"), named("path:3")}) == 5);
  CHECK(theta_power_vertex(named("path:2"), 2) == 4);
  CHECK(theta_power_vertex(named("path:2"), 2) == threshold_closed_form(family::Cycle{4}, Mode::Vertex));
  const std::vector ps{named("path:3"), named("star:3")};
  CHECK(theta_product_vertex(ps) == 10);
  CHECK(theta_product_vertex(ps) == theta_by_lemma(cartesian_product(ps)));
}

TEST_CASE("dispatch on ProductSpec") {
  CHECK(theta_prime_product(ProductSpec::distinct({named("path:2"), named("path:3")})) == 6);
  CHECK(theta_prime_product(ProductSpec::power(named("path:3"), 2)) == 8);
  CHECK(theta_product(ProductSpec::power(named("path:2"), 2)) == 4);
  ProductSpec mixed{{named("path:2"), named("path:3")}, {2, 1}};
  CHECK_THROWS_AS(theta_prime_product(mixed), OutOfTheoremRange);
}

TEST_CASE("overflow is reported") {
  CHECK_THROWS_AS(theta_prime_product_power(named("complete:4"), 40), ArithmeticOverflow);
  CHECK_THROWS_AS(theta_power_vertex(named("complete:4"), 40), ArithmeticOverflow);
}
