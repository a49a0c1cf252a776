#include "dthresh/cartesian.hpp"

#include <algorithm>
#include <string>

#include "dthresh/errors.hpp"
#include "dthresh/thresholds.hpp"

namespace dthresh {
namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("64-bit overflow in product formula");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("64-bit overflow in product formula");
  return r;
}

std::int64_t power(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r = mul(r, base);
  return r;
}

void require_connected(std::span<const Graph> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_connected(factors[i])) {
      throw DisconnectedFactor("factor " + std::to_string(i) + " is empty or disconnected");
    }
  }
}

void require_distinct(std::span<const Graph> factors) {
  if (factors.size() < 2) {
    throw ParameterOutOfRange("product needs at least 2 factors, got " +
                              std::to_string(factors.size()));
  }
  require_connected(factors);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (are_isomorphic(factors[i], factors[j])) {
        throw IsomorphicFactors("factors " + std::to_string(i) + " and " + std::to_string(j) +
                                " are isomorphic; use the power form");
      }
    }
  }
}

void require_power(const Graph& base, int k) {
  if (k < 2) throw ParameterOutOfRange("power exponent must be >= 2, got " + std::to_string(k));
  if (!is_connected(base)) throw DisconnectedFactor("power base is empty or disconnected");
  if (base.order() < 2) throw PreconditionViolated("power base must have at least 2 vertices");
}

// |V| and |E| of the product of all factors except `skip`.
std::pair<std::int64_t, std::int64_t> quotient_counts(std::span<const Graph> factors,
                                                      std::size_t skip) {
  std::int64_t vertices = 1;
  std::int64_t edges = 0;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j == skip) continue;
    // E(A □ B) = |A|·|E(B)| + |E(A)|·|B|
    edges = add(mul(edges, factors[j].order()), mul(vertices, factors[j].size()));
    vertices = mul(vertices, factors[j].order());
  }
  return {vertices, edges};
}

// Max q(β) over non-identity β of `g`, or nullopt if g is asymmetric.
std::optional<std::int64_t> max_q(const Graph& g, std::int64_t qv, std::int64_t qe,
                                  std::size_t cap) {
  std::optional<std::int64_t> best;
  const auto group = enumerate_automorphisms(g, cap);
  for (const auto& beta : group.elements()) {
    if (beta.is_identity()) continue;
    const auto q = q_value(cycle_stats(g, beta), qv, qe);
    if (!best || q > *best) best = q;
  }
  return best;
}

}  // namespace

ProductSpec ProductSpec::distinct(std::vector<Graph> factors) {
  ProductSpec s;
  s.multiplicities.assign(factors.size(), 1);
  s.factors = std::move(factors);
  return s;
}

ProductSpec ProductSpec::power(Graph base, int exponent) {
  if (exponent < 2) throw ParameterOutOfRange("power exponent must be >= 2");
  ProductSpec s;
  s.factors.push_back(std::move(base));
  s.multiplicities.push_back(exponent);
  return s;
}

std::vector<Graph> ProductSpec::expanded() const {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (int j = 0; j < multiplicities[i]; ++j) out.push_back(factors[i]);
  }
  return out;
}

std::int64_t q_value(const CycleStats& beta, std::int64_t quotient_vertices,
                     std::int64_t quotient_edges) {
  if (quotient_vertices < 0 || quotient_edges < 0) {
    throw ParameterOutOfRange("quotient counts must be nonnegative");
  }
  return add(mul(beta.edge_cycles, quotient_vertices), mul(beta.vertex_cycles, quotient_edges));
}

std::int64_t theta_prime_product_distinct(std::span<const Graph> factors, std::size_t cap) {
  require_distinct(factors);
  std::optional<std::int64_t> best;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto [qv, qe] = quotient_counts(factors, i);
    const auto q = max_q(factors[i], qv, qe, cap);
    if (q && (!best || *q > *best)) best = q;
  }
  // Only asymmetric factors: the product is asymmetric.
  return best ? add(*best, 1) : 1;
}

std::int64_t theta_prime_product_power(const Graph& base, int k, TranspositionTerm term,
                                       std::size_t cap) {
  require_power(base, k);
  const std::int64_t n = base.order();
  const std::int64_t m = base.size();
  const std::int64_t product_edges = mul(mul(k, power(n, k - 1)), m);
  std::int64_t transposition = 0;
  switch (term) {
    case TranspositionTerm::HalfEdgeCount:
      transposition = product_edges / 2 + product_edges % 2;
      break;
    case TranspositionTerm::TranspositionCycles:
      transposition = add(product_edges, mul(mul(k - 2, power(n, k - 2)), m)) / 2;
      break;
  }
  const std::int64_t qv = power(n, k - 1);
  const std::int64_t qe = mul(mul(k - 1, power(n, k - 2)), m);
  const auto r = max_q(base, qv, qe, cap);
  return add(std::max(transposition, r.value_or(0)), 1);
}

std::int64_t theta_product_vertex(std::span<const Graph> factors, std::size_t cap) {
  require_distinct(factors);
  std::int64_t total = 1;
  for (const auto& f : factors) total = mul(total, f.order());
  std::int64_t best = 0;
  for (const auto& f : factors) {
    const int theta = theta_by_lemma(f, enumerate_automorphisms(f, cap));
    best = std::max(best, mul(theta - 1, total / f.order()));
  }
  return add(best, 1);
}

std::int64_t theta_power_vertex(const Graph& base, int k, std::size_t cap) {
  require_power(base, k);
  const std::int64_t n = base.order();
  const std::int64_t layer = power(n, k - 1);
  const int theta = theta_by_lemma(base, enumerate_automorphisms(base, cap));
  // layer·(n+1) is even: n odd makes n+1 even, n even makes layer even.
  const std::int64_t transposition = mul(layer, n + 1) / 2;
  return add(std::max(transposition, mul(layer, theta - 1)), 1);
}

std::int64_t theta_prime_product(const ProductSpec& spec, TranspositionTerm term) {
  if (spec.is_power()) return theta_prime_product_power(spec.factors[0], spec.multiplicities[0], term);
  if (std::any_of(spec.multiplicities.begin(), spec.multiplicities.end(),
                  [](int m) { return m != 1; })) {
    throw OutOfTheoremRange("mixed products of powers are not covered");
  }
  return theta_prime_product_distinct(spec.factors);
}

std::int64_t theta_product(const ProductSpec& spec) {
  if (spec.is_power()) return theta_power_vertex(spec.factors[0], spec.multiplicities[0]);
  if (std::any_of(spec.multiplicities.begin(), spec.multiplicities.end(),
                  [](int m) { return m != 1; })) {
    throw OutOfTheoremRange("mixed products of powers are not covered");
  }
  return theta_product_vertex(spec.factors);
}

}  // namespace dthresh
