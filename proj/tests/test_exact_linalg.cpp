#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drt/critical_group.hpp"
#include "drt/finite_field.hpp"
#include "drt/group_structure.hpp"
#include "drt/snf.hpp"
#include "drt/tournament.hpp"

#include <random>

using namespace drt;

namespace {

IntMatrix diag(std::vector<std::int64_t> d) {
  std::vector<BigInt> v(d.begin(), d.end());
  return IntMatrix::diagonal(v);
}

IntMatrix complete_graph_laplacian(std::size_t n) {
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.at(i, j) = (i == j) ? BigInt(n - 1) : BigInt(-1);
  return q;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

IntMatrix paley7_laplacian() {
  auto F = FiniteField::make(7, 1);
  return build_cayley_drt(F->additive_group(), squares(*F)).laplacian();
}

std::vector<BigInt> factors(std::vector<std::int64_t> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

} // namespace

TEST_CASE("smith form of small fixed matrices") {
  auto s = snf(diag({2, 3}));
  CHECK(s.invariant_factors == factors({1, 6}));
  CHECK(s.free_rank == 0);
  CHECK(s.unit_count == 1);

  s = snf(diag({2, 4}));
  CHECK(s.invariant_factors == factors({2, 4}));

  s = snf(IntMatrix(3, 3));
  CHECK(s.invariant_factors.empty());
  CHECK(s.free_rank == 3);

  // Complete graph on 4 vertices: 16 spanning trees.
  s = snf(complete_graph_laplacian(4));
  CHECK(s.invariant_factors == factors({1, 4, 4}));
  CHECK(s.free_rank == 1);

  // Negative entries and a rectangular shape.
  IntMatrix m(2, 3);
  m.at(0, 0) = -4;
  m.at(0, 1) = 6;
  m.at(1, 2) = 3;
  s = snf(m);
  CHECK(s.invariant_factors == factors({1, 6}));
  CHECK(s.free_rank == 0);
}

TEST_CASE("determinant") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  CHECK(determinant(m) == -2);
  CHECK(determinant(diag({2, 3})) == 6);
  CHECK(determinant(complete_graph_laplacian(4)) == 0);
  CHECK(determinant(IntMatrix::identity(5)) == 1);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(rng, 4, -9, 9);
    auto b = random_matrix(rng, 4, -9, 9);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("minor-gcd oracle") {
  auto s = snf_minor_gcd(diag({2, 4}));
  CHECK(s.invariant_factors == factors({2, 4}));

  auto ones = IntMatrix::all_ones(3, 3);
  s = snf_minor_gcd(ones);
  CHECK(s.invariant_factors == factors({1}));
  CHECK(s.free_rank == 2);

  CHECK_THROWS_AS(snf_minor_gcd(IntMatrix(9, 9)), std::invalid_argument);

  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(rng, 4, -9, 9);
    CHECK(snf_minor_gcd(m) == snf(m));
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(rng, 6, -9, 9);
    CHECK(snf_minor_gcd(m) == snf(m));
  }
  // Singular inputs keep the two paths honest about free rank.
  for (int trial = 0; trial < 25; ++trial) {
    auto m = random_matrix(rng, 4, -2, 2);
    for (std::size_t j = 0; j < 4; ++j) m.at(3, j) = m.at(0, j) + m.at(1, j);
    CHECK(snf_minor_gcd(m) == snf(m));
  }
}

TEST_CASE("local valuations agree with full smith form") {
  auto Q = paley7_laplacian();

  auto l7 = local_snf(Q, 7);
  CHECK(l7.valuations == std::vector<int>{0, 0, 0, 0, 1, 1, l7.modulus_exponent});
  CHECK(l7.capped == 1);

  auto l2 = local_snf(Q, 2);
  CHECK(l2.valuations == std::vector<int>{0, 0, 0, 1, 1, 1, l2.modulus_exponent});
  CHECK(l2.capped == 1);

  auto li = local_snf(IntMatrix::identity(6), 5);
  CHECK(li.valuations == std::vector<int>(6, 0));
  CHECK(li.capped == 0);

  // An explicit cap: true factor 8 is invisible mod 4.
  auto cap = local_snf(diag({8, 2}), 2, 2);
  CHECK(cap.modulus_exponent == 2);
  CHECK(cap.valuations == std::vector<int>{1, 2});
  CHECK(cap.capped == 1);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_matrix(rng, 5, -6, 6);
    auto s = snf(m);
    for (std::int64_t p : {2, 3, 7}) {
      auto loc = local_snf(m, p);
      std::vector<int> expected;
      for (const auto& f : s.invariant_factors) expected.push_back(valuation(f, p));
      std::sort(expected.begin(), expected.end());
      for (std::size_t i = 0; i < s.free_rank; ++i) expected.push_back(loc.modulus_exponent);
      CHECK(loc.valuations == expected);
      CHECK(loc.capped == s.free_rank);
    }
  }
}

TEST_CASE("rank over prime fields") {
  auto Q = paley7_laplacian();
  CHECK(p_rank(Q, 7) == 4);
  CHECK(p_rank(Q, 2) == 3);
  CHECK(p_rank(Q, 5) == 6); // 5 divides neither 2 nor 7 parts
  CHECK(p_rank(IntMatrix::identity(9), 3) == 9);
  CHECK(p_rank(IntMatrix(4, 4), 2) == 0);

  auto sz5 = build_sz(make_cyclic(5), {1, 2}, {1, 3});
  auto Q5 = sz5.laplacian();
  CHECK(p_rank(Q5, 3) == 5);  // 2*lambda+1 at a prime dividing lambda+1
  CHECK(p_rank(Q5, 11) == 6); // 2*lambda+2 at a prime dividing 4*lambda+3
}

TEST_CASE("invariant factor divisibility under products") {
  CHECK(divisibility_product_check(IntMatrix::identity(3), IntMatrix::identity(3)));
  CHECK(divisibility_product_check(diag({2, 1}), diag({1, 3})));
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_matrix(rng, 4, -5, 5);
    auto b = random_matrix(rng, 4, -5, 5);
    CHECK(divisibility_product_check(a, b));
  }
}

TEST_CASE("group structure bookkeeping") {
  auto g = GroupStructure::from_invariant_factors(factors({2, 14, 14}));
  CHECK(g.order() == 392);
  CHECK(g.elementary_divisors() ==
        std::map<BigInt, std::vector<int>>{{2, {1, 1, 1}}, {7, {1, 1}}});
  CHECK(g.invariant_factors() == factors({2, 14, 14}));
  CHECK(g.rank_at(2) == 3);
  CHECK(g.rank_at(7) == 2);
  CHECK(g.rank_at(3) == 0);
  CHECK(g.describe() == "(Z/2)^3 x (Z/7)^2");

  // Units vanish; mixed exponents interleave into a divisor chain.
  CHECK(GroupStructure::from_invariant_factors(factors({1, 1, 6})).invariant_factors() ==
        factors({6}));
  auto mixed = GroupStructure::from_elementary({{2, {1, 3}}, {3, {2}}});
  CHECK(mixed.invariant_factors() == factors({2, 72}));
  CHECK(mixed.describe() == "Z/2 x Z/8 x Z/9");

  auto big = GroupStructure::cyclic_power(10, 19).direct_sum(GroupStructure::cyclic_power(39, 18));
  CHECK(big.order() == ipow(BigInt(10), 19) * ipow(BigInt(39), 18));
  CHECK(big.rank_at(2) == 19);
  CHECK(big.rank_at(3) == 18);
  CHECK(big.rank_at(13) == 18);

  const std::string js = g.to_json();
  CHECK(js.find("\"order\": \"392\"") != std::string::npos);
  CHECK(js.find("\"elementary_divisors\"") != std::string::npos);
  CHECK(GroupStructure::from_json(js) == g);

  CHECK(GroupStructure().describe() == "trivial");
  CHECK(GroupStructure().order() == 1);

  auto other = GroupStructure::from_invariant_factors(factors({2, 98}));
  auto d = structure_diff(g, other);
  CHECK(d.find("p=2") != std::string::npos);
  CHECK(d.find("p=7") != std::string::npos);
  CHECK(structure_diff(g, g).empty());
}

TEST_CASE("critical group extraction, full and per-prime routes") {
  auto Q = paley7_laplacian();
  auto g = critical_group(Q);
  CHECK(g.describe() == "(Z/2)^3 x (Z/7)^2");
  CHECK(g.invariant_factors() == factors({2, 14, 14}));

  // The full Smith form behind it, as a regression anchor.
  auto s = snf(Q);
  CHECK(s.invariant_factors == factors({1, 1, 1, 2, 14, 14}));
  CHECK(s.free_rank == 1);

  CriticalGroupOptions hinted;
  hinted.prime_hints = {2, 7};
  hinted.torsion_order = 392;
  CHECK(critical_group(Q, hinted) == g);

  CHECK(critical_group(complete_graph_laplacian(4)).describe() == "(Z/4)^2");

  auto sz = build_sz(make_cyclic(3), {1}, {1});
  CHECK(drt_critical_group(sz) == g);
  CHECK(drt_torsion_order(1) == 392);
  CHECK(drt_torsion_order(4) == ipow(BigInt(19), 8) * ipow(BigInt(5), 9));
}

TEST_CASE("critical group rejects malformed input") {
  CHECK_THROWS_WITH_AS(critical_group(IntMatrix::identity(3)), doctest::Contains("sum to zero"),
                       std::invalid_argument);

  // Two disjoint edges: free rank 2.
  IntMatrix disconnected(4, 4);
  disconnected.at(0, 0) = disconnected.at(1, 1) = 1;
  disconnected.at(0, 1) = disconnected.at(1, 0) = -1;
  disconnected.at(2, 2) = disconnected.at(3, 3) = 1;
  disconnected.at(2, 3) = disconnected.at(3, 2) = -1;
  CHECK_THROWS_WITH_AS(critical_group(disconnected), doctest::Contains("free rank"),
                       std::invalid_argument);

  auto Q = paley7_laplacian();
  CriticalGroupOptions bad_order;
  bad_order.torsion_order = 100;
  CHECK_THROWS_AS(critical_group(Q, bad_order), std::runtime_error);

  CriticalGroupOptions bad_hints;
  bad_hints.prime_hints = {3};
  CHECK_THROWS_WITH_AS(critical_group(Q, bad_hints), doctest::Contains("below n-1"),
                       std::invalid_argument);

  CriticalGroupOptions no_hints;
  no_hints.full_snf_limit = 4;
  CHECK_THROWS_WITH_AS(critical_group(Q, no_hints), doctest::Contains("too large"),
                       std::invalid_argument);
}
