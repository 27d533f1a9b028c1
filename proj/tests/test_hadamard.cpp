#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drt/finite_field.hpp"
#include "drt/hadamard.hpp"
#include "drt/sdf.hpp"
#include "drt/snf.hpp"
#include "drt/tournament.hpp"

using namespace drt;

namespace {

Tournament paley(std::int64_t p, int t = 1) {
  auto F = FiniteField::make(p, t);
  return build_cayley_drt(F->additive_group(), squares(*F));
}

Tournament w_over_gf9() {
  AbelianGroup G({3, 3});
  SdfSearchOptions opts;
  opts.max_results = 1;
  auto fams = search_sdf(G, 4, opts);
  REQUIRE(!fams.empty());
  const auto& b = fams[0].blocks;
  return build_w(G, b[0], b[1], b[2], b[3]);
}

} // namespace

TEST_CASE("sign matrix text round trip") {
  SignMatrix h(2);
  h.at(0, 1) = -1;
  CHECK(h.to_text() == "+-\n++\n");
  CHECK(SignMatrix::from_text("+-\n++\n") == h);
  CHECK(SignMatrix::from_text("+-\n++") == h);

  CHECK_THROWS_AS(SignMatrix::from_text(""), std::invalid_argument);
  CHECK_THROWS_AS(SignMatrix::from_text("+-\n+\n"), std::invalid_argument);
  CHECK_THROWS_AS(SignMatrix::from_text("+x\n++\n"), std::invalid_argument);
  CHECK_THROWS_AS(SignMatrix(0), std::invalid_argument);
}

TEST_CASE("bordering a tournament gives a skew Hadamard matrix") {
  auto t = paley(7);
  auto h = drt_to_hadamard(t);
  CHECK(h.order() == 8);
  CHECK(is_hadamard(h));
  CHECK(is_skew(h));

  // The identities verified entry by entry over the integers.
  auto H = h.to_int_matrix();
  CHECK(H * H.transpose() == BigInt(8) * IntMatrix::identity(8));
  CHECK(H + H.transpose() == BigInt(2) * IntMatrix::identity(8));

  CHECK(drt_to_hadamard(build_sz(make_cyclic(3), {1}, {1})).order() == 8);
  CHECK(drt_to_hadamard(w_over_gf9()).order() == 40);

  // A non-doubly-regular tournament is rejected via the identity check.
  std::vector<std::vector<std::uint8_t>> adj(3, std::vector<std::uint8_t>(3, 0));
  adj[0][1] = adj[1][2] = adj[0][2] = 1; // transitive triangle
  Tournament bad({"0", "1", "2"}, adj, TournamentLayout{});
  CHECK_THROWS_AS(drt_to_hadamard(bad), std::runtime_error);
}

TEST_CASE("recovering the tournament from the bordered matrix") {
  auto t = paley(11);
  auto h = drt_to_hadamard(t);
  auto back = hadamard_to_drt(h);
  CHECK(back.size() == 11);
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j) CHECK(back.arc(i, j) == t.arc(i, j));
  CHECK(drt_to_hadamard(back) == h);

  auto d = hadamard_to_drt(drt_to_hadamard(build_sz(make_cyclic(3), {1}, {1})));
  REQUIRE(d.drt_params().has_value());
  CHECK(d.drt_params()->n == 7);
  CHECK(d.drt_params()->k == 3);
  CHECK(d.drt_params()->lambda == 1);

  auto broken = h;
  broken.at(0, 1) = -1;
  CHECK_THROWS_WITH_AS(hadamard_to_drt(broken), doctest::Contains("first row"),
                       std::invalid_argument);
  auto shifted = h;
  shifted.at(2, 0) = 1;
  CHECK_THROWS_WITH_AS(hadamard_to_drt(shifted), doctest::Contains("first column"),
                       std::invalid_argument);
  CHECK_THROWS_AS(hadamard_to_drt(SignMatrix(2)), std::invalid_argument);
}

TEST_CASE("normalization recovers the bordered form") {
  auto h = drt_to_hadamard(paley(7));
  // Diagonal sign conjugation preserves skewness; the bordered representative
  // in that class is unique, so normalization must return exactly h.
  std::vector<int> d = {1, -1, 1, -1, -1, 1, 1, -1};
  SignMatrix scrambled(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) scrambled.at(i, j) = d[i] * h.at(i, j) * d[j];
  CHECK(scrambled != h);
  CHECK(is_skew(scrambled));
  CHECK(normalize_skew_hadamard(scrambled) == h);
  CHECK(normalize_skew_hadamard(h) == h);

  CHECK_THROWS_AS(normalize_skew_hadamard(SignMatrix(3)), std::invalid_argument);
}

TEST_CASE("universal smith form of skew Hadamard matrices") {
  auto h8 = drt_to_hadamard(paley(7));
  CHECK(check_hadamard_snf(h8).ok);
  CHECK(check_hadamard_snf(h8).report.empty());
  // Cross-check against the dense Smith form at small orders.
  auto s = snf(h8.to_int_matrix());
  CHECK(s.invariant_factors == std::vector<BigInt>{1, 2, 2, 2, 4, 4, 4, 8});

  auto h12 = drt_to_hadamard(paley(11));
  CHECK(check_hadamard_snf(h12).ok);
  s = snf(h12.to_int_matrix());
  std::vector<BigInt> expected = {1};
  for (int i = 0; i < 5; ++i) expected.push_back(2);
  for (int i = 0; i < 5; ++i) expected.push_back(6);
  expected.push_back(12);
  CHECK(s.invariant_factors == expected);

  CHECK(check_hadamard_snf(drt_to_hadamard(w_over_gf9())).ok);

  auto bad = check_hadamard_snf(SignMatrix(8));
  CHECK(!bad.ok);
  CHECK(bad.report.find("nI fails") != std::string::npos);

  // Sylvester's order-4 matrix is Hadamard but not skew.
  auto sylvester = SignMatrix::from_text("++++\n+-+-\n++--\n+--+\n");
  CHECK(is_hadamard(sylvester));
  auto r = check_hadamard_snf(sylvester);
  CHECK(!r.ok);
  CHECK(r.report.find("2I fails") != std::string::npos);

  CHECK(!check_hadamard_snf(SignMatrix(5)).ok);
}
