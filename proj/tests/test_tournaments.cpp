#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drt/finite_field.hpp"
#include "drt/tournament.hpp"

using namespace drt;

namespace {

Tournament paley(std::int64_t p, int t) {
  auto F = FiniteField::make(p, t);
  return build_cayley_drt(F->additive_group(), squares(*F));
}

} // namespace

TEST_CASE("construction enforces tournament shape") {
  using Adj = std::vector<std::vector<std::uint8_t>>;
  CHECK_THROWS_WITH_AS(Tournament({"x"}, Adj{{1}}), doctest::Contains("self-arc"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Tournament({"x", "y"}, Adj{{0, 1}, {1, 0}}),
                       doctest::Contains("expected exactly one"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Tournament({"x", "y"}, Adj{{0, 0}, {0, 0}}),
                       doctest::Contains("expected exactly one"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament({"x", "y"}, Adj{{0, 1}}), std::invalid_argument);
  CHECK_NOTHROW(Tournament({"x", "y"}, Adj{{0, 1}, {0, 0}}));
}

TEST_CASE("cayley tournament on the squares of GF(7)") {
  auto t = paley(7, 1);
  REQUIRE(t.drt_params().has_value());
  CHECK(*t.drt_params() == DrtParams{7, 3, 1});
  CHECK(t.layout().kind == "cayley");
  CHECK(t.vertex_labels()[3] == "3");
  // arc g -> h iff h - g is a square; squares mod 7 are {1,2,4}.
  CHECK(t.arc(0, 1));
  CHECK(t.arc(0, 2));
  CHECK(t.arc(0, 4));
  CHECK_FALSE(t.arc(0, 3));
  CHECK(t.arc(3, 0)); // 0 - 3 = 4
  CHECK(t.out_degree(5) == 3);
  CHECK(t.common_out_neighbours(1, 2) == 1);

  CHECK_THROWS_WITH_AS(build_cayley_drt(make_cyclic(5), {1, 4}),
                       doctest::Contains("negative"), std::invalid_argument);
}

TEST_CASE("two-class construction over Z/3, hand-checked arcs") {
  auto t = build_sz(make_cyclic(3), {1}, {1});
  REQUIRE(t.drt_params().has_value());
  CHECK(*t.drt_params() == DrtParams{7, 3, 1});
  CHECK(t.layout().kind == "sz");
  CHECK(t.vertex_labels() ==
        std::vector<std::string>{"v0", "a0", "a1", "a2", "b0", "b1", "b2"});
  // v0 beats every a-vertex.
  CHECK(t.arc(0, 1));
  CHECK(t.arc(0, 2));
  CHECK(t.arc(0, 3));
  // a_g beats a_{g+1}, b_g, b_{g+1}.
  CHECK(t.arc(1, 2)); // a0 -> a1
  CHECK(t.arc(1, 4)); // a0 -> b0
  CHECK(t.arc(1, 5)); // a0 -> b1
  // b_g beats v0, b_{g+2}, a_{g+1}.
  CHECK(t.arc(4, 0)); // b0 -> v0
  CHECK(t.arc(4, 6)); // b0 -> b2
  CHECK(t.arc(4, 2)); // b0 -> a1
  CHECK(t.common_out_neighbours(0, 1) == 1);
}

TEST_CASE("two-class construction at larger sizes") {
  auto t5 = build_sz(make_cyclic(5), {1, 2}, {1, 3});
  REQUIRE(t5.drt_params().has_value());
  CHECK(*t5.drt_params() == DrtParams{11, 5, 2});

  // Same group arrived at through the field view.
  auto f5 = FiniteField::make(5, 1);
  auto t5f = build_sz(f5->additive_group(), {1, 2}, {1, 3});
  CHECK(t5f.adjacency_matrix() == t5.adjacency_matrix());

  auto fams = search_sdf(make_cyclic(13), 2, {1 << 24, 1});
  REQUIRE_FALSE(fams.empty());
  auto t13 = build_sz(fams[0].group, fams[0].blocks[0], fams[0].blocks[1]);
  REQUIRE(t13.drt_params().has_value());
  CHECK(*t13.drt_params() == DrtParams{27, 13, 6});

  CHECK_THROWS_AS(build_sz(make_cyclic(5), {1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("four-class construction over the elementary abelian group of order 9") {
  auto fams = search_sdf(AbelianGroup({3, 3}), 4, {1 << 24, 1});
  REQUIRE_FALSE(fams.empty());
  const auto& f = fams[0];
  auto t = build_w(f.group, f.blocks[0], f.blocks[1], f.blocks[2], f.blocks[3]);
  REQUIRE(t.drt_params().has_value());
  CHECK(*t.drt_params() == DrtParams{39, 19, 9});
  CHECK(t.layout().kind == "w");
  CHECK(t.vertex_labels()[0] == "v1");
  CHECK(t.vertex_labels()[3] == "a(0,0)");
  CHECK(t.out_degree(0) == 19); // v1: all a's, all c's, and v2
  CHECK(t.arc(0, 1));           // v1 -> v2
  CHECK(t.arc(1, 2));           // v2 -> v3
  CHECK(t.arc(2, 0));           // v3 -> v1
  auto rep = check_drt_identities(t);
  INFO(rep.failure);
  CHECK(rep.ok);
}

TEST_CASE("matrix identities hold for built tournaments") {
  for (auto [p, t] : {std::pair{7, 1}, {11, 1}, {19, 1}, {3, 3}}) {
    auto g = paley(p, t);
    auto rep = check_drt_identities(g);
    INFO("q = ", p, "^", t, ": ", rep.failure);
    CHECK(rep.ok);
    CHECK(rep.checked.size() == 6);
  }
  auto sz = build_sz(make_cyclic(3), {1}, {2});
  REQUIRE(sz.drt_params().has_value());
  CHECK(check_drt_identities(sz).ok);
}

TEST_CASE("laplacian basics for the order-7 cayley tournament") {
  auto t = paley(7, 1);
  auto Q = t.laplacian();
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(Q.at(i, i) == 3);
    BigInt row = 0;
    for (std::size_t j = 0; j < 7; ++j) row += Q.at(i, j);
    CHECK(row == 0);
  }
  auto lhs = Q + Q.transpose();
  auto rhs = BigInt(7) * IntMatrix::identity(7) - IntMatrix::all_ones(7, 7);
  CHECK(lhs == rhs);
}

TEST_CASE("flipping one arc breaks double regularity") {
  auto t = paley(7, 1);
  auto adj = std::vector<std::vector<std::uint8_t>>(7, std::vector<std::uint8_t>(7, 0));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) adj[i][j] = t.arc(i, j) ? 1 : 0;
  std::swap(adj[0][1], adj[1][0]);
  Tournament flipped(t.vertex_labels(), adj);
  auto check = validate_drt(flipped);
  CHECK_FALSE(check.ok);
  CHECK(flipped.drt_params() == std::nullopt);
  CHECK(check.violation.find("out-degree") != std::string::npos);
  // Against the claimed (7,3,1) parameters, the first broken matrix
  // identity is the M M^T one.
  auto rep = check_drt_identities(flipped, DrtParams{7, 3, 1});
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure.find("M M^T") != std::string::npos);
}

TEST_CASE("large cayley instances validate") {
  auto f27 = FiniteField::make(3, 3);
  auto p27 = build_cayley_drt(f27->additive_group(), squares(*f27));
  CHECK(*p27.drt_params() == DrtParams{27, 13, 6});

  auto dy = ding_yuan_set(5);
  auto t = build_cayley_drt(dy.group, dy.blocks[0]);
  CHECK(*t.drt_params() == DrtParams{243, 121, 60});
}

TEST_CASE("json round trip") {
  auto t = paley(7, 1);
  auto back = tournament_from_json_string(to_json_string(t));
  CHECK(back == t);

  // A tournament that is not doubly regular survives the trip with no
  // parameter stamp.
  std::vector<std::vector<std::uint8_t>> adj(5, std::vector<std::uint8_t>(5, 0));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t d : {1, 2}) adj[i][(i + d) % 5] = 1;
  Tournament plain({"p", "q", "r", "s", "t"}, adj);
  auto plain_back = tournament_from_json_string(to_json_string(plain));
  CHECK(plain_back == plain);
  CHECK(plain_back.drt_params() == std::nullopt);

  CHECK_THROWS_AS(tournament_from_json_string(R"({"labels":["x","y"],"arcs":[[0,5]]})"),
                  std::invalid_argument);
}
