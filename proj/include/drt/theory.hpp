#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "drt/character.hpp"
#include "drt/cyclotomic.hpp"
#include "drt/finite_field.hpp"
#include "drt/group_structure.hpp"
#include "drt/tournament.hpp"

namespace drt {

// Closed-form description of a critical group, with predicted p-ranks of the
// Laplacian at every prime dividing the torsion order.
struct Prediction {
  std::string family; // "sz", "w", or "paley"
  std::int64_t lambda = 0;
  std::int64_t p = 0; // paley only
  int t = 0;          // paley only
  GroupStructure structure;
  std::map<BigInt, std::size_t> p_ranks;
};

// The part of the critical group every doubly-regular tournament with
// parameter lambda shares: (Z/(lambda+1))^(2 lambda+1).  The complementary
// subgroup has order (4 lambda+3)^(2 lambda) but no universal structure.
GroupStructure predict_k1(std::int64_t lambda);
BigInt predict_k1_complement_order(std::int64_t lambda);

Prediction predict_sz(std::int64_t lambda);
Prediction predict_w(std::int64_t lambda);
Prediction predict_paley(std::int64_t p, int t);

// Number of carries when adding the base-p expansions of i and k = (q-1)/2
// modulo q-1, for q = p^t.  Defined for 1 <= i <= q-2, i != k.
int carry_count(std::int64_t i, std::int64_t p, int t);

struct CarryProfile {
  std::int64_t p = 0;
  int t = 0;
  std::map<int, std::int64_t> counts; // a -> e_a = |{i : carry_count(i) = a}|
};

// Exact counts by enumeration over 1 <= i <= q-2, i != k.
CarryProfile counting_profile(std::int64_t p, int t);

// Closed form for the interior counts e_i, 1 <= i <= t-1; must agree with
// counting_profile.  The endpoints are e_0 = e_t = ((p+1)/2)^t - 2.
std::int64_t e_formula(std::int64_t p, int t, int i);

// Exact Jacobi sum J(T^a, T^b) = sum over x in F of T^a(x) T^b(1-x), where T
// is the field's generator character (see Character for the conventions at
// 0; the exponents a and b are taken literally, not mod q-1).
CyclotomicInt jacobi_sum(std::int64_t a, std::int64_t b,
                         std::shared_ptr<const FiniteField> F);

struct StickelbergerCheck {
  bool ok = false;
  std::vector<int> carry_multiset;     // {c(i)} with two zeros adjoined, sorted
  std::vector<int> valuation_multiset; // torsion p-valuations of the Laplacian
  std::string report;                  // empty when ok
  explicit operator bool() const { return ok; }
};

// The carry counts and the local Smith form of the quadratic-residue
// tournament's Laplacian must describe the same p-module.
StickelbergerCheck verify_stickelberger(std::shared_ptr<const FiniteField> F);

struct CheckItem {
  std::string name;
  double residual = 0.0; // |computed - target| / max(1, |target|)
};

struct CharacterBlockCheck {
  bool ok = false;
  std::string kind; // "sz" or "w"
  std::int64_t lambda = 0;
  double tolerance = 0.0;
  std::vector<CheckItem> items;
  std::string report; // failing items, empty when ok
  explicit operator bool() const { return ok; }
};

// Project the Laplacian onto the character basis vectors of a group-built
// tournament (2x2 block for sz layouts, 8x8 for w layouts) and verify the
// block identities numerically.
CharacterBlockCheck character_block_check(const Tournament& t, std::int64_t chi_index,
                                          double tolerance = 1e-9);

} // namespace drt
