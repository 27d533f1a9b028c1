#pragma once

#include "drt/abelian_group.hpp"
#include "drt/finite_field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace drt {

// Family of blocks B_1..B_l in an abelian group of odd order n where each
// block satisfies B n -B = {} and B u -B = G \ {0}, and the multiset of
// within-block differences covers every nonzero element equally often.
// Block size is forced to (n-1)/2.
struct SkewDifferenceFamily {
  AbelianGroup group;
  std::vector<std::vector<std::int64_t>> blocks; // sorted element indices
  std::int64_t block_size = 0;
  std::int64_t uniform_difference_count = 0;

  bool operator==(const SkewDifferenceFamily&) const = default;
};

struct SdfValidation {
  bool ok = false;
  std::string violation; // first violated condition, with a witness
  std::optional<SkewDifferenceFamily> family;
};

SdfValidation validate_sdf(const AbelianGroup& G,
                           std::vector<std::vector<std::int64_t>> blocks);
SkewDifferenceFamily validate_sdf_or_throw(const AbelianGroup& G,
                                           std::vector<std::vector<std::int64_t>> blocks);

// Single block of nonzero squares of GF(q), q = 3 (mod 4).
SkewDifferenceFamily paley_set(const std::shared_ptr<const FiniteField>& F);

// Single block {x^10 - x^6 - x^2 : x in GF(3^n)^x}, n odd.
SkewDifferenceFamily ding_yuan_set(int n);

struct SdfSearchOptions {
  // Upper bound on the worst-case candidate count
  // (2^((|G|-1)/2))^num_blocks; the search refuses to start beyond it.
  std::int64_t candidate_budget = std::int64_t{1} << 24;
  // Stop after this many families found (0 = all).
  std::int64_t max_results = 0;
};

// Deterministic enumeration: one representative is chosen per {g, -g} pair
// (the smaller index).  Candidate blocks flip subsets of representatives to
// their negatives, counting in binary with pair order fixed; blocks nest
// left to right.  Results come out sorted by their block index lists.
std::vector<SkewDifferenceFamily> search_sdf(const AbelianGroup& G, int num_blocks,
                                             const SdfSearchOptions& opts = {});

std::string to_json_string(const SkewDifferenceFamily& f);
SkewDifferenceFamily sdf_from_json_string(const std::string& text);

} // namespace drt
