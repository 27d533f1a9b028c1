#include "drt/sdf.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace drt {

SdfValidation validate_sdf(const AbelianGroup& G,
                           std::vector<std::vector<std::int64_t>> blocks) {
  SdfValidation result;
  const std::int64_t n = G.order();
  std::ostringstream why;

  if (n % 2 == 0) {
    why << "group order " << n << " is even; skew pairs {g, -g} need odd order";
    result.violation = why.str();
    return result;
  }
  if (blocks.empty()) {
    result.violation = "no blocks given";
    return result;
  }

  const std::int64_t s = (n - 1) / 2; // forced block size
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto& block = blocks[b];
    std::sort(block.begin(), block.end());
    for (std::int64_t x : block) {
      if (x < 0 || x >= n) {
        why << "block " << b << " contains out-of-range index " << x;
        result.violation = why.str();
        return result;
      }
    }
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      why << "block " << b << " contains a repeated element";
      result.violation = why.str();
      return result;
    }
    if (std::binary_search(block.begin(), block.end(), std::int64_t{0})) {
      why << "block " << b << " contains the identity";
      result.violation = why.str();
      return result;
    }
    if (static_cast<std::int64_t>(block.size()) != s) {
      why << "block " << b << " has size " << block.size() << ", but skewness forces ("
          << n << "-1)/2 = " << s;
      result.violation = why.str();
      return result;
    }
    // Exactly one of g, -g per pair <=> B and -B partition the nonzero
    // elements; with |B| = (n-1)/2 it is enough that B n -B = {}.
    for (std::int64_t x : block) {
      const std::int64_t nx = G.neg(x);
      if (std::binary_search(block.begin(), block.end(), nx)) {
        why << "block " << b << " contains both " << element_label(G, x) << " and its negative "
            << element_label(G, nx);
        result.violation = why.str();
        return result;
      }
    }
  }

  const std::int64_t l = static_cast<std::int64_t>(blocks.size());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (const auto& block : blocks)
    for (std::int64_t x : block)
      for (std::int64_t y : block)
        if (x != y) ++counts[static_cast<std::size_t>(G.sub(x, y))];

  if (l * s * (s - 1) % (n - 1) != 0) {
    why << "difference counts cannot be uniform: " << l << " blocks give " << l * s * (s - 1)
        << " differences over " << n - 1 << " nonzero elements";
    result.violation = why.str();
    return result;
  }
  const std::int64_t u = l * s * (s - 1) / (n - 1);
  for (std::int64_t g = 1; g < n; ++g) {
    if (counts[static_cast<std::size_t>(g)] != u) {
      why << "difference " << element_label(G, g) << " occurs "
          << counts[static_cast<std::size_t>(g)] << " times, expected " << u;
      result.violation = why.str();
      return result;
    }
  }

  result.ok = true;
  result.family = SkewDifferenceFamily{G, std::move(blocks), s, u};
  return result;
}

SkewDifferenceFamily validate_sdf_or_throw(const AbelianGroup& G,
                                           std::vector<std::vector<std::int64_t>> blocks) {
  auto v = validate_sdf(G, std::move(blocks));
  if (!v.ok) throw std::invalid_argument("not a skew difference family: " + v.violation);
  return *std::move(v.family);
}

SkewDifferenceFamily paley_set(const std::shared_ptr<const FiniteField>& F) {
  if (!F) throw std::invalid_argument("paley_set: null field");
  if (F->q() % 4 != 3)
    throw std::invalid_argument("paley_set: field size " + std::to_string(F->q()) +
                                " is not 3 (mod 4), so the squares are not skew");
  // Field codes coincide with additive-group element indices.
  return validate_sdf_or_throw(F->additive_group(), {squares(*F)});
}

SkewDifferenceFamily ding_yuan_set(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("ding_yuan_set: exponent must be odd and positive, got " +
                                std::to_string(n));
  auto F = ModulusTable::builtin().make_field(3, n);
  std::set<std::int64_t> image;
  for (std::int64_t x = 1; x < F->q(); ++x) {
    const std::int64_t x2 = F->mul(x, x);
    const std::int64_t x4 = F->mul(x2, x2);
    const std::int64_t x6 = F->mul(x4, x2);
    const std::int64_t x10 = F->mul(x6, x4);
    image.insert(F->sub(F->sub(x10, x6), x2));
  }
  return validate_sdf_or_throw(F->additive_group(),
                               {std::vector<std::int64_t>(image.begin(), image.end())});
}

namespace {

struct SearchState {
  const AbelianGroup& G;
  std::vector<std::int64_t> reps; // one representative per {g, -g} pair
  std::int64_t target_count = 0;  // uniform count u once all blocks are in
  int num_blocks = 0;
  std::int64_t max_results = 0;
  std::vector<std::int64_t> counts;
  std::vector<std::vector<std::int64_t>> chosen;
  std::vector<SkewDifferenceFamily> found;
  bool done = false;

  void recurse(int depth) {
    if (done) return;
    if (depth == num_blocks) {
      for (std::int64_t g = 1; g < G.order(); ++g)
        if (counts[static_cast<std::size_t>(g)] != target_count) return;
      auto v = validate_sdf(G, chosen);
      if (v.ok) {
        found.push_back(*std::move(v.family));
        if (max_results > 0 && static_cast<std::int64_t>(found.size()) >= max_results)
          done = true;
      }
      return;
    }
    const std::size_t m = reps.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<std::int64_t> block(m);
      for (std::size_t i = 0; i < m; ++i)
        block[i] = (mask >> i & 1) ? G.neg(reps[i]) : reps[i];
      std::vector<std::int64_t> added;
      added.reserve(m * (m - 1));
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i)
        for (std::size_t j = 0; j < m && ok; ++j) {
          if (i == j) continue;
          const std::int64_t d = G.sub(block[i], block[j]);
          if (++counts[static_cast<std::size_t>(d)] > target_count) ok = false;
          added.push_back(d);
        }
      if (ok) {
        chosen.push_back(block);
        recurse(depth + 1);
        chosen.pop_back();
        if (done) return;
      }
      for (std::int64_t d : added) --counts[static_cast<std::size_t>(d)];
    }
  }
};

} // namespace

std::vector<SkewDifferenceFamily> search_sdf(const AbelianGroup& G, int num_blocks,
                                             const SdfSearchOptions& opts) {
  const std::int64_t n = G.order();
  if (n % 2 == 0) throw std::invalid_argument("search_sdf: group order must be odd");
  if (num_blocks < 1) throw std::invalid_argument("search_sdf: need at least one block");

  const std::int64_t m = (n - 1) / 2; // pairs
  // Worst case: every block independently picks one of 2^m sign patterns.
  const std::int64_t bits = m * num_blocks;
  if (bits >= 63 || (std::int64_t{1} << bits) > opts.candidate_budget) {
    std::ostringstream why;
    why << "search_sdf: worst case 2^" << bits << " candidates exceeds budget "
        << opts.candidate_budget;
    throw std::invalid_argument(why.str());
  }

  const std::int64_t s = m;
  if (static_cast<std::int64_t>(num_blocks) * s * (s - 1) % (n - 1) != 0) return {};

  SearchState st{G,
                 {},
                 num_blocks * s * (s - 1) / (n - 1),
                 num_blocks,
                 opts.max_results,
                 std::vector<std::int64_t>(static_cast<std::size_t>(n), 0),
                 {},
                 {},
                 false};
  for (std::int64_t g = 1; g < n; ++g)
    if (g < G.neg(g)) st.reps.push_back(g);

  st.recurse(0);
  std::sort(st.found.begin(), st.found.end(),
            [](const SkewDifferenceFamily& a, const SkewDifferenceFamily& b) {
              return a.blocks < b.blocks;
            });
  return st.found;
}

std::string to_json_string(const SkewDifferenceFamily& f) {
  nlohmann::ordered_json j;
  j["group"] = f.group.invariant_factors();
  j["blocks"] = f.blocks;
  j["block_size"] = f.block_size;
  j["uniform_difference_count"] = f.uniform_difference_count;
  return j.dump(2);
}

SkewDifferenceFamily sdf_from_json_string(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  AbelianGroup G(j.at("group").get<std::vector<std::int64_t>>());
  auto fam = validate_sdf_or_throw(
      G, j.at("blocks").get<std::vector<std::vector<std::int64_t>>>());
  if (j.contains("block_size") && j["block_size"].get<std::int64_t>() != fam.block_size)
    throw std::invalid_argument("stored block_size disagrees with the blocks");
  if (j.contains("uniform_difference_count") &&
      j["uniform_difference_count"].get<std::int64_t>() != fam.uniform_difference_count)
    throw std::invalid_argument("stored uniform_difference_count disagrees with the blocks");
  return fam;
}

} // namespace drt
