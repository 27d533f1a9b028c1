// End-to-end acceptance checks.  Each numbered criterion prints exactly one
// PASS/FAIL line; the exit status is the number of failures.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drt/abelian_group.hpp"
#include "drt/critical_group.hpp"
#include "drt/cyclotomic.hpp"
#include "drt/finite_field.hpp"
#include "drt/group_structure.hpp"
#include "drt/hadamard.hpp"
#include "drt/int_matrix.hpp"
#include "drt/sdf.hpp"
#include "drt/snf.hpp"
#include "drt/theory.hpp"
#include "drt/tournament.hpp"

using namespace drt;

namespace {

std::shared_ptr<const FiniteField> field(std::int64_t p, int t) {
  return ModulusTable::builtin().make_field(p, t);
}

const Tournament& paley(std::int64_t q) {
  static std::map<std::int64_t, Tournament> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    const auto f = factorize(q);
    const auto F = field(f.begin()->first.convert_to<std::int64_t>(), f.begin()->second);
    it = cache.emplace(q, build_cayley_drt(F->additive_group(), squares(*F))).first;
  }
  return it->second;
}

Tournament sz_over(const AbelianGroup& G) {
  SdfSearchOptions opts;
  opts.max_results = 1;
  const auto fams = search_sdf(G, 2, opts);
  return build_sz(G, fams.at(0).blocks[0], fams.at(0).blocks[1]);
}

const Tournament& w_gf9() {
  static const Tournament t = [] {
    SdfSearchOptions opts;
    opts.max_results = 1;
    const auto G = field(3, 2)->additive_group();
    const auto fams = search_sdf(G, 4, opts);
    return build_w(G, fams.at(0).blocks[0], fams.at(0).blocks[1], fams.at(0).blocks[2],
                   fams.at(0).blocks[3]);
  }();
  return t;
}

const Tournament& dy243() {
  static const Tournament t = [] {
    const auto fam = ding_yuan_set(5);
    return build_cayley_drt(fam.group, fam.blocks[0]);
  }();
  return t;
}

const GroupStructure& critical_group_of(const Tournament& T, const std::string& key) {
  static std::map<std::string, GroupStructure> cache;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, drt_critical_group(T)).first;
  return it->second;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return m;
}

std::vector<int> torsion_valuations(const SnfResult& s, std::int64_t p) {
  std::vector<int> vals;
  for (const auto& f : s.invariant_factors) {
    int v = 0;
    BigInt x = f;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    vals.push_back(v);
  }
  return vals;
}

} // namespace

int main() {
  int failures = 0;
  const auto run = [&](int index, const std::string& name,
                       const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream why;
    bool ok = true;
    try {
      body(why);
      ok = why.str().empty();
    } catch (const std::exception& e) {
      ok = false;
      why << "exception: " << e.what();
    }
    if (ok) {
      std::cout << "PASS " << index << ": " << name << "\n";
    } else {
      std::cout << "FAIL " << index << ": " << name << " -- " << why.str() << "\n";
      ++failures;
    }
  };

  run(1, "matrix identities and validator hold for every construction", [&](auto& why) {
    std::vector<std::pair<std::string, Tournament>> instances;
    for (std::int64_t q : {7, 11, 19, 23, 27, 31, 43})
      instances.emplace_back("paley " + std::to_string(q), paley(q));
    instances.emplace_back("sz z3", sz_over(make_cyclic(3)));
    instances.emplace_back("sz gf5", sz_over(field(5, 1)->additive_group()));
    instances.emplace_back("sz z5", sz_over(make_cyclic(5)));
    instances.emplace_back("sz z13", sz_over(make_cyclic(13)));
    instances.emplace_back("w gf9", w_gf9());
    instances.emplace_back("dy 243", dy243());
    for (auto& [label, T] : instances) {
      const auto report = check_drt_identities(T);
      if (!report.ok) {
        why << label << ": " << report.failure;
        return;
      }
      Tournament copy = T;
      const auto check = validate_drt(copy);
      if (!check.ok) {
        why << label << ": " << check.violation;
        return;
      }
    }
  });

  run(2, "sz critical groups match the closed form", [&](auto& why) {
    const std::vector<std::pair<std::int64_t, AbelianGroup>> cases = {
        {1, make_cyclic(3)},
        {2, field(5, 1)->additive_group()},
        {2, make_cyclic(5)},
        {6, make_cyclic(13)}};
    for (const auto& [lambda, G] : cases) {
      const auto got = drt_critical_group(sz_over(G));
      const auto want = predict_sz(lambda).structure;
      if (!(got == want)) {
        why << "lambda " << lambda << ": " << structure_diff(got, want);
        return;
      }
    }
    const auto explicit6 =
        GroupStructure::cyclic_power(7, 13).direct_sum(GroupStructure::cyclic_power(27, 12));
    if (!(predict_sz(6).structure == explicit6)) why << "lambda 6 closed form drifted";
  });

  run(3, "w critical group and p-ranks over gf(9)", [&](auto& why) {
    const auto got = critical_group_of(w_gf9(), "w gf9");
    const auto want =
        GroupStructure::cyclic_power(10, 19).direct_sum(GroupStructure::cyclic_power(39, 18));
    if (!(got == want)) {
      why << structure_diff(got, want);
      return;
    }
    const auto Q = w_gf9().laplacian();
    for (const auto& [p, want_rank] :
         std::vector<std::pair<std::int64_t, std::size_t>>{{2, 19}, {5, 19}, {3, 20}, {13, 20}})
      if (p_rank(Q, p) != want_rank) {
        why << "p-rank at " << p << " is " << p_rank(Q, p) << ", want " << want_rank;
        return;
      }
  });

  run(4, "paley p-ranks and elementary-divisor profile", [&](auto& why) {
    const std::vector<std::tuple<std::int64_t, std::int64_t, int, std::size_t>> cases = {
        {7, 7, 1, 4}, {11, 11, 1, 6}, {27, 3, 3, 8}, {243, 3, 5, 32}};
    for (const auto& [q, p, t, want_rank] : cases) {
      const auto& T = paley(q);
      if (p_rank(T.laplacian(), p) != want_rank) {
        why << "q=" << q << ": p-rank != " << want_rank;
        return;
      }
      const auto profile = counting_profile(p, t);
      const auto& group = critical_group_of(T, "paley " + std::to_string(q));
      std::map<int, std::int64_t> multiplicities;
      const auto it = group.elementary_divisors().find(p);
      if (it != group.elementary_divisors().end())
        for (int e : it->second) ++multiplicities[e];
      for (const auto& [a, count] : profile.counts) {
        if (a == 0) continue; // exponent-0 slots are units, not summands
        if (multiplicities[a] != count) {
          why << "q=" << q << ": " << multiplicities[a] << " summands of exponent " << a
              << ", profile says " << count;
          return;
        }
      }
      for (int i = 1; i < t; ++i)
        if (e_formula(p, t, i) != profile.counts.at(i)) {
          why << "q=" << q << ": closed form disagrees with enumeration at i=" << i;
          return;
        }
    }
  });

  run(5, "paley(7) invariant factors pin the lambda+1 convention", [&](auto& why) {
    const auto s = snf(paley(7).laplacian());
    const std::vector<BigInt> want = {1, 1, 1, 2, 14, 14};
    if (s.invariant_factors != want || s.free_rank != 1) {
      why << "smith form changed";
      return;
    }
    // torsion order (4l+3)^2l (l+1)^(2l+1) with l+1 = (q+1)/4 = 2; the
    // (q-1)/4 = 1 reading would make the group (Z/7)^2 of order 49.
    if (BigInt(2) * 14 * 14 != drt_torsion_order(1)) why << "order formula drifted";
  });

  run(6, "hadamard identities and universal smith form", [&](auto& why) {
    std::vector<std::pair<std::string, Tournament>> sources;
    for (std::int64_t q : {7, 11, 19, 23, 27})
      sources.emplace_back("paley " + std::to_string(q), paley(q));
    sources.emplace_back("w gf9", w_gf9());
    sources.emplace_back("dy 243", dy243());
    const std::vector<std::size_t> want_orders = {8, 12, 20, 24, 28, 40, 244};
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const auto h = drt_to_hadamard(sources[i].second);
      if (h.order() != want_orders[i]) {
        why << sources[i].first << ": order " << h.order();
        return;
      }
      if (!is_hadamard(h) || !is_skew(h)) {
        why << sources[i].first << ": matrix identities fail";
        return;
      }
      const auto check = check_hadamard_snf(h);
      if (!check.ok) {
        why << sources[i].first << ": " << check.report;
        return;
      }
    }
  });

  run(7, "non-isomorphic constructions get different critical groups", [&](auto& why) {
    const auto& p27 = critical_group_of(paley(27), "paley 27");
    const auto sz13 = drt_critical_group(sz_over(make_cyclic(13)));
    const std::vector<int> p27_exps = {1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3};
    const std::vector<int> sz13_exps(12, 3);
    if (p27.elementary_divisors().at(3) != p27_exps ||
        sz13.elementary_divisors().at(3) != sz13_exps) {
      why << "3-part shapes drifted";
      return;
    }
    if (p27 == sz13) {
      why << "paley(27) and sz over z13 compare equal";
      return;
    }
    const auto& a = critical_group_of(paley(243), "paley 243");
    const auto& b = critical_group_of(dy243(), "dy 243");
    if (a == b) why << "paley(243) and the ding-yuan tournament compare equal";
  });

  run(8, "smith form agrees with independent oracles", [&](auto& why) {
    std::mt19937_64 rng(20260825);
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t n = 2 + trial % 5; // 2..6
      const auto m = random_matrix(rng, n);
      const auto direct = snf(m);
      const auto oracle = snf_minor_gcd(m);
      if (!(direct == oracle)) {
        why << "minor-gcd mismatch at trial " << trial;
        return;
      }
    }
    for (const std::size_t n : {5, 10, 20, 40, 60}) {
      const auto m = random_matrix(rng, n);
      const auto s = snf(m);
      for (const std::int64_t p : {2, 3, 5}) {
        const auto loc = local_snf(m, p);
        std::vector<int> exact(loc.valuations.begin(),
                               loc.valuations.end() - static_cast<long>(loc.capped));
        if (exact != torsion_valuations(s, p) || loc.capped != s.free_rank) {
          why << "local valuations mismatch at n=" << n << ", p=" << p;
          return;
        }
      }
    }
  });

  run(9, "invariant factors divide those of a product", [&](auto& why) {
    std::mt19937_64 rng(1123581321);
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = random_matrix(rng, 4);
      const auto b = random_matrix(rng, 4);
      if (!divisibility_product_check(a, b)) {
        why << "violation at trial " << trial;
        return;
      }
    }
  });

  run(10, "character blocks satisfy the trace and determinant identities", [&](auto& why) {
    const auto sz = sz_over(make_cyclic(5));
    for (std::int64_t chi = 1; chi <= 4; ++chi) {
      const auto check = character_block_check(sz, chi);
      if (!check.ok) {
        why << "sz chi=" << chi << ": " << check.report;
        return;
      }
    }
    for (std::int64_t chi = 1; chi <= 8; ++chi) {
      const auto check = character_block_check(w_gf9(), chi);
      if (!check.ok) {
        why << "w chi=" << chi << ": " << check.report;
        return;
      }
    }
  });

  run(11, "jacobi sums obey the classical identities and carry counts", [&](auto& why) {
    for (const auto& [p, t] : std::vector<std::pair<std::int64_t, int>>{{7, 1}, {11, 1}, {3, 3}}) {
      const auto F = field(p, t);
      const std::int64_t q = F->q();
      const std::int64_t k = (q - 1) / 2;
      const auto one = CyclotomicInt::integer(q - 1, 1);
      if (!(jacobi_sum(k, k, F) == one)) {
        why << "q=" << q << ": J(psi,psi) != 1";
        return;
      }
      for (std::int64_t a = 1; a <= q - 2; ++a) {
        if (!jacobi_sum(a, 0, F).is_zero()) {
          why << "q=" << q << ": J(T^" << a << ", T^0) != 0";
          return;
        }
        if (a == k) continue; // T^a T^k trivial: the magnitude identity needs all three nontrivial
        const auto z = jacobi_sum(a, k, F).embed();
        if (std::abs(std::norm(z) - static_cast<double>(q)) > 1e-9 * q) {
          why << "q=" << q << ": |J(T^" << a << ", psi)|^2 != q";
          return;
        }
      }
    }
    for (const auto& [p, t] : std::vector<std::pair<std::int64_t, int>>{{7, 1}, {3, 3}}) {
      const auto check = verify_stickelberger(field(p, t));
      if (!check.ok) {
        why << "carry/valuation mismatch for p=" << p << ", t=" << t << "\n" << check.report;
        return;
      }
    }
  });

  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
