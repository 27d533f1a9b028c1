#pragma once

#include "drt/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace drt {

// Finite abelian group given by elementary divisors: for each prime p an
// ascending list of exponents e with a (Z/p^e) summand per entry.
class GroupStructure {
public:
  GroupStructure() = default; // trivial group

  static GroupStructure from_elementary(std::map<BigInt, std::vector<int>> divisors);
  // Drops units; factorizes the rest.
  static GroupStructure from_invariant_factors(const std::vector<BigInt>& factors);
  // (Z/m)^copies
  static GroupStructure cyclic_power(const BigInt& m, int copies);

  GroupStructure direct_sum(const GroupStructure& other) const;

  const BigInt& order() const { return order_; }
  const std::map<BigInt, std::vector<int>>& elementary_divisors() const { return divisors_; }
  // Smallest-to-largest divisibility chain, units omitted.
  std::vector<BigInt> invariant_factors() const;
  // Number of p^e summands: the p-rank of the group.
  int rank_at(const BigInt& p) const;

  std::string describe() const; // "(Z/2)^3 x (Z/7)^2"
  std::string to_json() const;  // stable key order
  static GroupStructure from_json(const std::string& text);

  bool operator==(const GroupStructure&) const = default;

private:
  std::map<BigInt, std::vector<int>> divisors_;
  BigInt order_ = 1;
};

// Human-readable per-prime difference, empty when equal.
std::string structure_diff(const GroupStructure& a, const GroupStructure& b);

} // namespace drt
