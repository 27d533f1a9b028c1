#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace drt {

// Element of a finite abelian group: one residue per invariant factor.
using GroupElement = std::vector<std::int64_t>;

// Finite abelian group Z/d1 x ... x Z/dr given by its invariant factors
// (each di >= 2; divisibility between the di is not required here).
//
// Enumeration order: index -> coordinates with the FIRST factor cycling
// fastest.  For the additive group of GF(p^t), whose factors are
// (p, ..., p), the index of an element then equals the base-p encoding of
// its polynomial coefficients, so field codes and group indices agree.
class AbelianGroup {
public:
  explicit AbelianGroup(std::vector<std::int64_t> invariant_factors);

  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::int64_t exponent() const;

  GroupElement element(std::int64_t index) const;
  std::int64_t index_of(const GroupElement& e) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

  std::string describe() const; // "Z/3 x Z/3"

  bool operator==(const AbelianGroup&) const = default;

private:
  void check_index(std::int64_t index) const;

  std::vector<std::int64_t> factors_;
  std::int64_t order_;
};

AbelianGroup make_cyclic(std::int64_t n);

// "5" for cyclic groups, "(1,2)" for products.
std::string element_label(const AbelianGroup& G, std::int64_t index);

} // namespace drt
