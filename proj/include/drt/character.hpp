#pragma once

#include "drt/abelian_group.hpp"
#include "drt/cyclotomic.hpp"
#include "drt/finite_field.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace drt {

// A multiplicative character of GF(q)^x, or a character of a finite abelian
// group, with values in Z[zeta].
//
// Field case: the a-th power of the generator character T, where T sends
// the field's fixed multiplicative generator to zeta_{q-1}.  Extension to 0
// follows the usual convention: the character of index exactly 0 maps 0 to
// 1; every other index (including multiples of q-1, such as q-1 itself)
// maps 0 to 0.
//
// Group case: characters are indexed by elements of the dual group, which
// is identified with the group itself via its enumeration order.
class Character {
public:
  static Character teichmuller_power(std::shared_ptr<const FiniteField> F, std::int64_t a);
  static Character of_group(AbelianGroup G, std::int64_t dual_index);

  bool is_field_character() const { return field_ != nullptr; }
  std::int64_t index() const { return index_; }
  std::int64_t conductor() const { return conductor_; }
  // Identically 1, including at 0 in the field case.
  bool is_trivial() const;

  // x is a field element code (field case) or a group element index.
  CyclotomicInt value(std::int64_t x) const;
  std::complex<double> value_c(std::int64_t x) const;

  CyclotomicInt sum(const std::vector<std::int64_t>& xs) const;

private:
  std::shared_ptr<const FiniteField> field_;
  std::optional<AbelianGroup> group_;
  std::int64_t index_ = 0;
  std::int64_t conductor_ = 1;
};

} // namespace drt
