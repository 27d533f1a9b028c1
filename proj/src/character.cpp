#include "drt/character.hpp"

#include <stdexcept>

namespace drt {

Character Character::teichmuller_power(std::shared_ptr<const FiniteField> F, std::int64_t a) {
  if (!F) throw std::invalid_argument("Character: null field");
  Character c;
  c.conductor_ = F->q() - 1;
  c.field_ = std::move(F);
  c.index_ = a;
  return c;
}

Character Character::of_group(AbelianGroup G, std::int64_t dual_index) {
  if (dual_index < 0 || dual_index >= G.order())
    throw std::invalid_argument("Character: dual index out of range");
  Character c;
  c.conductor_ = G.exponent();
  c.index_ = dual_index;
  c.group_ = std::move(G);
  return c;
}

bool Character::is_trivial() const {
  if (field_) return index_ == 0;
  return index_ == 0;
}

CyclotomicInt Character::value(std::int64_t x) const {
  if (field_) {
    if (x == 0) {
      if (index_ == 0) return CyclotomicInt::integer(conductor_, 1);
      return CyclotomicInt(conductor_);
    }
    std::int64_t e = (index_ % conductor_) * field_->log(x) % conductor_;
    return CyclotomicInt::root_power(conductor_, e);
  }
  const AbelianGroup& G = *group_;
  GroupElement g = G.element(x), h = G.element(index_);
  const auto& d = G.invariant_factors();
  std::int64_t e = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    // zeta_m^(m/d_j) is a primitive d_j-th root of unity.
    e = (e + (conductor_ / d[j]) * ((h[j] * g[j]) % d[j])) % conductor_;
  }
  return CyclotomicInt::root_power(conductor_, e);
}

std::complex<double> Character::value_c(std::int64_t x) const { return value(x).embed(); }

CyclotomicInt Character::sum(const std::vector<std::int64_t>& xs) const {
  CyclotomicInt acc(conductor_);
  for (std::int64_t x : xs) acc += value(x);
  return acc;
}

} // namespace drt
