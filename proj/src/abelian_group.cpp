#include "drt/abelian_group.hpp"

#include <numeric>
#include <stdexcept>

namespace drt {

AbelianGroup::AbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  if (factors_.empty()) throw std::invalid_argument("AbelianGroup: no invariant factors");
  order_ = 1;
  for (std::int64_t d : factors_) {
    if (d < 2) throw std::invalid_argument("AbelianGroup: invariant factors must be >= 2");
    if (order_ > (std::int64_t{1} << 40) / d)
      throw std::invalid_argument("AbelianGroup: order too large");
    order_ *= d;
  }
}

std::int64_t AbelianGroup::exponent() const {
  std::int64_t e = 1;
  for (std::int64_t d : factors_) e = std::lcm(e, d);
  return e;
}

void AbelianGroup::check_index(std::int64_t index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("AbelianGroup: element index out of range");
}

GroupElement AbelianGroup::element(std::int64_t index) const {
  check_index(index);
  GroupElement e(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    e[j] = index % factors_[j];
    index /= factors_[j];
  }
  return e;
}

std::int64_t AbelianGroup::index_of(const GroupElement& e) const {
  if (e.size() != factors_.size()) throw std::invalid_argument("AbelianGroup: coordinate count mismatch");
  std::int64_t idx = 0, stride = 1;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::int64_t c = e[j] % factors_[j];
    if (c < 0) c += factors_[j];
    idx += c * stride;
    stride *= factors_[j];
  }
  return idx;
}

std::int64_t AbelianGroup::add(std::int64_t a, std::int64_t b) const {
  check_index(a);
  check_index(b);
  std::int64_t idx = 0, stride = 1;
  for (std::int64_t d : factors_) {
    std::int64_t ca = a % d, cb = b % d;
    a /= d;
    b /= d;
    idx += ((ca + cb) % d) * stride;
    stride *= d;
  }
  return idx;
}

std::int64_t AbelianGroup::neg(std::int64_t a) const {
  check_index(a);
  std::int64_t idx = 0, stride = 1;
  for (std::int64_t d : factors_) {
    std::int64_t c = a % d;
    a /= d;
    idx += ((d - c) % d) * stride;
    stride *= d;
  }
  return idx;
}

std::string AbelianGroup::describe() const {
  std::string s;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) s += " x ";
    s += "Z/" + std::to_string(factors_[j]);
  }
  return s;
}

AbelianGroup make_cyclic(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("make_cyclic: order must be >= 2");
  return AbelianGroup({n});
}

std::string element_label(const AbelianGroup& G, std::int64_t index) {
  const auto coords = G.element(index);
  if (coords.size() == 1) return std::to_string(coords[0]);
  std::string s = "(";
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(coords[j]);
  }
  s += ')';
  return s;
}

} // namespace drt
