#pragma once

#include "drt/abelian_group.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace drt {

// GF(p^t) with a fixed irreducible modulus polynomial and a fixed
// multiplicative generator.  Elements are encoded as integers in [0, q):
// the base-p digits of a code are the coefficients of the residue
// polynomial, constant term first.  Under this encoding the additive group
// view (invariant factors p, ..., p) enumerates elements in the same order
// as the codes themselves.
class FiniteField {
public:
  // Uses the built-in modulus table (see ModulusTable below).
  static std::shared_ptr<const FiniteField> make(std::int64_t p, int t);
  // Explicit monic modulus, length t+1, constant term first.
  static std::shared_ptr<const FiniteField> make(std::int64_t p, int t,
                                                 std::vector<std::int64_t> modulus);

  std::int64_t p() const { return p_; }
  int t() const { return t_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  std::int64_t generator() const { return generator_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;

  // generator^k (k taken mod q-1) and its inverse map (a != 0).
  std::int64_t exp(std::int64_t k) const;
  std::int64_t log(std::int64_t a) const;

  AbelianGroup additive_group() const;

private:
  FiniteField() = default;

  std::int64_t p_ = 0, q_ = 0;
  int t_ = 0;
  std::vector<std::int64_t> modulus_;
  std::int64_t generator_ = 0;
  std::vector<std::int64_t> exp_;  // exp_[k] = generator^k, k in [0, q-1)
  std::vector<std::int64_t> log_;  // log_[a] for a in [1, q)
};

// The (q-1)/2 nonzero squares, sorted by element code.
std::vector<std::int64_t> squares(const FiniteField& F);

// Modulus polynomial table.  The built-in entries are the standard
// published (Conway-style) polynomials for the field sizes used here; a
// config file can override or extend them.  File format, one entry per
// line, '#' starts a comment:
//
//   p t c0 c1 ... ct
//
// with the ci the coefficients of a monic irreducible polynomial over
// GF(p), constant term first.
class ModulusTable {
public:
  static const ModulusTable& builtin();
  // Built-in entries plus the overrides parsed from the stream/file.
  static ModulusTable with_overrides(std::istream& in);
  static ModulusTable with_overrides_from_file(const std::string& path);

  std::optional<std::vector<std::int64_t>> find(std::int64_t p, int t) const;
  // make() honoring this table (needed when overrides are in play).
  std::shared_ptr<const FiniteField> make_field(std::int64_t p, int t) const;

private:
  std::map<std::pair<std::int64_t, int>, std::vector<std::int64_t>> table_;
};

} // namespace drt
