#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "drt/int_matrix.hpp"
#include "drt/tournament.hpp"

namespace drt {

// Square ±1 matrix.
class SignMatrix {
public:
  explicit SignMatrix(std::size_t order); // all +1

  std::size_t order() const { return order_; }
  int at(std::size_t i, std::size_t j) const { return e_[i * order_ + j]; }
  int& at(std::size_t i, std::size_t j) { return e_[i * order_ + j]; }

  IntMatrix to_int_matrix() const;

  // One row per line, '+' and '-'.
  std::string to_text() const;
  static SignMatrix from_text(const std::string& text);

  bool operator==(const SignMatrix&) const = default;

private:
  std::size_t order_ = 0;
  std::vector<int> e_;
};

bool is_hadamard(const SignMatrix& h); // H Hᵀ = nI, checked exactly
bool is_skew(const SignMatrix& h);     // H + Hᵀ = 2I

// Border a doubly-regular tournament's adjacency matrix into a skew Hadamard
// matrix of order n+1; both defining identities are re-verified exactly.
SignMatrix drt_to_hadamard(const Tournament& t);

// Inverse of drt_to_hadamard.  Accepts only the bordered form: +1 corner,
// all +1 first row, all -1 first column below the corner.
Tournament hadamard_to_drt(const SignMatrix& h);

// Conjugate a skew Hadamard matrix by a diagonal sign matrix so that it lands
// in bordered form.  Within the skew class this form is unique.
SignMatrix normalize_skew_hadamard(const SignMatrix& h);

struct HadamardSnfCheck {
  bool ok = false;
  std::string report; // empty when ok
  explicit operator bool() const { return ok; }
};

// Does the Smith normal form equal diag[1, 2 x(2m-1), 2m x(2m-1), 4m]?
// Every skew Hadamard matrix of order 4m has this form.
HadamardSnfCheck check_hadamard_snf(const SignMatrix& h);

} // namespace drt
