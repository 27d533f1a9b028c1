#pragma once

#include "drt/bigint.hpp"
#include "drt/int_matrix.hpp"

#include <cstdint>
#include <vector>

namespace drt {

struct SnfResult {
  // Nonzero diagonal of the Smith form, positive, each dividing the next
  // (units included).
  std::vector<BigInt> invariant_factors;
  std::size_t free_rank = 0;  // zero diagonal entries: min(rows, cols) - rank
  std::size_t unit_count = 0; // factors equal to 1

  bool operator==(const SnfResult&) const = default;
};

// Integer Smith normal form by row/column reduction with
// minimum-|entry| pivoting and the usual divisibility fix-up.
SnfResult snf(IntMatrix M);

// Independent oracle: s_i = d_i / d_{i-1} with d_i the gcd of all i x i
// minors.  Exponential in the dimension; refuses dimensions > max_dim.
SnfResult snf_minor_gcd(const IntMatrix& M, std::size_t max_dim = 8);

// Exact determinant (fraction-free elimination).
BigInt determinant(const IntMatrix& M);

struct LocalSnf {
  std::int64_t p = 0;
  int modulus_exponent = 0; // K: arithmetic is exact mod p^K
  // One entry per diagonal position, ascending.  A value of K means the
  // true valuation is >= K (a genuine zero or an undetectably large
  // power); `capped` counts those.
  std::vector<int> valuations;
  std::size_t capped = 0;
};

// p-adic valuations of the invariant factors, by elimination over the
// integers mod p^K with minimum-valuation pivoting.  K = 0 derives a
// sufficient exponent from the Hadamard determinant bound; callers with a
// known torsion order should pass v_p(order) + 1 instead.
LocalSnf local_snf(const IntMatrix& M, std::int64_t p, int K = 0);

// Rank over the field with p elements.
std::size_t p_rank(const IntMatrix& M, std::int64_t p);

// s_k(A) | s_k(AB) and s_k(B) | s_k(AB) for all k, zeros included.
bool divisibility_product_check(const IntMatrix& A, const IntMatrix& B);

} // namespace drt
