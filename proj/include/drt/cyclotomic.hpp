#pragma once

#include "drt/bigint.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace drt {

std::int64_t euler_phi(std::int64_t m);

// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t m);

// Exact element of Z[zeta_m] = Z[x]/Phi_m(x), stored as the reduced
// coefficient vector of length phi(m).  Mixed-conductor arithmetic is not
// supported; operands must share m.
class CyclotomicInt {
public:
  CyclotomicInt() : CyclotomicInt(1) {}
  explicit CyclotomicInt(std::int64_t conductor); // zero
  static CyclotomicInt integer(std::int64_t conductor, const BigInt& n);
  static CyclotomicInt root_power(std::int64_t conductor, std::int64_t e); // zeta^e

  std::int64_t conductor() const { return m_; }
  const std::vector<BigInt>& coefficients() const { return c_; }
  bool is_zero() const;

  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  bool operator==(const CyclotomicInt&) const = default;

  // zeta -> exp(2*pi*i/m).
  std::complex<double> embed() const;
  std::string str() const;

  // Reduce an arbitrary coefficient vector (any length) mod Phi_m.
  static CyclotomicInt from_coefficients(std::int64_t conductor, std::vector<BigInt> coeffs);

private:
  std::int64_t m_;
  std::vector<BigInt> c_;
};

} // namespace drt
