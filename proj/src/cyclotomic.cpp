#include "drt/cyclotomic.hpp"

#include <map>
#include <numbers>
#include <stdexcept>

namespace drt {
namespace {

// Exact division of integer polynomials, num / den with den monic;
// remainder must vanish.
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  if (den.empty() || den.back() != 1) throw std::logic_error("poly_divide_exact: denominator not monic");
  if (num.size() < den.size()) throw std::logic_error("poly_divide_exact: degree underflow");
  std::vector<BigInt> quot(num.size() - den.size() + 1, 0);
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(num.size()) - 1;
       i >= static_cast<std::ptrdiff_t>(den.size()) - 1; --i) {
    BigInt lead = num[i];
    if (lead == 0) continue;
    std::size_t shift = i - (den.size() - 1);
    quot[shift] = lead;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= lead * den[j];
  }
  for (const BigInt& r : num)
    if (r != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
  return quot;
}

} // namespace

std::int64_t euler_phi(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  std::int64_t r = m;
  for (std::int64_t p : prime_factors(m)) r = r / p * (p - 1);
  return r;
}

const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t m) {
  static std::map<std::int64_t, std::vector<BigInt>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  std::vector<BigInt> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return cache.emplace(m, std::move(num)).first->second;
}

CyclotomicInt::CyclotomicInt(std::int64_t conductor) : m_(conductor) {
  if (conductor < 1) throw std::invalid_argument("CyclotomicInt: conductor must be positive");
  c_.assign(euler_phi(conductor), 0);
}

CyclotomicInt CyclotomicInt::integer(std::int64_t conductor, const BigInt& n) {
  CyclotomicInt v(conductor);
  v.c_[0] = n;
  return v;
}

CyclotomicInt CyclotomicInt::from_coefficients(std::int64_t conductor, std::vector<BigInt> coeffs) {
  const auto& phi = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi.size() - 1; // = euler_phi(conductor)
  // Reduce mod Phi_m (monic) by long division.
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    BigInt lead = coeffs[i];
    if (lead == 0) continue;
    coeffs[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) coeffs[i - deg + j] -= lead * phi[j];
  }
  coeffs.resize(deg, 0);
  CyclotomicInt v(conductor);
  v.c_ = std::move(coeffs);
  return v;
}

CyclotomicInt CyclotomicInt::root_power(std::int64_t conductor, std::int64_t e) {
  e %= conductor;
  if (e < 0) e += conductor;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(e) + 1, 0);
  coeffs[e] = 1;
  return from_coefficients(conductor, std::move(coeffs));
}

bool CyclotomicInt::is_zero() const {
  for (const BigInt& x : c_)
    if (x != 0) return false;
  return true;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt v = *this;
  for (BigInt& x : v.c_) x = -x;
  return v;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  if (m_ != o.m_) throw std::invalid_argument("CyclotomicInt: conductor mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  if (m_ != o.m_) throw std::invalid_argument("CyclotomicInt: conductor mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
  if (m_ != o.m_) throw std::invalid_argument("CyclotomicInt: conductor mismatch");
  std::vector<BigInt> prod(c_.size() + o.c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = from_coefficients(m_, std::move(prod));
  return *this;
}

std::complex<double> CyclotomicInt::embed() const {
  std::complex<double> acc = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double co = static_cast<double>(c_[j]);
    acc += co * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                    static_cast<double>(m_));
  }
  return acc;
}

std::string CyclotomicInt::str() const {
  std::string s;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) s += " + ";
    s += c_[j].str();
    if (j > 0) s += "*z^" + std::to_string(j);
    first = false;
  }
  if (first) s = "0";
  return s + " (z = zeta_" + std::to_string(m_) + ")";
}

} // namespace drt
