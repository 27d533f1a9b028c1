#include "drt/bigint.hpp"

#include <stdexcept>

namespace drt {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

int valuation(BigInt n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::map<BigInt, int> factorize(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("factorize: need a positive integer");
  std::map<BigInt, int> out;
  BigInt m = n;
  auto strip = [&](const BigInt& p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out[p] = e;
  };
  strip(2);
  const std::int64_t bound = 1'000'000;
  for (std::int64_t d = 3; d <= bound && BigInt(d) * d <= m; d += 2) strip(d);
  if (m > 1) {
    // No factor <= 10^6, so m is prime if m < 10^12.
    if (m < BigInt(bound) * bound)
      out[m] += 1;
    else
      throw std::runtime_error("factorize: cofactor beyond trial bound");
  }
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& [p, e] : factorize(BigInt(n))) out.push_back(static_cast<std::int64_t>(p));
  return out;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

} // namespace drt
