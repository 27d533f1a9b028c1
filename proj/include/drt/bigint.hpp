#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace drt {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, std::uint64_t exp);

// v_p(|n|); requires n != 0 and p >= 2.
int valuation(BigInt n, const BigInt& p);

bool is_prime(std::int64_t n);

// Trial-division factorization, prime -> exponent. Intended for the small
// parameters that show up here (group orders, invariant factors); throws if
// a cofactor survives past the trial bound.
std::map<BigInt, int> factorize(const BigInt& n);

std::vector<std::int64_t> prime_factors(std::int64_t n);

// Inverse of a mod m (gcd(a, m) = 1), via extended Euclid.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

} // namespace drt
