#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagtrans {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Floor of the square root; throws std::domain_error for negative input.
BigInt isqrt(const BigInt& n);

/// Smallest t >= 0 with t^k >= n (n >= 0, k >= 1).
BigInt iroot_ceil(const BigInt& n, unsigned k);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

inline std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace flagtrans
