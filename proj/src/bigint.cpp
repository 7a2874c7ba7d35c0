#include "flagtrans/bigint.hpp"

#include <stdexcept>

namespace flagtrans {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1, b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

BigInt iroot_ceil(const BigInt& n, unsigned k) {
  if (n < 0) throw std::domain_error("iroot_ceil of a negative number");
  if (k == 0) throw std::domain_error("zeroth root");
  if (n <= 1) return n;
  // Binary search on t with t^k >= n.
  BigInt lo = 0, hi = 1;
  while (ipow(hi, k) < n) hi <<= 1;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, k) >= n)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace flagtrans
