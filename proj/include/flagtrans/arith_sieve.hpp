#pragma once

// Primitive parts of q^e - 1, Zsigmondy primes, w-parts, and the
// order inequalities used to bound point and block stabilizers.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagtrans/bigint.hpp"
#include "flagtrans/group_atlas.hpp"

namespace flagtrans::arith {

struct Factor {
  BigInt prime;
  unsigned multiplicity = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Deterministic Miller-Rabin (fixed seed).
bool is_prime(const BigInt& n);

/// Prime factorization, primes ascending. Trial division by small primes,
/// then Pollard-Brent on what remains. factorize(1) is empty.
std::vector<Factor> factorize(const BigInt& n);

struct PrimitivePartResult {
  BigInt q;
  unsigned e = 0;
  BigInt value;
  /// value / (q^e - 1) complement: q^e - 1 = value * stripped.
  BigInt stripped;
  std::vector<Factor> witnesses;
};

/// Largest divisor of q^e - 1 coprime to q^i - 1 for every 1 <= i < e,
/// obtained by dividing out gcd(., q^i - 1) until nothing is left to strip.
/// Throws std::invalid_argument for q < 2 or e < 1.
PrimitivePartResult primitive_part(const BigInt& q, unsigned e);

/// Primes dividing p^m - 1 but no p^i - 1 with i < m, ascending.
std::vector<BigInt> primitive_prime_divisors(const BigInt& p, unsigned m);

/// (m_w, m_w') with m = m_w * m_w' and m_w the w-part. Requires m >= 1.
std::pair<BigInt, BigInt> w_part(const BigInt& m, const BigInt& w);

/// (k+1) / gcd(k+1, out).
BigInt orbit_divisor(const BigInt& k, const BigInt& out);

/// |X| < |Out X|^2 |X_x| |X_x|_{p'}^2
bool sing_inequality(const BigInt& order_x, const BigInt& out_x, const BigInt& order_xx, const BigInt& p);

enum class Verdict { pass, fail, hypothesis_unmet };
std::string to_string(Verdict v);

/// If |Out X| <= |X_x|_p then X_x must be large, i.e. |X| < |X_x|^3.
/// hypothesis_unmet when |Out X| > |X_x|_p.
Verdict sing_large(const BigInt& order_x, const BigInt& out_x, const BigInt& order_xx, const BigInt& p);

/// |X|_p <= |Out X|_p^3 |X_B|_p^3. The three arguments must be powers of a
/// single prime (1 counts as a power of any prime); throws otherwise.
bool utakmica_check(const BigInt& order_x_p, const BigInt& out_x_p, const BigInt& order_xb_p);

struct KraljBound {
  /// Exponent num/den in lowest terms (den > 0).
  std::int64_t num = 0;
  std::int64_t den = 1;
  /// max(p, ceil(q^(num/den))) where q is the natural field size
  /// (q0^2 for unitary groups).
  BigInt threshold;
};

/// Lower bound for |X_B|_p. Throws std::invalid_argument outside the
/// admissible parameter range.
KraljBound kralj_bound(const atlas::ClassicalType& t);

}  // namespace flagtrans::arith
