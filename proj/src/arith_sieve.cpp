#include "flagtrans/arith_sieve.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

namespace flagtrans::arith {

namespace {

constexpr unsigned kTrialLimit = 10000;

BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& n) { return (a * b) % n; }

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n.
BigInt pollard_brent(const BigInt& n) {
  for (BigInt c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned m = 128;
    unsigned r = 1;
    do {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      unsigned k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned i = 0; i < std::min(m, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

// Largest power of w dividing m, for w >= 2.
BigInt strip_power(BigInt& m, const BigInt& w) {
  BigInt part = 1;
  while (m % w == 0) {
    m /= w;
    part *= w;
  }
  return part;
}

// Returns the prime p if n is a power of p (n > 1), 1 for n = 1, and 0 if
// n has two distinct prime factors.
BigInt prime_base(const BigInt& n) {
  if (n == 1) return 1;
  auto f = factorize(n);
  return f.size() == 1 ? f.front().prime : BigInt(0);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::mt19937_64 gen(0x5eedu);
  return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

std::vector<Factor> factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize expects a positive integer");
  std::map<BigInt, unsigned> found;
  BigInt m = n;
  for (unsigned d = 2; d < kTrialLimit && BigInt(d) * d <= m; ++d) {
    while (m % d == 0) {
      m /= d;
      ++found[BigInt(d)];
    }
  }
  split(m, found);
  std::vector<Factor> out;
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

PrimitivePartResult primitive_part(const BigInt& q, unsigned e) {
  if (q < 2) throw std::invalid_argument("primitive_part needs q >= 2");
  if (e < 1) throw std::invalid_argument("primitive_part needs e >= 1");
  const BigInt total = ipow(q, e) - 1;
  BigInt value = total;
  for (unsigned i = 1; i < e; ++i) {
    const BigInt other = ipow(q, i) - 1;
    for (BigInt g = gcd(value, other); g > 1; g = gcd(value, other)) value /= g;
  }
  PrimitivePartResult r;
  r.q = q;
  r.e = e;
  r.value = value;
  r.stripped = total / value;
  r.witnesses = factorize(value);
  return r;
}

std::vector<BigInt> primitive_prime_divisors(const BigInt& p, unsigned m) {
  std::vector<BigInt> primes;
  for (const auto& f : primitive_part(p, m).witnesses) primes.push_back(f.prime);
  return primes;
}

std::pair<BigInt, BigInt> w_part(const BigInt& m, const BigInt& w) {
  if (m < 1) throw std::invalid_argument("w_part needs m >= 1");
  if (w < 2) throw std::invalid_argument("w_part needs w >= 2");
  BigInt rest = m;
  BigInt part = strip_power(rest, w);
  return {part, rest};
}

BigInt orbit_divisor(const BigInt& k, const BigInt& out) {
  if (k < 2 || out < 1) throw std::invalid_argument("orbit_divisor needs k >= 2 and out >= 1");
  return (k + 1) / gcd(k + 1, out);
}

bool sing_inequality(const BigInt& order_x, const BigInt& out_x, const BigInt& order_xx, const BigInt& p) {
  auto [xx_p, xx_pp] = w_part(order_xx, p);
  return order_x < out_x * out_x * order_xx * xx_pp * xx_pp;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypothesis_unmet: return "hypothesis-unmet";
  }
  return "?";
}

Verdict sing_large(const BigInt& order_x, const BigInt& out_x, const BigInt& order_xx, const BigInt& p) {
  auto xx_p = w_part(order_xx, p).first;
  if (out_x > xx_p) return Verdict::hypothesis_unmet;
  return order_x < order_xx * order_xx * order_xx ? Verdict::pass : Verdict::fail;
}

bool utakmica_check(const BigInt& order_x_p, const BigInt& out_x_p, const BigInt& order_xb_p) {
  BigInt base = 1;
  for (const BigInt* v : {&order_x_p, &out_x_p, &order_xb_p}) {
    if (*v < 1) throw std::invalid_argument("utakmica_check expects positive prime powers");
    BigInt b = prime_base(*v);
    if (b == 0) throw std::invalid_argument("utakmica_check argument " + v->str() + " is not a prime power");
    if (b == 1) continue;
    if (base != 1 && b != base) throw std::invalid_argument("utakmica_check arguments are powers of different primes");
    base = b;
  }
  BigInt rhs = out_x_p * order_xb_p;
  return order_x_p <= rhs * rhs * rhs;
}

KraljBound kralj_bound(const atlas::ClassicalType& t) {
  if (!atlas::admissible(t))
    throw std::invalid_argument(atlas::display_name(t) + " is outside the admissible range");
  const std::int64_t n = t.n;
  std::int64_t num = 0, den = 1;
  switch (t.family) {
    case atlas::Family::PSL: num = (n + 2) * (n - 3), den = 6; break;
    case atlas::Family::PSp: num = n * n - 12, den = 12; break;
    case atlas::Family::PSU: num = (n + 2) * (n - 3), den = 12; break;
    case atlas::Family::POmegaOdd: num = (n - 1) * (n - 1) - 12, den = 12; break;
    case atlas::Family::POmegaPlus:
    case atlas::Family::POmegaMinus: num = n * (n - 2) - 12, den = 12; break;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = den;
  num /= g;
  den /= g;
  if (num == 0) den = 1;

  const BigInt q = atlas::natural_q(t);
  const BigInt p = atlas::prime_power(t.q)->p;
  BigInt power = 1;
  if (num > 0) power = iroot_ceil(ipow(q, static_cast<std::uint64_t>(num)), static_cast<unsigned>(den));
  return {num, den, std::max(p, power)};
}

}  // namespace flagtrans::arith
