#include "flagtrans/group_atlas.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace flagtrans::atlas {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

BigInt factorial(unsigned l) {
  BigInt r = 1;
  for (unsigned i = 2; i <= l; ++i) r *= i;
  return r;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// gcd(4, q^m + sign) computed without overflow.
std::uint64_t gcd4(std::uint64_t q, unsigned m, int sign) {
  BigInt v = ipow(BigInt(q), m) + sign;
  return static_cast<std::uint64_t>(gcd(v, BigInt(4)));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::PSL: return "PSL";
    case Family::PSp: return "PSp";
    case Family::PSU: return "PSU";
    case Family::POmegaOdd: return "POmega";
    case Family::POmegaPlus: return "POmega+";
    case Family::POmegaMinus: return "POmega-";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  static const std::map<std::string, Family> table{
      {"psl", Family::PSL},           {"psp", Family::PSp},
      {"psu", Family::PSU},           {"pomega", Family::POmegaOdd},
      {"pomega+", Family::POmegaPlus}, {"pomega-", Family::POmegaMinus},
  };
  auto it = table.find(lower(name));
  if (it == table.end()) throw std::invalid_argument("unknown classical family '" + std::string(name) + "'");
  return it->second;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return PrimePower{q, 1};
  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, f};
}

void validate(const ClassicalType& t) {
  auto pp = prime_power(t.q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(t.q) + " is not a prime power");
  if (t.n < 2) throw std::invalid_argument("dimension must be at least 2");
  switch (t.family) {
    case Family::PSL:
    case Family::PSU:
      break;
    case Family::PSp:
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      if (t.n % 2) throw std::invalid_argument(std::string(family_name(t.family)) + " needs even dimension");
      break;
    case Family::POmegaOdd:
      if (t.n % 2 == 0 || t.n < 3) throw std::invalid_argument("odd-dimensional orthogonal group needs odd n >= 3");
      if (pp->p == 2) throw std::invalid_argument("odd-dimensional orthogonal group needs odd q");
      break;
  }
}

bool admissible(const ClassicalType& t) {
  try {
    validate(t);
  } catch (const std::invalid_argument&) {
    return false;
  }
  switch (t.family) {
    case Family::PSL: return t.n >= 3;
    case Family::PSU: return t.n >= 3 && !(t.n == 3 && t.q == 2);
    case Family::PSp: return t.n >= 4;
    case Family::POmegaOdd: return t.n >= 5;
    case Family::POmegaPlus:
    case Family::POmegaMinus: return t.n >= 6;
  }
  return false;
}

BigInt simple_order(const ClassicalType& t) {
  validate(t);
  const BigInt q = t.q;
  const unsigned n = t.n;
  BigInt num = 1;
  switch (t.family) {
    case Family::PSL: {
      num = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) num *= ipow(q, i) - 1;
      return num / gcd_u(n, t.q - 1);
    }
    case Family::PSU: {
      num = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) num *= ipow(q, i) - (i % 2 ? -1 : 1);
      return num / gcd_u(n, t.q + 1);
    }
    case Family::PSp: {
      unsigned m = n / 2;
      num = ipow(q, m * m);
      for (unsigned i = 1; i <= m; ++i) num *= ipow(q, 2 * i) - 1;
      return num / gcd_u(2, t.q - 1);
    }
    case Family::POmegaOdd: {
      unsigned m = (n - 1) / 2;
      num = ipow(q, m * m);
      for (unsigned i = 1; i <= m; ++i) num *= ipow(q, 2 * i) - 1;
      return num / 2;
    }
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
      unsigned m = n / 2;
      int sign = t.family == Family::POmegaPlus ? -1 : 1;
      num = ipow(q, m * (m - 1)) * (ipow(q, m) + sign);
      for (unsigned i = 1; i < m; ++i) num *= ipow(q, 2 * i) - 1;
      return num / gcd4(t.q, m, sign);
    }
  }
  throw std::invalid_argument("unknown family");
}

BigInt out_order(const ClassicalType& t) {
  validate(t);
  const auto pp = *prime_power(t.q);
  const std::uint64_t f = pp.f;
  switch (t.family) {
    case Family::PSL:
      if (t.n == 2) return gcd_u(2, t.q - 1) * f;
      return 2 * gcd_u(t.n, t.q - 1) * f;
    case Family::PSU:
      return 2 * gcd_u(t.n, t.q + 1) * f;
    case Family::PSp:
      // PSp_4(2^f) has an extra graph automorphism.
      if (t.n == 4 && pp.p == 2) return 2 * f;
      return gcd_u(2, t.q - 1) * f;
    case Family::POmegaOdd:
      return 2 * f;
    case Family::POmegaPlus: {
      std::uint64_t d = gcd4(t.q, t.n / 2, -1);
      return (t.n == 8 ? 6 : 2) * d * f;
    }
    case Family::POmegaMinus:
      return 2 * gcd4(t.q, t.n / 2, 1) * f;
  }
  throw std::invalid_argument("unknown family");
}

std::uint64_t natural_q(const ClassicalType& t) { return t.family == Family::PSU ? t.q * t.q : t.q; }

unsigned primitive_exponent(const ClassicalType& t) {
  switch (t.family) {
    case Family::PSL:
    case Family::PSp:
    case Family::POmegaMinus: return t.n;
    case Family::PSU: return t.n % 2 ? t.n : t.n - 1;
    case Family::POmegaOdd: return t.n - 1;
    case Family::POmegaPlus: return t.n - 2;
  }
  return t.n;
}

std::string display_name(const ClassicalType& t) {
  std::string fam(family_name(t.family));
  std::string sign;
  if (!fam.empty() && (fam.back() == '+' || fam.back() == '-')) {
    sign = fam.substr(fam.size() - 1);
    fam.pop_back();
  }
  return fam + sign + "_" + std::to_string(t.n) + "(" + std::to_string(t.q) + ")";
}

BigInt named_order(std::string_view name) {
  static const std::map<std::string, BigInt> table{
      {"m11", BigInt(7920)},
      {"j2", BigInt(604800)},
      {"sz(8)", BigInt(29120)},
      {"psl3(4)", BigInt(20160)},
      {"psu4(2)", BigInt(25920)},
      {"psp6(2)", BigInt(1451520)},
      {"pomega8+(2)", BigInt(174182400)},
      {"g2(3)", BigInt(4245696)},
      {"psl2(13)", BigInt(1092)},
      {"psl2(19)", BigInt(3420)},
  };
  std::string key = lower(name);
  key.erase(std::remove(key.begin(), key.end(), '_'), key.end());
  if (auto it = table.find(key); it != table.end()) return it->second;
  if (key.size() >= 2 && (key[0] == 'a' || key[0] == 's') &&
      std::all_of(key.begin() + 1, key.end(), [](unsigned char c) { return std::isdigit(c); }) && key.size() <= 4) {
    unsigned l = static_cast<unsigned>(std::stoul(key.substr(1)));
    if (l >= 1) {
      BigInt fact = factorial(l);
      if (key[0] == 's') return fact;
      if (l >= 2) return fact / 2;
    }
  }
  throw std::invalid_argument("unknown group name '" + std::string(name) + "'");
}

}  // namespace flagtrans::atlas
