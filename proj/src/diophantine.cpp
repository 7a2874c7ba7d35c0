#include "flagtrans/diophantine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "flagtrans/arith_sieve.hpp"
#include "flagtrans/parallel.hpp"

namespace flagtrans::dioph {

namespace {

using atlas::Family;

Assignment assign(std::initializer_list<std::pair<const char*, BigInt>> vars) {
  Assignment a;
  for (const auto& [name, value] : vars) a.emplace_back(name, value);
  return a;
}

// Runs fn over every prime power q <= q_max in parallel; fn appends the
// solutions for its q. Results come back in q order, then get sorted.
std::vector<Assignment> scan_prime_powers(std::uint64_t q_max,
                                          const std::function<void(const BigInt&, std::vector<Assignment>&)>& fn) {
  const auto qs = prime_powers_up_to(q_max);
  auto per_q = parallel_map<std::vector<Assignment>>(qs.size(), [&](std::size_t i) {
    std::vector<Assignment> out;
    fn(BigInt(qs[i]), out);
    return out;
  });
  std::vector<Assignment> all;
  for (auto& v : per_q) all.insert(all.end(), v.begin(), v.end());
  return all;
}

// (q^n - 1)/(q - 1)
BigInt repunit(const BigInt& q, unsigned n) { return (ipow(q, n) - 1) / (q - 1); }

}  // namespace

bool is_square(const BigInt& m) {
  if (m < 0) return false;
  BigInt r = isqrt(m);
  return r * r == m;
}

std::string family_token(FamilyId id) { return "F" + std::to_string(static_cast<int>(id) + 1); }

FamilyId parse_family_id(const std::string& token) {
  for (auto id : all_families())
    if (family_token(id) == token || "f" + family_token(id).substr(1) == token) return id;
  throw std::invalid_argument("unknown equation family '" + token + "'");
}

std::vector<FamilyId> all_families() {
  return {FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4,
          FamilyId::F5, FamilyId::F6, FamilyId::F7, FamilyId::F8};
}

std::string family_equation(FamilyId id) {
  switch (id) {
    case FamilyId::F1: return "k^2 = q + 1, q = 2^f";
    case FamilyId::F2: return "z^2 = 2^f - eps, f >= 3 odd, eps = +-1";
    case FamilyId::F3: return "q^2 + q + 1 = z^2";
    case FamilyId::F4: return "(q^n - 1)/(q - 1) = k^2, n >= 4";
    case FamilyId::F5: return "q^4 + q^3 + q^2 + q + 1 = z^2";
    case FamilyId::F6: return "q^2 = z^2 + 1, z > 0";
    case FamilyId::F7: return "q^(n/2) - 1 = z^2, n >= 4 even";
    case FamilyId::F8: return "q^2 - q + 1 = z^2";
  }
  return "";
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    for (std::uint64_t q = p; q <= limit; q *= p) {
      out.push_back(q);
      if (q > limit / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScanResult scan(FamilyId id, const Bounds& b) {
  ScanResult r;
  r.family = id;
  r.bounds = b;
  auto& sol = r.solutions;
  auto& exp = r.expected;
  auto has_q = [&](std::uint64_t q) { return q <= b.q_max && atlas::prime_power(q).has_value(); };

  switch (id) {
    case FamilyId::F1:
      for (unsigned f = 1; f <= b.f_max; ++f) {
        BigInt q = ipow(BigInt(2), f);
        if (is_square(q + 1)) sol.push_back(assign({{"k", isqrt(q + 1)}, {"q", q}}));
      }
      if (b.f_max >= 3) exp.push_back(assign({{"k", 3}, {"q", 8}}));
      break;
    case FamilyId::F2:
      for (unsigned f = 3; f <= b.f_max; f += 2)
        for (int eps : {-1, 1}) {
          BigInt v = ipow(BigInt(2), f) - eps;
          if (is_square(v)) sol.push_back(assign({{"eps", eps}, {"f", f}, {"z", isqrt(v)}}));
        }
      if (b.f_max >= 3) exp.push_back(assign({{"eps", -1}, {"f", 3}, {"z", 3}}));
      break;
    case FamilyId::F3:
      sol = scan_prime_powers(b.q_max, [](const BigInt& q, auto& out) {
        BigInt v = q * q + q + 1;
        if (is_square(v)) out.push_back(assign({{"q", q}, {"z", isqrt(v)}}));
      });
      break;
    case FamilyId::F4:
      sol = scan_prime_powers(b.q_max, [&](const BigInt& q, auto& out) {
        for (unsigned n = 4; n <= b.n_max; ++n) {
          BigInt v = repunit(q, n);
          if (is_square(v)) out.push_back(assign({{"n", n}, {"q", q}, {"k", isqrt(v)}}));
        }
      });
      if (b.n_max >= 4 && has_q(7)) exp.push_back(assign({{"n", 4}, {"q", 7}, {"k", 20}}));
      if (b.n_max >= 5 && has_q(3)) exp.push_back(assign({{"n", 5}, {"q", 3}, {"k", 11}}));
      break;
    case FamilyId::F5:
      sol = scan_prime_powers(b.q_max, [](const BigInt& q, auto& out) {
        BigInt v = repunit(q, 5);
        if (is_square(v)) out.push_back(assign({{"q", q}, {"z", isqrt(v)}}));
      });
      if (has_q(3)) exp.push_back(assign({{"q", 3}, {"z", 11}}));
      break;
    case FamilyId::F6:
      sol = scan_prime_powers(b.q_max, [](const BigInt& q, auto& out) {
        BigInt v = q * q - 1;
        if (v > 0 && is_square(v)) out.push_back(assign({{"q", q}, {"z", isqrt(v)}}));
      });
      break;
    case FamilyId::F7:
      sol = scan_prime_powers(b.q_max, [&](const BigInt& q, auto& out) {
        for (unsigned n = 4; n <= b.n_max; n += 2) {
          BigInt v = ipow(q, n / 2) - 1;
          if (is_square(v)) out.push_back(assign({{"n", n}, {"q", q}, {"z", isqrt(v)}}));
        }
      });
      break;
    case FamilyId::F8:
      sol = scan_prime_powers(b.q_max, [](const BigInt& q, auto& out) {
        BigInt v = q * q - q + 1;
        if (is_square(v)) out.push_back(assign({{"q", q}, {"z", isqrt(v)}}));
      });
      break;
  }
  std::sort(sol.begin(), sol.end());
  std::sort(exp.begin(), exp.end());
  return r;
}

std::vector<std::pair<BigInt, BigInt>> b_factorization(const BigInt& b) {
  if (b < 6) throw std::invalid_argument("b_factorization needs b >= 6");
  std::vector<std::pair<BigInt, BigInt>> out;
  const BigInt limit = isqrt(b);
  for (BigInt k = 2; k <= limit; ++k) {
    BigInt kk = k * (k + 1);
    if (b % kk != 0) continue;
    BigInt lambda = b / kk;
    if (lambda >= 2 && k % lambda == 0) out.emplace_back(lambda, k);
  }
  return out;
}

const std::vector<SignprimeRow>& signprime_rows() {
  auto row = [](unsigned idx, Family fam, unsigned n, std::uint64_t q, unsigned e, unsigned out, unsigned phi,
                std::vector<std::string> ys, std::optional<std::uint64_t> s) {
    return SignprimeRow{idx, {fam, n, q}, e, BigInt(out), BigInt(phi), std::move(ys), s};
  };
  static const std::vector<SignprimeRow> rows{
      row(1, Family::PSL, 5, 3, 5, 2, 121, {"M11"}, 13),
      row(2, Family::PSL, 4, 2, 4, 2, 5, {"A7"}, std::nullopt),
      row(3, Family::PSL, 4, 7, 4, 2, 25, {"PSU4(2)"}, 19),
      row(4, Family::PSp, 12, 2, 12, 1, 13, {"S14"}, 31),
      row(5, Family::PSp, 6, 5, 6, 2, 7, {"J2"}, 31),
      row(6, Family::PSp, 4, 7, 4, 2, 25, {"A7"}, std::nullopt),
      row(7, Family::PSU, 4, 3, 3, 8, 5, {"A7", "PSL3(4)"}, std::nullopt),
      row(8, Family::POmegaMinus, 18, 2, 12, 2, 19, {"A20"}, 257),
      row(9, Family::POmegaMinus, 12, 2, 12, 2, 13, {"A13"}, 31),
      row(10, Family::POmegaMinus, 10, 2, 10, 2, 11, {"A12"}, 17),
      row(11, Family::POmegaOdd, 7, 3, 6, 2, 7, {"PSp6(2)", "S9"}, 13),
      row(12, Family::POmegaOdd, 7, 5, 6, 2, 7, {"PSp6(2)"}, 31),
      row(13, Family::POmegaPlus, 14, 2, 12, 2, 13, {"A16"}, 127),
      row(14, Family::POmegaPlus, 8, 3, 6, 24, 7, {"POmega8+(2)"}, 13),
      row(15, Family::POmegaPlus, 8, 5, 6, 24, 7, {"POmega8+(2)"}, 31),
  };
  return rows;
}

std::vector<SignprimeReport> signprime_audit() {
  std::vector<SignprimeReport> reports;
  for (const auto& row : signprime_rows()) {
    SignprimeReport r;
    r.row = row;
    r.order_x = atlas::simple_order(row.x);
    r.out_computed = atlas::out_order(row.x);
    const auto pp = *atlas::prime_power(atlas::natural_q(row.x));
    r.p = static_cast<unsigned>(pp.p);
    r.f = pp.f;
    r.phi_computed = arith::primitive_part(pp.p, row.e * pp.f).value;
    r.e_definition = atlas::primitive_exponent(row.x);
    r.phi_definition = arith::primitive_part(pp.p, r.e_definition * pp.f).value;
    for (const auto& y : row.y_names) r.y_orders.push_back(atlas::named_order(y));
    r.phi_matches = r.phi_computed == row.phi_listed;
    r.out_matches = r.out_computed == row.out_listed;

    auto divides_some_y = [&](const BigInt& u) {
      return std::any_of(r.y_orders.begin(), r.y_orders.end(), [&](const BigInt& y) { return y % u == 0; });
    };
    for (const auto& fac : arith::factorize(r.order_x)) {
      if (fac.multiplicity != 1 || r.phi_computed % fac.prime == 0 || divides_some_y(fac.prime)) continue;
      r.largest_candidate = fac.prime;  // factors ascend, so the last one wins
    }

    if (row.s) {
      const BigInt s = *row.s;
      r.s_divides_x = r.order_x % s == 0;
      r.s_squared_not_dividing = r.order_x % (s * s) != 0;
      r.s_not_dividing_y = !divides_some_y(s);
      r.s_not_dividing_phi = r.phi_computed % s != 0;
      r.pass = r.s_divides_x && r.s_squared_not_dividing && r.s_not_dividing_y && r.s_not_dividing_phi;
    } else {
      r.pass = r.phi_matches;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace flagtrans::dioph
