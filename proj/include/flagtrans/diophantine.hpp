#pragma once

// Bounded exhaustive scans of the square equations that come up when
// eliminating candidate groups, plus the significant-prime table audit.
// A scan certifies its equation only within the bounds it reports.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagtrans/bigint.hpp"
#include "flagtrans/group_atlas.hpp"

namespace flagtrans::dioph {

bool is_square(const BigInt& m);

enum class FamilyId { F1, F2, F3, F4, F5, F6, F7, F8 };

std::string family_token(FamilyId id);
FamilyId parse_family_id(const std::string& token);
std::vector<FamilyId> all_families();
/// The equation in words, e.g. "k^2 = 2^f + 1".
std::string family_equation(FamilyId id);

struct Bounds {
  /// Prime powers q <= q_max.
  std::uint64_t q_max = 10000;
  /// Dimensions n <= n_max.
  unsigned n_max = 20;
  /// Exponents f <= f_max.
  unsigned f_max = 40;
};

/// Ordered (name, value) assignment; names are fixed per family.
using Assignment = std::vector<std::pair<std::string, BigInt>>;

struct ScanResult {
  FamilyId family = FamilyId::F1;
  Bounds bounds;
  std::vector<Assignment> solutions;
  /// Exceptional solutions known to exist within the same bounds.
  std::vector<Assignment> expected;
  bool matches_expected() const { return solutions == expected; }
};

/// Prime powers in [2, limit], ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

ScanResult scan(FamilyId id, const Bounds& bounds = {});

/// All (lambda, k) with b = lambda k (k+1), lambda | k and lambda >= 2,
/// for k from 2 to floor(sqrt(b)), in increasing k.
std::vector<std::pair<BigInt, BigInt>> b_factorization(const BigInt& b);

struct SignprimeRow {
  unsigned index = 0;  // 1-based row number
  atlas::ClassicalType x;
  unsigned e = 0;  // from the table
  BigInt out_listed;
  BigInt phi_listed;
  std::vector<std::string> y_names;
  std::optional<std::uint64_t> s;
};

/// The fifteen admissible pairs with their recorded data.
const std::vector<SignprimeRow>& signprime_rows();

struct SignprimeReport {
  SignprimeRow row;
  BigInt order_x;
  BigInt out_computed;
  unsigned p = 0, f = 0;  // natural q = p^f
  BigInt phi_computed;    // Phi*_{ef}(p) with the listed e
  unsigned e_definition = 0;
  BigInt phi_definition;  // Phi*_{ef}(p) with e from the family rule
  std::vector<BigInt> y_orders;
  bool phi_matches = false;
  bool out_matches = false;
  // Only meaningful when s is recorded.
  bool s_divides_x = false;
  bool s_squared_not_dividing = false;
  bool s_not_dividing_y = false;
  bool s_not_dividing_phi = false;
  /// The largest prime u with u || |X|, u not dividing Phi or any |Y|.
  std::optional<BigInt> largest_candidate;
  /// Gating verdict: all four s-checks for rows with s, listed Phi for the rest.
  bool pass = false;
};

std::vector<SignprimeReport> signprime_audit();

}  // namespace flagtrans::dioph
