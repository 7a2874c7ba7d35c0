#pragma once

// Orders of the finite simple classical groups, their outer automorphism
// groups, and a small table of named groups.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "flagtrans/bigint.hpp"

namespace flagtrans::atlas {

enum class Family { PSL, PSp, PSU, POmegaOdd, POmegaPlus, POmegaMinus };

std::string_view family_name(Family f);
/// Accepts PSL, PSp, PSU, POmega, POmega+, POmega- (case-insensitive).
Family parse_family(std::string_view name);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned f = 0;
};

/// Some p^f with f >= 1, or nullopt.
std::optional<PrimePower> prime_power(std::uint64_t q);

/// A classical group by family, dimension n and field size q. For PSU the
/// stored q is the size q0 of the field of definition of the hermitian
/// form, i.e. PSU_n(q0) lives inside PGL_n(q0^2).
struct ClassicalType {
  Family family = Family::PSL;
  unsigned n = 0;
  std::uint64_t q = 0;

  friend bool operator==(const ClassicalType&, const ClassicalType&) = default;
};

/// Throws std::invalid_argument unless q is a prime power and n fits the
/// family's basic shape (n >= 2; even for PSp and the plus/minus orthogonal
/// groups; odd with q odd for the odd-dimensional orthogonal groups).
void validate(const ClassicalType& t);

/// Remark-style restrictions that rule out small isomorphisms and
/// non-simple cases: PSL n >= 3; PSU n >= 3 with (n, q0) != (3, 2);
/// PSp n >= 4; odd orthogonal n >= 5; plus/minus orthogonal n >= 6.
bool admissible(const ClassicalType& t);

BigInt simple_order(const ClassicalType& t);
BigInt out_order(const ClassicalType& t);

/// The q of the theory: q0^2 for unitary groups, q otherwise.
std::uint64_t natural_q(const ClassicalType& t);

/// e with Phi*_{ef}(p) dividing |X|: n for PSL, PSp, minus-type and odd n
/// unitary; n-1 for odd orthogonal and even n unitary; n-2 for plus type.
unsigned primitive_exponent(const ClassicalType& t);

/// Human readable, e.g. "PSL_3(3)", "POmega+_8(2)".
std::string display_name(const ClassicalType& t);

/// Order of a named group: M11, J2, Sz(8), PSL3(4), PSU4(2), PSp6(2),
/// POmega8+(2), G2(3), PSL2(13), PSL2(19), A<l> and S<l> for l >= 1.
/// Throws std::invalid_argument for anything else.
BigInt named_order(std::string_view name);

}  // namespace flagtrans::atlas
