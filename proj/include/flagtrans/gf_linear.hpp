#pragma once

// Exact arithmetic over GF(p) and 3x3 projective matrices. Houses the
// generators of the order-39 Frobenius subgroup P = <eta, psi> and of
// L = <alpha, gamma> ~ A4 in PSL(3,3), and the polarity of the conic
// XZ - Y^2 = 0.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flagtrans::gf {

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FieldElem {
 public:
  FieldElem(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  FieldElem operator+(FieldElem o) const;
  FieldElem operator-(FieldElem o) const;
  FieldElem operator*(FieldElem o) const;
  FieldElem operator-() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  FieldElem inverse() const;
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(FieldElem, FieldElem) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Invertible 3x3 matrix over GF(p) modulo scalars. Always stored in
/// canonical form: the first nonzero entry in row-major order is 1.
class ProjMatrix {
 public:
  using Entries = std::array<std::uint32_t, 9>;

  /// The identity over GF(3).
  ProjMatrix() : ProjMatrix(Entries{1, 0, 0, 0, 1, 0, 0, 0, 1}, 3, false) {}

  /// Reduces the entries mod p (negative literals allowed) and
  /// canonicalizes. Throws SingularMatrix when det = 0.
  static ProjMatrix from_entries(std::span<const std::int64_t, 9> entries, std::uint32_t p = 3);
  static ProjMatrix from_entries(std::initializer_list<std::int64_t> entries, std::uint32_t p = 3);
  static ProjMatrix identity(std::uint32_t p = 3);

  const Entries& entries() const { return entries_; }
  std::uint32_t modulus() const { return modulus_; }
  FieldElem at(std::size_t row, std::size_t col) const { return {entries_[3 * row + col], modulus_}; }
  bool is_identity() const;

  /// Row-major canonical entries as base-p digits, e.g. "110011110".
  std::string serialize() const;
  static ProjMatrix parse(std::string_view digits, std::uint32_t p = 3);

  std::uint64_t code() const;

  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
  friend auto operator<=>(const ProjMatrix& a, const ProjMatrix& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  friend ProjMatrix mat_mul(const ProjMatrix&, const ProjMatrix&);
  friend ProjMatrix mat_inverse(const ProjMatrix&);
  friend ProjMatrix transpose(const ProjMatrix&);
  ProjMatrix(const Entries& e, std::uint32_t p, bool canonicalize);

  Entries entries_{};
  std::uint32_t modulus_ = 3;
};

ProjMatrix mat_mul(const ProjMatrix& a, const ProjMatrix& b);
ProjMatrix mat_inverse(const ProjMatrix& a);
ProjMatrix transpose(const ProjMatrix& a);
/// Cofactor-expansion determinant of the canonical representative.
FieldElem det(const ProjMatrix& a);

inline ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b) { return mat_mul(a, b); }
inline ProjMatrix inverse(const ProjMatrix& a) { return mat_inverse(a); }

/// Gram matrix of the polarized form of XZ - Y^2, i.e. [[0,0,1],[0,-2,0],[1,0,0]].
ProjMatrix polarity_gram(std::uint32_t p = 3);

/// g -> M g^{-T} M^{-1}, the automorphism induced by the polarity of the
/// conic XZ - Y^2 = 0. Requires p odd.
ProjMatrix polarity_apply(const ProjMatrix& g);

/// Element of PSL(3,p):<sigma>: (mat, twist) with
/// (g,e)(h,d) = (g * sigma^e(h), e xor d).
struct GroupElement {
  ProjMatrix mat = ProjMatrix::identity();
  bool twist = false;

  static GroupElement identity(std::uint32_t p = 3) { return {ProjMatrix::identity(p), false}; }
  static GroupElement sigma(std::uint32_t p = 3) { return {ProjMatrix::identity(p), true}; }

  bool is_identity() const { return !twist && mat.is_identity(); }
  /// Matrix digits followed by ":0" or ":1".
  std::string serialize() const;
  static GroupElement parse(std::string_view text, std::uint32_t p = 3);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Untwisted elements sort first.
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.twist <=> b.twist; c != 0) return c;
    return a.mat <=> b.mat;
  }
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// Point of PG(2,p): nonzero vector, first nonzero coordinate 1.
class ProjPoint {
 public:
  ProjPoint(std::array<std::int64_t, 3> coords, std::uint32_t p = 3);
  const std::array<std::uint32_t, 3>& coords() const { return coords_; }
  std::uint32_t modulus() const { return modulus_; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::array<std::uint32_t, 3> coords_{};
  std::uint32_t modulus_ = 3;
};

/// All p^2 + p + 1 points in lexicographic order.
std::vector<ProjPoint> all_points(std::uint32_t p = 3);
/// Row-vector action v -> v * g.
ProjPoint act(const ProjPoint& x, const ProjMatrix& g);
/// Value of XZ - Y^2 at a representative (zero-ness is projective).
FieldElem conic_form(const ProjPoint& x);

namespace generators {
ProjMatrix eta();
ProjMatrix psi();
ProjMatrix alpha();
ProjMatrix gamma();
}  // namespace generators

}  // namespace flagtrans::gf

template <>
struct std::hash<flagtrans::gf::ProjMatrix> {
  std::size_t operator()(const flagtrans::gf::ProjMatrix& m) const noexcept { return std::hash<std::uint64_t>{}(m.code()); }
};

template <>
struct std::hash<flagtrans::gf::GroupElement> {
  std::size_t operator()(const flagtrans::gf::GroupElement& g) const noexcept {
    return std::hash<std::uint64_t>{}(g.mat.code() * 2 + (g.twist ? 1 : 0));
  }
};
