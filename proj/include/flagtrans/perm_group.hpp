#pragma once

// Small-scale permutation group engine. Every group is fully enumerated;
// the targets here have order at most a few tens of thousands.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "flagtrans/enumerated_group.hpp"

namespace flagtrans {

using Point = std::uint32_t;

/// Permutation of {0, ..., n-1}. Composition is left to right:
/// (a * b)[i] = b[a[i]], matching right actions x -> x^g.
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Perm(std::vector<Point> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }
  bool is_identity() const;
  /// lcm of the cycle lengths.
  std::size_t order() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend Perm inverse(const Perm& a);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

/// g^{-1} h g
Perm conjugate(const Perm& h, const Perm& g);

}  // namespace flagtrans

template <>
struct std::hash<flagtrans::Perm> {
  std::size_t operator()(const flagtrans::Perm& p) const noexcept {
    std::size_t seed = p.degree();
    for (auto x : p.images()) seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

namespace flagtrans {

class PermGroup : public EnumeratedGroup<Perm> {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, EnumeratedGroup<Perm> group) : EnumeratedGroup<Perm>(std::move(group)), degree_(degree) {}

  std::size_t degree() const { return degree_; }
  Perm identity() const { return Perm::identity(degree_); }

 private:
  std::size_t degree_ = 0;
};

using ElementSet = std::vector<Perm>;
using Orbit = std::vector<Point>;

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Throws ClosureOverflow past cap and std::invalid_argument on mixed degrees.
PermGroup closure(std::size_t degree, std::vector<Perm> gens, std::size_t cap = kDefaultClosureCap);
/// Subgroup given by an element list that is already closed.
PermGroup subgroup_from_elements(std::size_t degree, std::vector<Perm> elements);

/// Orbits of the group generated by perms. Each orbit sorted, orbits
/// ordered by their minimum.
std::vector<Orbit> orbits(std::span<const Perm> perms, std::size_t degree);
inline std::vector<Orbit> orbits(const PermGroup& g) { return orbits(g.generators(), g.degree()); }
Orbit orbit_of(std::span<const Perm> perms, std::size_t degree, Point x);
bool is_transitive(const PermGroup& g);

PermGroup stabilizer(const PermGroup& g, Point x);
/// Setwise stabilizer of a point set.
PermGroup set_stabilizer(const PermGroup& g, std::span<const Point> set);

/// {g in G : g^{-1} H g = H}. Throws std::invalid_argument if H is not in G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

ElementSet double_coset(std::span<const Perm> h, const Perm& g, std::span<const Perm> k);
ElementSet product_set(std::span<const Perm> h, std::span<const Perm> k);

struct PrimitivityResult {
  bool primitive = false;
  /// Nontrivial block system when imprimitive; each block sorted, blocks
  /// ordered by minimum.
  std::vector<std::vector<Point>> block_system;
};

/// Throws std::invalid_argument on intransitive input.
PrimitivityResult is_primitive(const PermGroup& g);
/// Finest block system whose blocks contain both a and b.
std::vector<std::vector<Point>> minimal_block_system(std::span<const Perm> gens, std::size_t degree, Point a, Point b);

/// True iff G = K:H with every nonidentity h in H fixing only the identity
/// of K under conjugation. Throws std::invalid_argument unless K is normal
/// in G, K meets H trivially and |K||H| = |G|.
bool recognize_frobenius(const PermGroup& g, const PermGroup& k, const PermGroup& h);

/// |G| = 12 with exactly 3 involutions and 8 elements of order 3.
bool recognize_a4(const PermGroup& g);

}  // namespace flagtrans
