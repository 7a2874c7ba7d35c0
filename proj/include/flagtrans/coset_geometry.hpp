#pragma once

// Coset actions of PSL(3,3) and PSL(3,3):<sigma> and the two designs on
// 144 points built from them.
//
// Points are the right cosets Px of P = <eta, psi> (respectively N_A(P)x
// in the extension) and blocks the right cosets Ly of L = <alpha, gamma>.
// A point and a block are incident when Px and Ly meet, which happens
// exactly when x y^{-1} lies in the product set PL.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "flagtrans/design_verify.hpp"
#include "flagtrans/enumerated_group.hpp"
#include "flagtrans/gf_linear.hpp"
#include "flagtrans/incidence.hpp"
#include "flagtrans/parallel.hpp"
#include "flagtrans/perm_group.hpp"

namespace flagtrans::geometry {

/// Raised when a structural claim about the construction fails.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Right cosets Hx of a subgroup H of an enumerated group, numbered in
/// increasing order of their least element; that element is the coset's
/// representative.
template <GroupElementLike E>
class CosetSpace {
 public:
  CosetSpace() = default;
  CosetSpace(const EnumeratedGroup<E>& parent, const std::vector<E>& subgroup) {
    if (subgroup.empty() || parent.order() % subgroup.size() != 0)
      throw std::invalid_argument("subgroup order must divide the parent order");
    const std::unordered_set<E> members(subgroup.begin(), subgroup.end());
    for (const auto& a : subgroup)
      for (const auto& b : subgroup)
        if (!members.contains(a * b)) throw std::invalid_argument("element list is not closed under products");
    coset_of_.reserve(parent.order());
    for (const auto& x : parent.elements()) {
      if (coset_of_.contains(x)) continue;
      const auto label = static_cast<std::uint32_t>(reps_.size());
      reps_.push_back(x);
      for (const auto& h : subgroup) {
        E hx = h * x;
        if (!parent.contains(hx)) throw std::invalid_argument("subgroup element outside the parent group");
        coset_of_.emplace(std::move(hx), label);
      }
    }
    if (reps_.size() * subgroup.size() != parent.order()) throw std::invalid_argument("element list is not a subgroup");
  }

  std::size_t size() const { return reps_.size(); }
  const E& representative(std::size_t i) const { return reps_[i]; }
  const std::vector<E>& representatives() const { return reps_; }
  std::uint32_t coset_of(const E& x) const {
    auto it = coset_of_.find(x);
    if (it == coset_of_.end()) throw std::invalid_argument("element outside the parent group");
    return it->second;
  }
  /// The permutation Hx -> Hxg.
  Perm action(const E& g) const {
    std::vector<Point> images(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) images[i] = coset_of(reps_[i] * g);
    return Perm(std::move(images));
  }

 private:
  std::vector<E> reps_;
  std::unordered_map<E, std::uint32_t> coset_of_;
};

/// The product set HK, for membership tests.
template <GroupElementLike E>
std::unordered_set<E> product_lookup(const std::vector<E>& h, const std::vector<E>& k) {
  std::unordered_set<E> out;
  out.reserve(h.size() * k.size());
  for (const auto& a : h)
    for (const auto& b : k) out.insert(a * b);
  return out;
}

/// Hx meets Ky iff x y^{-1} lies in HK.
template <GroupElementLike E>
bool incidence(const std::unordered_set<E>& hk, const E& x, const E& y) {
  return hk.contains(x * inverse(y));
}

/// Blocks indexed by the cosets of K, each listing the incident cosets of H.
template <GroupElementLike E>
design::IncidenceStructure build_design(const CosetSpace<E>& points, const CosetSpace<E>& blocks,
                                        const std::unordered_set<E>& hk) {
  auto rows = parallel_map<design::Block>(blocks.size(), [&](std::size_t j) {
    const E y_inv = inverse(blocks.representative(j));
    design::Block blk;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (hk.contains(points.representative(i) * y_inv)) blk.push_back(static_cast<Point>(i));
    return blk;
  });
  return design::IncidenceStructure(points.size(), std::move(rows));
}

using gf::GroupElement;
using gf::ProjMatrix;

struct DoubleCosetRow {
  std::string label;          // "1", "alpha", "beta", ...
  ProjMatrix y;
  std::size_t size = 0;       // |PyP|
  std::size_t orbit_size = 0; // |PyP| / |P|
  std::vector<ProjMatrix> meet_l;      // PyP cap L
  std::vector<ProjMatrix> expected;    // the claimed intersection
  bool matches = false;
  design::TacticalParams tactical;     // (PyP points, blocks through the base point)
  design::TacticalParams expected_tactical;
  bool tactical_matches = false;
};

struct DoubleCosetReport {
  std::vector<DoubleCosetRow> rows;
  bool partition = false;  // the eight double cosets are disjoint and cover G
  bool all_match() const;
};

/// Everything the constructions produce. Matrix-side data lives in the
/// EnumeratedGroups; the permutation side acts on 144 shared point labels.
struct GeometryBundle {
  // PSL(3,3)
  EnumeratedGroup<ProjMatrix> g_mat;
  std::vector<ProjMatrix> p_mat, l_mat, eta_mat, psi_mat;
  CosetSpace<ProjMatrix> points_g, blocks_g;
  PermGroup g, p, l, eta, psi, psi_normalizer;
  std::vector<Perm> g_perm_of;  // aligned with g_mat.elements()
  design::IncidenceStructure d;
  /// Label of the coset P itself.
  Point base = 0;

  // PSL(3,3):<sigma>
  bool has_extension = false;
  EnumeratedGroup<GroupElement> a_mat;
  std::vector<GroupElement> nap_mat, l_ext;
  GroupElement normalizing_involution;
  /// Whether the bare polarity already normalizes P.
  bool sigma_normalizes_p = false;
  CosetSpace<GroupElement> points_a, blocks_a;
  PermGroup a, nap;
  Perm involution_perm;
  design::IncidenceStructure d_prime;
  design::IncidenceStructure d_twisted;  // image of d under involution_perm

  const Perm& perm_of(const ProjMatrix& m) const;
};

/// Builds G, P, L, the coset spaces and the lambda = 3 design. Throws
/// InvariantViolation naming the first structural check that fails.
GeometryBundle build_psl33();
/// Adds A, N_A(P) and the lambda = 6 design to a bundle from build_psl33.
void build_extension(GeometryBundle& bundle);
/// Both steps, computed once per process.
const GeometryBundle& standard_bundle();

/// Named elements of G.
ProjMatrix beta();  // alpha^gamma

/// PyP cap L for the eight double coset representatives 1, alpha, beta,
/// alpha beta, gamma, gamma^-1, gamma^(alpha beta) and its inverse, whether
/// those double cosets partition G, and the tactical parameters of each
/// P-orbit against the blocks through the base point.
DoubleCosetReport double_coset_audit(const GeometryBundle& bundle);

/// Blocks of D' equal the union of D and its image under the extension.
bool extension_is_union(const GeometryBundle& bundle);
/// Sizes of the G-orbits on the blocks of D', descending.
std::vector<std::size_t> block_orbit_sizes(const PermGroup& g, const design::IncidenceStructure& d);

}  // namespace flagtrans::geometry
