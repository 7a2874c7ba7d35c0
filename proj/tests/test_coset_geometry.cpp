#include <doctest.h>

#include <set>

#include "flagtrans/coset_geometry.hpp"

using namespace flagtrans;
using namespace flagtrans::geometry;
using gf::ProjMatrix;
using namespace gf::generators;

TEST_CASE("coset spaces of a small permutation group") {
  auto s4 = EnumeratedGroup<Perm>::generate({Perm({1, 2, 3, 0}), Perm({1, 0, 2, 3})}, Perm::identity(4), 100);
  std::vector<Perm> h;
  for (const auto& x : s4.elements())
    if (x[0] == 0) h.push_back(x);
  CosetSpace<Perm> cs(s4, h);
  CHECK(cs.size() == 4);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    // representative is the least element of its coset
    for (const auto& y : h) CHECK_FALSE(y * cs.representative(i) < cs.representative(i));
  }
  std::set<Point> moved;
  for (const auto& g : s4.elements()) moved.insert(cs.action(g)[0]);
  CHECK(moved.size() == 4);
  std::vector<Perm> not_sub{Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})};
  CHECK_THROWS(CosetSpace<Perm>(s4, not_sub));
}

TEST_CASE("degenerate geometry: one point, one block") {
  auto g = EnumeratedGroup<Perm>::generate({Perm({1, 2, 0})}, Perm::identity(3), 10);
  CosetSpace<Perm> pts(g, g.elements()), blks(g, g.elements());
  auto hk = product_lookup(g.elements(), g.elements());
  auto d = build_design(pts, blks, hk);
  CHECK(d.v() == 1);
  CHECK(d.b() == 1);
  CHECK(d.block(0) == design::Block{0});
  CHECK(incidence(hk, Perm::identity(3), Perm::identity(3)));
}

TEST_CASE("PSL(3,3) coset geometry") {
  const auto& b = standard_bundle();
  CHECK(b.g_mat.order() == 5616);
  CHECK(b.points_g.size() == 144);
  CHECK(b.blocks_g.size() == 468);
  CHECK(b.points_g.coset_of(ProjMatrix::identity()) == b.base);
  auto pl = product_lookup(b.p_mat, b.l_mat);
  CHECK(incidence(pl, ProjMatrix::identity(), ProjMatrix::identity()));
  // every generator action commutes with the coset labelling
  for (const auto& m : {eta(), psi(), alpha(), gamma()}) {
    const Perm& p = b.perm_of(m);
    for (std::size_t i = 0; i < 144; ++i)
      CHECK(p[i] == b.points_g.coset_of(b.points_g.representative(i) * m));
  }
  // incidence by explicit coset intersection agrees with the product-set test
  for (std::size_t j = 0; j < 468; j += 37) {
    std::set<ProjMatrix> block_coset;
    for (const auto& l : b.l_mat) block_coset.insert(l * b.blocks_g.representative(j));
    std::vector<Point> direct;
    for (std::size_t i = 0; i < 144; ++i) {
      bool meet = false;
      for (const auto& p : b.p_mat) meet = meet || block_coset.contains(p * b.points_g.representative(i));
      if (meet) direct.push_back(static_cast<Point>(i));
    }
    CHECK(std::find(b.d.blocks().begin(), b.d.blocks().end(), direct) != b.d.blocks().end());
  }
}

TEST_CASE("double coset intersections with L") {
  const auto& b = standard_bundle();
  auto report = double_coset_audit(b);
  CHECK(report.partition);
  REQUIRE(report.rows.size() == 8);
  std::size_t points = 0;
  for (const auto& row : report.rows) {
    CAPTURE(row.label);
    CHECK(row.matches);
    CHECK(row.tactical_matches);
    points += row.orbit_size;
  }
  CHECK(points == 144);
  CHECK(report.rows[1].meet_l.size() == 3);  // alpha
  CHECK(report.rows[4].meet_l.size() == 1);  // gamma
  CHECK(report.rows[1].size == 39 * 39);
  CHECK(report.all_match());
}

TEST_CASE("the extension by a polarity") {
  const auto& b = standard_bundle();
  REQUIRE(b.has_extension);
  CHECK(b.a_mat.order() == 11232);
  CHECK(b.nap_mat.size() == 78);
  CHECK(b.nap.order() == 78);
  CHECK(b.a.order() == 11232);
  CHECK(b.normalizing_involution.twist);
  CHECK((b.normalizing_involution * b.normalizing_involution).is_identity());
  CHECK_FALSE(b.d_twisted == b.d);
  CHECK(extension_is_union(b));
  CHECK(block_orbit_sizes(b.g, b.d_prime) == std::vector<std::size_t>{468, 468});
  CHECK(block_orbit_sizes(b.a, b.d_prime) == std::vector<std::size_t>{936});
  // G acts the same way on both point labellings
  for (const auto& m : {eta(), psi(), alpha(), gamma()})
    CHECK(b.points_a.action({m, false}) == b.perm_of(m));
}
