#include <doctest.h>

#include <algorithm>

#include "flagtrans/coset_geometry.hpp"
#include "flagtrans/design_verify.hpp"

using namespace flagtrans;
using namespace flagtrans::design;

namespace {

IncidenceStructure fano() {
  std::vector<Block> blocks;
  for (Point i = 0; i < 7; ++i) blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return IncidenceStructure(7, blocks);
}

PermGroup fano_group() {
  std::vector<Point> shift(7), twice(7);
  for (Point i = 0; i < 7; ++i) shift[i] = (i + 1) % 7, twice[i] = (2 * i) % 7;
  return closure(7, {Perm(shift), Perm(twice)});
}

// Pair counts by direct enumeration over blocks.
std::vector<std::vector<std::size_t>> pair_table(const IncidenceStructure& d) {
  std::vector<std::vector<std::size_t>> t(d.v(), std::vector<std::size_t>(d.v(), 0));
  for (const auto& b : d.blocks())
    for (auto x : b)
      for (auto y : b)
        if (x != y) ++t[x][y];
  return t;
}

}  // namespace

TEST_CASE("incidence structure validation and serialization") {
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(IncidenceStructure(3, {{}}), std::invalid_argument);
  auto d = fano();
  CHECK(from_json(to_json(d)) == d);
  CHECK(from_json(to_json(d, 2)) == d);
  CHECK_THROWS_AS(from_json("{\"v\": 3}"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("not json"), std::invalid_argument);
  CHECK(d.block_indices_through(0).size() == 3);
}

TEST_CASE("classification of small structures") {
  auto c = classify_design(fano());
  REQUIRE(std::holds_alternative<DesignParams>(c));
  auto p = std::get<DesignParams>(c);
  CHECK(p.v == 7);
  CHECK(p.b == 7);
  CHECK(p.k == 3);
  CHECK(p.r == 3);
  CHECK(p.lambda == 1);
  CHECK(p.counting_identities());

  auto pair = classify_design(IncidenceStructure(2, {{0, 1}}));
  REQUIRE(std::holds_alternative<DesignParams>(pair));
  auto q = std::get<DesignParams>(pair);
  CHECK((q.v == 2 && q.b == 1 && q.k == 2 && q.r == 1 && q.lambda == 1));

  auto bad_k = classify_design(IncidenceStructure(4, {{0, 1}, {1, 2, 3}}));
  REQUIRE(std::holds_alternative<Diagnostic>(bad_k));
  CHECK(std::get<Diagnostic>(bad_k).violated == "block-size");

  // constant k and r but uneven pair counts: two disjoint copies of a pair
  auto bad_l = classify_design(IncidenceStructure(4, {{0, 1}, {2, 3}}));
  REQUIRE(std::holds_alternative<Diagnostic>(bad_l));
  CHECK(std::get<Diagnostic>(bad_l).violated == "pair-count");
}

TEST_CASE("desdes identities") {
  auto r = desdes_identities({144, 468, 12, 39, 3});
  CHECK(r.r_identity);
  CHECK(r.b_identity);
  CHECK(r.ratio_inequality);
  CHECK(r.square_family);
  CHECK(desdes_identities({144, 936, 12, 78, 6}).all());
  CHECK_FALSE(desdes_identities({7, 7, 3, 3, 1}).all());
}

TEST_CASE("flag-transitivity") {
  auto f = flag_transitive(fano_group(), fano());
  CHECK(f.preserves_blocks);
  CHECK(f.transitive);
  CHECK(f.flag_count == 21);
  PermGroup s2 = closure(2, {Perm({1, 0})});
  CHECK(flag_transitive(s2, IncidenceStructure(2, {{0, 1}})).transitive);
  std::vector<Point> swap01{1, 0, 2, 3, 4, 5, 6};
  auto bad = flag_transitive(closure(7, {Perm(swap01)}), fano());
  CHECK_FALSE(bad.preserves_blocks);
  CHECK_FALSE(bad.transitive);
}

TEST_CASE("tactical configurations and pp3 on the Fano plane") {
  auto d = fano();
  std::vector<Point> all{0, 1, 2, 3, 4, 5, 6};
  std::vector<std::size_t> blocks{0, 1, 2, 3, 4, 5, 6};
  auto t = tactical_params(d, all, blocks);
  REQUIRE(std::holds_alternative<TacticalParams>(t));
  CHECK(std::get<TacticalParams>(t) == TacticalParams{7, 7, 3, 3});
  std::vector<Point> two{0, 1};
  CHECK(std::holds_alternative<Diagnostic>(tactical_params(d, two, blocks)));
  // The stabilizer of 0 in the order-21 group has two orbits of length 3
  // besides {0}, and k + 1 = 4 does not divide 3.
  auto r = pp3_orbit_check(fano_group(), d, 0);
  CHECK(r.verdict == Verdict::fail);
  CHECK_FALSE(r.identity_holds);
  std::vector<Point> swap01{1, 0, 2, 3, 4, 5, 6};
  CHECK(pp3_orbit_check(closure(7, {Perm(swap01)}), d, 0).verdict == Verdict::hypothesis_unmet);
}

TEST_CASE("largeness and triple factorization on small inputs") {
  CHECK(largeness_check(5616, 39));
  CHECK(largeness_check(11232, 78));
  CHECK_FALSE(largeness_check(120, 2));
  CHECK_THROWS(largeness_check(120, 7));
  PermGroup s3 = closure(3, {Perm({1, 2, 0}), Perm({1, 0, 2})});
  auto t = triple_factorization(s3, s3.elements(), std::vector<Perm>{Perm::identity(3)});
  CHECK(t.covers);
  CHECK(t.degenerate);
}

TEST_CASE("the lambda = 3 design") {
  const auto& b = geometry::standard_bundle();
  auto c = classify_design(b.d);
  REQUIRE(std::holds_alternative<DesignParams>(c));
  auto p = std::get<DesignParams>(c);
  CHECK((p.v == 144 && p.b == 468 && p.k == 12 && p.r == 39 && p.lambda == 3));
  CHECK(p.v * p.r == p.b * p.k);
  CHECK(p.lambda * (p.v - 1) == p.r * (p.k - 1));
  // pair counts from the raw block list
  auto table = pair_table(b.d);
  for (Point x = 0; x < 144; ++x)
    for (Point y = 0; y < 144; ++y)
      if (x != y) CHECK(table[x][y] == 3);

  auto f = flag_transitive(b.g, b.d);
  CHECK(f.transitive);
  CHECK(f.flag_count == 5616);
  CHECK(f.orbit_sizes == std::vector<std::size_t>{5616});
  auto eta_flags = flag_transitive(b.eta, b.d);
  CHECK_FALSE(eta_flags.transitive);

  auto pp = pp3_orbit_check(b.g, b.d, b.base);
  CHECK(pp.verdict == Verdict::pass);
  for (const auto& o : pp.orbits) {
    REQUIRE(o.intersections.size() == 1);
    CHECK(o.intersections[0] == (o.orbit_size == 39 ? 3u : 1u));
  }

  auto tf = triple_factorization(b.g, normalizer(b.g, b.p).elements(), b.l.elements());
  CHECK(tf.covers);
  CHECK_FALSE(tf.degenerate);
  CHECK(tf.nl_size == 468);
  CHECK(tf.nln_size == 5616);
  auto tp = triple_factorization(b.p, b.eta.elements(), b.psi.elements());
  CHECK(tp.covers);
  CHECK(tp.degenerate);
}

TEST_CASE("the lambda = 6 design") {
  const auto& b = geometry::standard_bundle();
  auto c = classify_design(b.d_prime);
  REQUIRE(std::holds_alternative<DesignParams>(c));
  auto p = std::get<DesignParams>(c);
  CHECK((p.v == 144 && p.b == 936 && p.k == 12 && p.r == 78 && p.lambda == 6));
  auto f = flag_transitive(b.a, b.d_prime);
  CHECK(f.transitive);
  CHECK(f.flag_count == 11232);
  CHECK(pp3_orbit_check(b.a, b.d_prime, b.base).verdict == Verdict::pass);
  CHECK_FALSE(flag_transitive(b.a, b.d).preserves_blocks);
}

TEST_CASE("uniqueness audit sub-checks are reported in order") {
  const auto& b = geometry::standard_bundle();
  auto subs = extension_uniqueness_audit(b.d, b.g, b.a, b.base);
  REQUIRE(subs.size() == 6);
  const char* ids[] = {"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < 6; ++i) CHECK(subs[i].id == ids[i]);
  CHECK(subs[5].pass);
}
