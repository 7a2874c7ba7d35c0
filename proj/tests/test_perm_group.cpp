#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "flagtrans/coset_geometry.hpp"
#include "flagtrans/perm_group.hpp"

using namespace flagtrans;

namespace {

Perm cycle(std::size_t n, std::vector<Point> c) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Perm(img);
}

std::vector<std::size_t> orbit_lengths(const PermGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits(g)) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::size_t, std::size_t> order_census(const PermGroup& g) {
  std::map<std::size_t, std::size_t> c;
  for (const auto& x : g.elements()) ++c[x.order()];
  return c;
}

// Every partition of {0..n-1} preserved by the generators, by brute force
// over set partitions. Tiny n only.
std::vector<std::vector<std::vector<Point>>> all_block_systems(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<std::vector<std::vector<Point>>> out;
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<std::vector<Point>> parts(used);
      for (Point x = 0; x < n; ++x) parts[label[x]].push_back(x);
      if (used == 1 || used == n) return;
      std::size_t sz = parts[0].size();
      if (!std::all_of(parts.begin(), parts.end(), [&](auto& p) { return p.size() == sz; })) return;
      for (const auto& g : gens)
        for (Point x = 0; x < n; ++x)
          for (Point y = 0; y < n; ++y)
            if ((label[x] == label[y]) != (label[g[x]] == label[g[y]])) return;
      out.push_back(parts);
      return;
    }
    for (std::size_t l = 0; l <= used; ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  Perm a = cycle(4, {0, 1, 2, 3}), b = cycle(4, {0, 1});
  CHECK((a * b)[0] == b[a[0]]);
  CHECK((a * inverse(a)).is_identity());
  CHECK(a.order() == 4);
  CHECK((cycle(5, {0, 1}) * cycle(5, {2, 3, 4})).order() == 6);
  CHECK(conjugate(b, a) == inverse(a) * b * a);
}

TEST_CASE("closure and Lagrange") {
  CHECK(closure(3, {Perm::identity(3)}).order() == 1);
  PermGroup s3 = closure(3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})});
  CHECK(s3.order() == 6);
  PermGroup s5 = closure(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})});
  CHECK(s5.order() == 120);
  CHECK_THROWS_AS(closure(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})}, 50), ClosureOverflow);
  CHECK_THROWS_AS(closure(5, {cycle(5, {0, 1}), cycle(4, {0, 1})}), std::invalid_argument);
  for (Point x = 0; x < 5; ++x) {
    auto st = stabilizer(s5, x);
    CHECK(st.order() == 24);
    CHECK(s5.order() % st.order() == 0);
    CHECK(st.is_subgroup_of(s5));
  }
  CHECK(stabilizer(s3, 0).order() == 2);
}

TEST_CASE("closure does not depend on generator order") {
  std::vector<Perm> gens{cycle(6, {0, 1, 2, 3, 4, 5}), cycle(6, {0, 1}), cycle(6, {2, 4})};
  auto ref = closure(6, gens).elements();
  std::mt19937 rng(3);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(closure(6, gens).elements() == ref);
  }
}

TEST_CASE("orbits, set stabilizers and orbit-stabilizer") {
  PermGroup triv = closure(5, {Perm::identity(5)});
  CHECK(orbits(triv).size() == 5);
  PermGroup g = closure(7, {cycle(7, {0, 1, 2}), cycle(7, {3, 4})});
  CHECK(orbit_lengths(g) == std::vector<std::size_t>{1, 1, 2, 3});
  for (Point x = 0; x < 7; ++x)
    CHECK(g.order() == orbit_of(g.generators(), 7, x).size() * stabilizer(g, x).order());
  std::vector<Point> set{3, 4};
  CHECK(set_stabilizer(g, set).order() == g.order());
  std::vector<Point> set2{0, 3};
  CHECK(set_stabilizer(g, set2).order() == 1);
}

TEST_CASE("normalizers") {
  PermGroup s4 = closure(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  PermGroup v4 = closure(4, {cycle(4, {0, 1}) * cycle(4, {2, 3}), cycle(4, {0, 2}) * cycle(4, {1, 3})});
  CHECK(normalizer(s4, v4).order() == 24);
  CHECK(normalizer(s4, s4).order() == 24);
  PermGroup c2 = closure(4, {cycle(4, {0, 1})});
  CHECK(normalizer(s4, c2).order() == 4);
  PermGroup other = closure(5, {cycle(5, {0, 4})});
  CHECK_THROWS(normalizer(s4, other));
}

TEST_CASE("double cosets and product sets") {
  PermGroup s4 = closure(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  PermGroup triv = closure(4, {Perm::identity(4)});
  auto g = cycle(4, {1, 2, 3});
  CHECK(double_coset(triv.elements(), g, triv.elements()) == ElementSet{g});
  PermGroup h = stabilizer(s4, 0);
  CHECK(product_set(h.elements(), h.elements()) == h.elements());
  // Double cosets of a point stabilizer biject with its orbits.
  std::set<ElementSet> dcs;
  for (const auto& x : s4.elements()) dcs.insert(double_coset(h.elements(), x, h.elements()));
  CHECK(dcs.size() == orbits(h).size());
  std::size_t total = 0;
  for (const auto& d : dcs) total += d.size();
  CHECK(total == 24);
}

TEST_CASE("primitivity against a brute-force block-system search") {
  PermGroup c4 = closure(4, {cycle(4, {0, 1, 2, 3})});
  auto r = is_primitive(c4);
  CHECK_FALSE(r.primitive);
  CHECK(r.block_system == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});
  CHECK(all_block_systems(c4.generators(), 4).size() == 1);

  PermGroup s3 = closure(3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})});
  CHECK(is_primitive(s3).primitive);

  PermGroup c6 = closure(6, {cycle(6, {0, 1, 2, 3, 4, 5})});
  CHECK_FALSE(is_primitive(c6).primitive);
  CHECK(all_block_systems(c6.generators(), 6).size() == 2);
  PermGroup d5 = closure(5, {cycle(5, {0, 1, 2, 3, 4}), Perm({0, 4, 3, 2, 1})});
  CHECK(is_primitive(d5).primitive);
  CHECK(all_block_systems(d5.generators(), 5).empty());
  PermGroup d8 = closure(8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7}), Perm({0, 7, 6, 5, 4, 3, 2, 1})});
  CHECK_FALSE(is_primitive(d8).primitive);
  for (const auto& bs : all_block_systems(d8.generators(), 8)) {
    // each brute-force system is found as the minimal one for some pair in it
    Point a = bs[0][0], b = bs[0][1];
    auto m = minimal_block_system(d8.generators(), 8, a, b);
    CHECK(m.size() >= bs.size());
  }
  PermGroup intrans = closure(4, {cycle(4, {0, 1})});
  CHECK_THROWS(is_primitive(intrans));
}

TEST_CASE("Frobenius and A4 recognition") {
  PermGroup s3 = closure(3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})});
  PermGroup c3 = closure(3, {cycle(3, {0, 1, 2})});
  PermGroup c2 = closure(3, {cycle(3, {0, 1})});
  CHECK(recognize_frobenius(s3, c3, c2));

  // C3 x C2 on 5 points: conjugation is trivial.
  PermGroup k = closure(5, {cycle(5, {0, 1, 2})}), h = closure(5, {cycle(5, {3, 4})});
  PermGroup kh = closure(5, {cycle(5, {0, 1, 2}), cycle(5, {3, 4})});
  CHECK_FALSE(recognize_frobenius(kh, k, h));

  PermGroup a4 = closure(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  CHECK(recognize_a4(a4));
  PermGroup c12 = closure(7, {cycle(7, {0, 1, 2}) * cycle(7, {3, 4, 5, 6})});
  CHECK(c12.order() == 12);
  CHECK_FALSE(recognize_a4(c12));
  PermGroup d12 = closure(6, {cycle(6, {0, 1, 2, 3, 4, 5}), Perm({0, 5, 4, 3, 2, 1})});
  CHECK(d12.order() == 12);
  CHECK(order_census(d12) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 7}, {3, 2}, {6, 2}});
  CHECK_FALSE(recognize_a4(d12));
}

TEST_CASE("PSL(3,3) on the 144 cosets of P") {
  const auto& b = geometry::standard_bundle();
  CHECK(b.g.order() == 5616);
  CHECK(is_transitive(b.g));
  CHECK(is_primitive(b.g).primitive);
  CHECK(b.p.order() == 39);
  CHECK(orbit_lengths(b.p) == std::vector<std::size_t>{1, 13, 13, 13, 13, 13, 39, 39});
  std::size_t fixed = 0;
  for (Point x = 0; x < 144; ++x) fixed += b.psi.generators()[0][x] == x;
  CHECK(fixed == 6);
  CHECK(stabilizer(b.g, b.base).elements() == b.p.elements());
  CHECK(normalizer(b.g, b.p).order() == 39);
  auto npsi = normalizer(b.g, b.psi);
  CHECK(npsi.order() == 18);
  // PSL(3,3) has no element of order 9, so this cannot be dihedral. The
  // element-order census is that of C3 x S3: the centralizer of psi is
  // elementary abelian of order 9 and an involution inverts psi.
  CHECK(order_census(npsi) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 8}, {6, 6}});
  std::set<std::size_t> element_orders;
  for (const auto& x : b.g.elements()) element_orders.insert(x.order());
  CHECK(element_orders == std::set<std::size_t>{1, 2, 3, 4, 6, 8, 13});
  CHECK(normalizer(b.g, b.g).order() == 5616);
  CHECK(recognize_frobenius(b.p, b.eta, b.psi));
  CHECK(recognize_a4(b.l));
  // orbit-stabilizer across all points
  for (Point x = 0; x < 144; x += 11) CHECK(stabilizer(b.g, x).order() * 144 == 5616);
  CHECK(stabilizer(b.a, b.base).order() == 78);
}
