#include <doctest.h>

#include <random>
#include <set>

#include "flagtrans/enumerated_group.hpp"
#include "flagtrans/gf_linear.hpp"

using namespace flagtrans::gf;
using namespace flagtrans::gf::generators;

namespace {

ProjMatrix power(const ProjMatrix& m, unsigned k) {
  ProjMatrix r = ProjMatrix::identity(m.modulus());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

// Determinant straight from the Leibniz formula on raw integers.
std::int64_t leibniz_det(const std::array<std::int64_t, 9>& a, std::int64_t p) {
  std::int64_t d = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
                   a[2] * (a[3] * a[7] - a[4] * a[6]);
  return ((d % p) + p) % p;
}

const std::vector<ProjMatrix>& psl33() {
  static const auto g =
      flagtrans::EnumeratedGroup<ProjMatrix>::generate({eta(), psi(), alpha(), gamma()}, ProjMatrix::identity(), 10000)
          .elements();
  return g;
}

}  // namespace

TEST_CASE("field arithmetic over GF(5) agrees with integer arithmetic mod 5") {
  for (int a = -7; a < 7; ++a)
    for (int b = -7; b < 7; ++b) {
      FieldElem x(a, 5), y(b, 5);
      auto m = [](int v) { return static_cast<std::uint32_t>(((v % 5) + 5) % 5); };
      CHECK((x + y).value() == m(a + b));
      CHECK((x - y).value() == m(a - b));
      CHECK((x * y).value() == m(a * b));
      CHECK((-x).value() == m(-a));
    }
  for (int a = 1; a < 5; ++a) CHECK((FieldElem(a, 5) * FieldElem(a, 5).inverse()).value() == 1);
  CHECK_THROWS_AS(FieldElem(0, 5).inverse(), std::domain_error);
  CHECK_THROWS_AS(ProjMatrix::identity(4), std::invalid_argument);
}

TEST_CASE("negative literals reduce and the canonical scalar is fixed") {
  auto m = ProjMatrix::from_entries({1, 1, -1, 0, 1, 1, 1, 1, 0});
  CHECK(m == eta());
  CHECK(m.entries()[2] == 2);
  auto scaled = ProjMatrix::from_entries({2, 2, -2, 0, 2, 2, 2, 2, 0});
  CHECK(scaled == m);
  CHECK_THROWS_AS(ProjMatrix::from_entries({1, 1, 1, 1, 1, 1, 0, 0, 1}), SingularMatrix);
}

TEST_CASE("canonical form: first nonzero entry is 1 and scalar multiples coincide") {
  std::mt19937_64 rng(7);
  int tested = 0;
  while (tested < 200) {
    std::array<std::int64_t, 9> a{};
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 5);
    if (leibniz_det(a, 5) == 0) continue;
    ++tested;
    auto base = ProjMatrix::from_entries(std::span<const std::int64_t, 9>(a), 5);
    auto first = std::find_if(base.entries().begin(), base.entries().end(), [](auto v) { return v != 0; });
    CHECK(*first == 1);
    for (std::int64_t c = 2; c < 5; ++c) {
      std::array<std::int64_t, 9> b{};
      for (int i = 0; i < 9; ++i) b[i] = a[i] * c;
      CHECK(ProjMatrix::from_entries(std::span<const std::int64_t, 9>(b), 5) == base);
    }
    CHECK(ProjMatrix::parse(base.serialize(), 5) == base);
  }
}

TEST_CASE("products and element orders") {
  CHECK(ProjMatrix::identity() * eta() == eta());
  CHECK(eta() * power(eta(), 12) == ProjMatrix::identity());
  for (unsigned k = 1; k < 13; ++k) CHECK_FALSE(power(eta(), k).is_identity());
  CHECK((psi() * psi() * psi()).is_identity());
  CHECK_FALSE((psi() * psi()).is_identity());
  CHECK((alpha() * alpha()).is_identity());
  CHECK(inverse(ProjMatrix::identity()) == ProjMatrix::identity());
  CHECK(inverse(eta()) == power(eta(), 12));
  CHECK(inverse(alpha()) == alpha());
}

TEST_CASE("determinants of the generators") {
  CHECK(det(ProjMatrix::identity()).value() == 1);
  CHECK(det(eta()).value() == leibniz_det({1, 1, -1, 0, 1, 1, 1, 1, 0}, 3));
  CHECK(det(eta()).value() == 1);
  CHECK(det(psi()).value() == 1);
}

TEST_CASE("the four generators close to a group of order 5616") {
  const auto& g = psl33();
  CHECK(g.size() == 5616);
  for (const auto& x : g) {
    // scaling by c multiplies det by c^3 = c, so only nonvanishing is projective
    CHECK_FALSE(det(x).is_zero());
    CHECK((x * inverse(x)).is_identity());
  }
}

TEST_CASE("the polarity map is an automorphism of order 2") {
  const auto& g = psl33();
  CHECK(polarity_gram() == ProjMatrix::from_entries({0, 0, 1, 0, 1, 0, 1, 0, 0}));
  CHECK(polarity_apply(ProjMatrix::identity()).is_identity());
  std::set<ProjMatrix> image;
  for (const auto& x : g) {
    auto y = polarity_apply(x);
    CHECK(polarity_apply(y) == x);
    CHECK(std::binary_search(g.begin(), g.end(), y));
    image.insert(y);
  }
  CHECK(image.size() == g.size());
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 100; ++i) {
    const auto& a = g[rng() % g.size()];
    const auto& b = g[rng() % g.size()];
    CHECK(polarity_apply(a * b) == polarity_apply(a) * polarity_apply(b));
  }
  bool some_moved = std::any_of(g.begin(), g.end(), [](const ProjMatrix& x) { return !(polarity_apply(x) == x); });
  CHECK(some_moved);
}

TEST_CASE("extension elements multiply by the twisted rule") {
  const GroupElement s = GroupElement::sigma();
  CHECK((s * s).is_identity());
  const GroupElement e{eta(), false}, p{psi(), false};
  CHECK(e * p == GroupElement{eta() * psi(), false});
  CHECK(s * e * s == GroupElement{polarity_apply(eta()), false});
  CHECK((s * e) * inverse(s * e) == GroupElement::identity());
  CHECK(GroupElement::identity() * s == s);
  CHECK(GroupElement{eta(), false} < s);
  CHECK(GroupElement::parse(s.serialize()) == s);
  std::mt19937_64 rng(99);
  const auto& g = psl33();
  for (int i = 0; i < 50; ++i) {
    GroupElement a{g[rng() % g.size()], bool(rng() & 1)}, b{g[rng() % g.size()], bool(rng() & 1)},
        c{g[rng() % g.size()], bool(rng() & 1)};
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("points of PG(2,3) and the conic") {
  auto pts = all_points();
  CHECK(pts.size() == 13);
  CHECK(std::set<ProjPoint>(pts.begin(), pts.end()).size() == 13);
  auto on_conic = std::count_if(pts.begin(), pts.end(), [](const ProjPoint& x) { return conic_form(x).is_zero(); });
  CHECK(on_conic == 4);
  for (const auto& x : pts) CHECK(std::find(pts.begin(), pts.end(), act(x, eta())) != pts.end());
  CHECK_THROWS(ProjPoint({0, 0, 0}));
}
