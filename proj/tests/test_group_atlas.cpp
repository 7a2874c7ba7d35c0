#include <doctest.h>

#include "flagtrans/arith_sieve.hpp"
#include "flagtrans/coset_geometry.hpp"
#include "flagtrans/group_atlas.hpp"

using namespace flagtrans;
using namespace flagtrans::atlas;

namespace {
BigInt B(const char* s) { return BigInt(s); }
}  // namespace

TEST_CASE("family names parse and print") {
  CHECK(parse_family("PSL") == Family::PSL);
  CHECK(parse_family("pomega+") == Family::POmegaPlus);
  CHECK(parse_family("POmega-") == Family::POmegaMinus);
  CHECK_THROWS_AS(parse_family("GL"), std::invalid_argument);
  CHECK(display_name({Family::PSL, 3, 3}) == "PSL_3(3)");
  CHECK(display_name({Family::POmegaPlus, 8, 2}) == "POmega+_8(2)");
}

TEST_CASE("prime powers") {
  CHECK(prime_power(8)->p == 2);
  CHECK(prime_power(8)->f == 3);
  CHECK(prime_power(49)->f == 2);
  CHECK_FALSE(prime_power(12));
  CHECK_FALSE(prime_power(1));
  CHECK_THROWS(validate({Family::PSL, 3, 6}));
  CHECK_THROWS(validate({Family::PSp, 5, 3}));
  CHECK_THROWS(validate({Family::POmegaOdd, 7, 4}));
}

TEST_CASE("simple group orders against published constants") {
  struct Row {
    ClassicalType t;
    const char* order;
  };
  const std::vector<Row> rows{
      {{Family::PSL, 2, 7}, "168"},
      {{Family::PSL, 2, 8}, "504"},
      {{Family::PSL, 2, 13}, "1092"},
      {{Family::PSL, 3, 3}, "5616"},
      {{Family::PSL, 3, 4}, "20160"},
      {{Family::PSL, 4, 2}, "20160"},
      {{Family::PSL, 5, 3}, "237783237120"},
      {{Family::PSU, 3, 3}, "6048"},
      {{Family::PSU, 4, 2}, "25920"},
      {{Family::PSU, 4, 3}, "3265920"},
      {{Family::PSp, 4, 3}, "25920"},
      {{Family::PSp, 6, 2}, "1451520"},
      {{Family::PSp, 4, 7}, "138297600"},
      {{Family::POmegaOdd, 7, 3}, "4585351680"},
      {{Family::POmegaPlus, 8, 2}, "174182400"},
      {{Family::POmegaMinus, 8, 2}, "197406720"},
      {{Family::POmegaPlus, 8, 3}, "4952179814400"},
  };
  for (const auto& r : rows) {
    CAPTURE(display_name(r.t));
    CHECK(simple_order(r.t) == B(r.order));
  }
}

TEST_CASE("PSL(3,3) order matches the enumerated group") {
  CHECK(simple_order({Family::PSL, 3, 3}) == geometry::standard_bundle().g.order());
}

TEST_CASE("outer automorphism group orders") {
  CHECK(out_order({Family::PSL, 3, 3}) == 2);
  CHECK(out_order({Family::PSL, 2, 8}) == 3);
  CHECK(out_order({Family::PSL, 2, 7}) == 2);
  CHECK(out_order({Family::PSL, 3, 4}) == 12);
  CHECK(out_order({Family::PSL, 5, 3}) == 2);
  CHECK(out_order({Family::PSU, 3, 3}) == 2);
  CHECK(out_order({Family::PSU, 3, 5}) == 6);
  CHECK(out_order({Family::PSU, 4, 3}) == 8);
  CHECK(out_order({Family::PSp, 6, 2}) == 1);
  CHECK(out_order({Family::PSp, 4, 3}) == 2);
  CHECK(out_order({Family::PSp, 4, 8}) == 6);
  CHECK(out_order({Family::POmegaOdd, 7, 3}) == 2);
  CHECK(out_order({Family::POmegaPlus, 8, 2}) == 6);
  CHECK(out_order({Family::POmegaPlus, 8, 3}) == 24);
  CHECK(out_order({Family::POmegaMinus, 8, 2}) == 2);
}

TEST_CASE("named groups") {
  CHECK(named_order("M11") == 7920);
  CHECK(named_order("A7") == 2520);
  CHECK(named_order("S14") == B("87178291200"));
  CHECK(named_order("S8") == 40320);
  CHECK(named_order("J2") == 604800);
  CHECK(named_order("POmega8+(2)") == 174182400);
  CHECK(named_order("G2(3)") == 4245696);
  CHECK_THROWS_AS(named_order("Monster"), std::invalid_argument);
  CHECK(simple_order({Family::PSp, 6, 2}) / named_order("S8") == 36);
  CHECK(named_order("PSU4(2)") == simple_order({Family::PSU, 4, 2}));
  CHECK(named_order("PSL3(4)") == simple_order({Family::PSL, 3, 4}));
}

TEST_CASE("13-part of |PSL_5(3)| is exactly 13") {
  BigInt o = simple_order({Family::PSL, 5, 3});
  CHECK(o % 13 == 0);
  CHECK(o % 169 != 0);
}

TEST_CASE("admissibility predicates") {
  CHECK(admissible({Family::PSL, 3, 3}));
  CHECK_FALSE(admissible({Family::PSL, 2, 8}));
  CHECK_FALSE(admissible({Family::PSU, 3, 2}));
  CHECK(admissible({Family::PSp, 4, 3}));
  CHECK_FALSE(admissible({Family::POmegaPlus, 4, 3}));
  CHECK_FALSE(admissible({Family::PSL, 3, 10}));
}

TEST_CASE("order is divisible by the primitive part of p^(ef)") {
  std::vector<ClassicalType> matrix;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned n = 3; n <= 7; ++n) matrix.push_back({Family::PSL, n, q});
    for (unsigned n = 3; n <= 6; ++n) matrix.push_back({Family::PSU, n, q});
    for (unsigned n : {4u, 6u, 8u}) matrix.push_back({Family::PSp, n, q});
    if (q % 2) matrix.push_back({Family::POmegaOdd, 7, q});
    for (unsigned n : {8u, 10u}) {
      matrix.push_back({Family::POmegaPlus, n, q});
      matrix.push_back({Family::POmegaMinus, n, q});
    }
  }
  for (const auto& t : matrix) {
    if (!admissible(t)) continue;
    CAPTURE(display_name(t));
    auto pp = *prime_power(natural_q(t));
    auto part = arith::primitive_part(BigInt(pp.p), primitive_exponent(t) * pp.f);
    CHECK(simple_order(t) % part.value == 0);
  }
}
