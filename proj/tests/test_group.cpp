#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>

#include "vgm/group.hpp"
#include "vgm/numeric.hpp"

using vgm::Group;

TEST_CASE("abelian products use mixed-radix indexing, first factor least significant") {
  const Group g = Group::abelian({2, 3});
  // element (1, 1) has index 1 + 2*1 = 3
  CHECK(g.op(1, 2) == 3);  // (1,0) * (0,1) = (1,1)
  CHECK(g.element_order(3) == 6);
}

TEST_CASE("cyclic group operation") {
  const Group z3 = Group::cyclic(3);
  CHECK(z3.op(1, 2) == 0);
  CHECK(z3.inverse(1) == 2);
  for (uint32_t a = 0; a < 3; ++a) CHECK(z3.op(a, z3.identity()) == a);
}

TEST_CASE("element orders") {
  const Group z6 = Group::cyclic(6);
  CHECK(z6.element_order(z6.identity()) == 1);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(z6.element_order(3) == 2);
  for (uint32_t g = 0; g < 6; ++g) CHECK(6 % z6.element_order(g) == 0);
}

TEST_CASE("index out of range is rejected") {
  const Group z3 = Group::cyclic(3);
  CHECK_THROWS_AS(z3.op(0, 3), std::out_of_range);
  CHECK_THROWS_AS(z3.inverse(5), std::out_of_range);
  CHECK_THROWS_AS(z3.element_order(3), std::out_of_range);
}

TEST_CASE("abelian factors must be at least 2") {
  CHECK_THROWS_AS(Group::abelian({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Group::abelian({0}), std::invalid_argument);
  CHECK(Group::trivial().order() == 1);
}

TEST_CASE("commutativity, exhaustive on small abelian groups") {
  for (const Group& g : {Group::abelian({8}), Group::abelian({2, 3, 5}),
                         Group::abelian({4, 4}), Group::abelian({2, 2, 2})}) {
    for (uint32_t a = 0; a < g.order(); ++a) {
      for (uint32_t b = 0; b < g.order(); ++b) {
        CHECK(g.op(a, b) == g.op(b, a));
      }
    }
  }
}

TEST_CASE("cyclic subgroups of Z4") {
  const auto subs = Group::cyclic(4).cyclic_subgroups();
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].order == 1);
  CHECK(subs[1].order == 2);
  CHECK(subs[2].order == 4);
}

TEST_CASE("cyclic subgroups of Z2xZ2") {
  const auto subs = Group::abelian({2, 2}).cyclic_subgroups();
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].order == 1);
  int order2 = 0;
  for (const auto& s : subs) {
    if (s.order == 2) ++order2;
  }
  CHECK(order2 == 3);
}

TEST_CASE("cyclic subgroups of S3") {
  const auto subs = Group::builtin("S3").cyclic_subgroups();
  std::multiset<uint64_t> orders;
  for (const auto& s : subs) orders.insert(s.order);
  CHECK(orders == std::multiset<uint64_t>{1, 2, 2, 2, 3});
}

TEST_CASE("subgroup enumeration counts every element once via phi") {
  for (const Group& g : {Group::cyclic(12), Group::abelian({2, 4}), Group::builtin("S3"),
                         Group::builtin("D4"), Group::builtin("Q8")}) {
    uint64_t total = 0;
    for (const auto& s : g.cyclic_subgroups()) total += vgm::euler_phi(s.order);
    CHECK(total == g.order());
  }
}

TEST_CASE("subgroup elements are listed in power order with the lowest generator") {
  const Group g = Group::cyclic(6);
  for (const auto& s : g.cyclic_subgroups()) {
    CHECK(s.elements.front() == g.identity());
    for (size_t i = 0; i < s.elements.size(); ++i) {
      CHECK(s.elements[i] == g.power(s.generator, i));
    }
    for (uint32_t h : s.elements) {
      if (g.element_order(h) == s.order) {
        CHECK(s.generator <= h);  // canonical generator is the lowest index
      }
    }
  }
}

TEST_CASE("builtin S3") {
  const Group s3 = Group::builtin("S3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  // a transposition squares to the identity
  bool found_transposition = false;
  for (uint32_t a = 0; a < 6; ++a) {
    if (s3.element_order(a) == 2) {
      CHECK(s3.op(a, a) == s3.identity());
      found_transposition = true;
    }
  }
  CHECK(found_transposition);
}

TEST_CASE("builtin Q8 has a unique element of order 2") {
  const Group q8 = Group::builtin("Q8");
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  int order2 = 0, order4 = 0;
  for (uint32_t a = 0; a < 8; ++a) {
    const auto o = q8.element_order(a);
    if (o == 2) ++order2;
    if (o == 4) ++order4;
  }
  CHECK(order2 == 1);
  CHECK(order4 == 6);
}

TEST_CASE("builtin D4 has exactly two elements of order 4") {
  const Group d4 = Group::builtin("D4");
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.is_abelian());
  int order4 = 0;
  for (uint32_t a = 0; a < 8; ++a) {
    if (d4.element_order(a) == 4) ++order4;
  }
  CHECK(order4 == 2);
}

TEST_CASE("unknown builtin is rejected") {
  CHECK_THROWS_AS(Group::builtin("A5"), std::invalid_argument);
}

TEST_CASE("bad multiplication tables are rejected") {
  // not a Latin square
  CHECK_THROWS_AS(Group::from_cayley_table({{0, 0}, {1, 1}}), std::invalid_argument);
  // the subtraction quasigroup (a - b) mod 5: Latin, but no two-sided identity
  std::vector<std::vector<uint32_t>> sub5(5, std::vector<uint32_t>(5));
  for (uint32_t a = 0; a < 5; ++a) {
    for (uint32_t b = 0; b < 5; ++b) sub5[a][b] = (a + 5 - b) % 5;
  }
  CHECK_THROWS_AS(Group::from_cayley_table(sub5), std::invalid_argument);
  // a Latin square with identity that is a loop but not a group (order 5
  // forces Z5, and here element 1 squares to the identity)
  const std::vector<std::vector<uint32_t>> loop5 = {{0, 1, 2, 3, 4},
                                                    {1, 0, 3, 4, 2},
                                                    {2, 3, 4, 0, 1},
                                                    {3, 4, 1, 2, 0},
                                                    {4, 2, 0, 1, 3}};
  CHECK_THROWS_AS(Group::from_cayley_table(loop5), std::invalid_argument);
  // entry out of range
  CHECK_THROWS_AS(Group::from_cayley_table({{2}}), std::invalid_argument);
}

TEST_CASE("round-trip through a valid table") {
  const Group z3 = Group::from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(z3.order() == 3);
  CHECK(z3.is_abelian());
  CHECK_FALSE(z3.abelian_factors().has_value());
  CHECK(z3.op(1, 1) == 2);
}

TEST_CASE("group spec parsing") {
  CHECK(vgm::parse_group_spec("Z3") == Group::cyclic(3));
  CHECK(vgm::parse_group_spec("Z2xZ2xZ5") == Group::abelian({2, 2, 5}));
  CHECK(vgm::parse_group_spec("Z1") == Group::trivial());
  CHECK(vgm::parse_group_spec("S3").spec_string() == "S3");
  CHECK_THROWS_AS(vgm::parse_group_spec("Z0"), std::invalid_argument);
  CHECK_THROWS_AS(vgm::parse_group_spec("Zx"), std::invalid_argument);
  CHECK_THROWS_AS(vgm::parse_group_spec("z3"), std::invalid_argument);
  CHECK_THROWS_AS(vgm::parse_group_spec("Z3x"), std::invalid_argument);
  CHECK_THROWS_AS(vgm::parse_group_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(vgm::parse_group_spec("Z2xY3"), std::invalid_argument);
}

TEST_CASE("spec strings") {
  CHECK(Group::abelian({2, 3}).spec_string() == "Z2xZ3");
  CHECK(Group::trivial().spec_string() == "Z1");
  CHECK(Group::builtin("Q8").spec_string() == "Q8");
}

TEST_CASE("abelian group enumeration by order") {
  CHECK(vgm::abelian_factor_lists_of_order(1) == std::vector<std::vector<uint64_t>>{{}});
  CHECK(vgm::abelian_factor_lists_of_order(4) ==
        std::vector<std::vector<uint64_t>>{{2, 2}, {4}});
  CHECK(vgm::abelian_factor_lists_of_order(12) ==
        std::vector<std::vector<uint64_t>>{{2, 2, 3}, {3, 4}});
  // orders 1..8: 1+1+1+2+1+1+1+3 = 11 isomorphism classes
  CHECK(vgm::abelian_factor_lists_up_to(8).size() == 11);
}
