#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "vgm/field.hpp"
#include "vgm/group.hpp"
#include "vgm/group_algebra.hpp"

using vgm::Field;
using vgm::Group;
using vgm::GroupAlgebra;
using Coeffs = vgm::GroupAlgebra::Coeffs;

namespace {

Coeffs random_elem(const GroupAlgebra& a, std::mt19937_64& rng) {
  Coeffs u(a.dim());
  for (auto& c : u) c = rng() % a.field().size();
  return u;
}

}  // namespace

TEST_CASE("multiplication examples") {
  SUBCASE("unit law") {
    GroupAlgebra a(Field(5), Group::cyclic(4));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
      const Coeffs u = random_elem(a, rng);
      CHECK(a.mul(u, a.one()) == u);
      CHECK(a.mul(a.one(), u) == u);
    }
  }
  SUBCASE("GF(2)[Z3]: (g+g^2)^2 = g+g^2") {
    GroupAlgebra a(Field(2), Group::cyclic(3));
    const Coeffs u{0, 1, 1};
    CHECK(a.mul(u, u) == u);
    CHECK(a.is_idempotent(u));
  }
  SUBCASE("GF(5)[Z2]: (1+g)(1-g) = 0") {
    GroupAlgebra a(Field(5), Group::cyclic(2));
    const Coeffs u{1, 1}, v{1, 4};
    CHECK(a.is_zero(a.mul(u, v)));
  }
}

TEST_CASE("constant term") {
  GroupAlgebra a(Field(5), Group::cyclic(2));
  CHECK(a.constant_term(a.one()) == 1);
  CHECK(a.constant_term(Coeffs{3, 2}) == 3);
  GroupAlgebra b(Field(7), Group::builtin("S3"));
  Coeffs sum_nonidentity(6, 1);
  sum_nonidentity[b.group().identity()] = 0;
  CHECK(b.constant_term(sum_nonidentity) == 0);
  CHECK(b.has_zero_constant_term(sum_nonidentity));
}

TEST_CASE("mismatched contexts are rejected") {
  GroupAlgebra a(Field(5), Group::cyclic(2));
  CHECK_THROWS_AS(a.mul(Coeffs{1, 2, 3}, Coeffs{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(a.constant_term(Coeffs{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(a.mul(Coeffs{5, 0}, Coeffs{1, 0}), std::invalid_argument);
}

TEST_CASE("left multiplication matrix") {
  SUBCASE("identity element gives the identity matrix") {
    GroupAlgebra a(Field(3), Group::cyclic(3));
    const auto m = a.left_mult_matrix(a.one());
    for (size_t i = 0; i < 3; ++i) {
      for (size_t j = 0; j < 3; ++j) CHECK(m[i * 3 + j] == (i == j ? 1 : 0));
    }
  }
  SUBCASE("GF(5)[Z2]: a+bg maps to [[a,b],[b,a]]") {
    GroupAlgebra alg(Field(5), Group::cyclic(2));
    const auto m = alg.left_mult_matrix(Coeffs{2, 3});
    CHECK(m == std::vector<uint64_t>{2, 3, 3, 2});
    CHECK(vgm::mat_trace(alg.field(), m, 2) == 4);  // |G| * tr = 2*2
  }
  SUBCASE("GF(3)[Z3]: g is a fixed-point-free permutation matrix") {
    GroupAlgebra alg(Field(3), Group::cyclic(3));
    const auto m = alg.left_mult_matrix(alg.basis(1));
    CHECK(vgm::mat_trace(alg.field(), m, 3) == 0);
    uint64_t ones = 0;
    for (auto v : m) ones += v;
    CHECK(ones == 3);
  }
}

TEST_CASE("matrix trace identity: trace(m_u) = |G| tr(u)") {
  std::mt19937_64 rng(99);
  for (const Group& g : {Group::cyclic(4), Group::abelian({2, 3}), Group::builtin("S3")}) {
    for (const Field& f : {Field(2), Field(5), Field(2, 2)}) {
      GroupAlgebra a(f, g);
      for (int i = 0; i < 10; ++i) {
        const Coeffs u = random_elem(a, rng);
        const auto m = a.left_mult_matrix(u);
        CHECK(vgm::mat_trace(f, m, g.order()) ==
              f.mul(f.from_int(static_cast<long long>(g.order())), a.constant_term(u)));
      }
    }
  }
}

TEST_CASE("nilpotency") {
  SUBCASE("examples") {
    GroupAlgebra a(Field(2), Group::cyclic(2));
    CHECK(a.is_nilpotent(a.zero()));
    CHECK_FALSE(a.is_nilpotent(a.one()));
    CHECK(a.is_nilpotent(Coeffs{1, 1}));  // (1+g)^2 = 0 in char 2
    CHECK(a.nilpotency_index(Coeffs{1, 1}) == 2);
    CHECK(a.nilpotency_index(a.zero()) == 1);
    CHECK_FALSE(a.nilpotency_index(a.one()).has_value());
  }
  SUBCASE("agrees with the |G|-th power of the left multiplication matrix") {
    std::mt19937_64 rng(3);
    for (const Field& f : {Field(2), Field(3), Field(2, 2)}) {
      for (const Group& g : {Group::cyclic(2), Group::cyclic(3), Group::abelian({2, 2})}) {
        GroupAlgebra a(f, g);
        const uint64_t n = g.order();
        for (uint64_t t = 0; t < a.field().size() * n; ++t) {
          const Coeffs u = random_elem(a, rng);
          const auto m = vgm::mat_pow(f, a.left_mult_matrix(u), n, n);
          CHECK(a.is_nilpotent(u) == vgm::mat_is_zero(m));
        }
      }
    }
  }
}

TEST_CASE("radical membership certificates") {
  GroupAlgebra a(Field(2), Group::cyclic(3));
  SUBCASE("zero") {
    const auto cert = a.radical_membership(a.zero());
    CHECK(cert.in_radical);
    CHECK(cert.preperiod == 1);
    CHECK(cert.period == 1);
  }
  SUBCASE("idempotent with zero constant term") {
    const auto cert = a.radical_membership(Coeffs{0, 1, 1});
    CHECK(cert.in_radical);
    CHECK(cert.preperiod == 1);
    CHECK(cert.period == 1);
  }
  SUBCASE("the identity is not in the radical") {
    const auto cert = a.radical_membership(a.one());
    CHECK_FALSE(cert.in_radical);
  }
  SUBCASE("certificate equation u^(preperiod+period) = u^preperiod") {
    std::mt19937_64 rng(17);
    GroupAlgebra b(Field(3), Group::cyclic(4));
    for (int i = 0; i < 50; ++i) {
      const Coeffs u = random_elem(b, rng);
      const auto cert = b.radical_membership(u);
      CHECK(b.pow(u, cert.preperiod + cert.period) == b.pow(u, cert.preperiod));
      CHECK(cert.preperiod >= 1);
      CHECK(cert.period >= 1);
    }
  }
  SUBCASE("membership is inherited by powers") {
    std::mt19937_64 rng(23);
    GroupAlgebra b(Field(2), Group::abelian({2, 3}));
    for (int i = 0; i < 60; ++i) {
      const Coeffs u = random_elem(b, rng);
      if (!b.radical_membership(u).in_radical) continue;
      for (uint64_t j = 2; j <= 4; ++j) {
        CHECK(b.radical_membership(b.pow(u, j)).in_radical);
      }
    }
  }
  SUBCASE("storage budget overflow signals an infeasible instance") {
    GroupAlgebra b(Field(7), Group::cyclic(3));
    CHECK_THROWS_AS(b.radical_membership(b.basis(1, 3), 2), std::length_error);
  }
}

TEST_CASE("Frobenius: (u+v)^p = u^p + v^p in commutative algebras of characteristic p") {
  std::mt19937_64 rng(41);
  for (const Field& f : {Field(2), Field(3), Field(5), Field(2, 2)}) {
    for (const Group& g : {Group::cyclic(4), Group::abelian({2, 2}), Group::abelian({2, 3})}) {
      GroupAlgebra a(f, g);
      const uint64_t p = f.characteristic();
      for (int i = 0; i < 15; ++i) {
        const Coeffs u = random_elem(a, rng), v = random_elem(a, rng);
        CHECK(a.pow(a.add(u, v), p) == a.add(a.pow(u, p), a.pow(v, p)));
      }
    }
  }
}

TEST_CASE("multiplication commutes for abelian groups and associates in general") {
  std::mt19937_64 rng(55);
  GroupAlgebra a(Field(3), Group::abelian({2, 4}));
  GroupAlgebra s(Field(2, 2), Group::builtin("S3"));
  for (int i = 0; i < 20; ++i) {
    const Coeffs u = random_elem(a, rng), v = random_elem(a, rng), w = random_elem(a, rng);
    CHECK(a.mul(u, v) == a.mul(v, u));
    CHECK(a.mul(a.mul(u, v), w) == a.mul(u, a.mul(v, w)));
    const Coeffs x = random_elem(s, rng), y = random_elem(s, rng), z = random_elem(s, rng);
    CHECK(s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z)));
  }
}

TEST_CASE("idempotent and subspace predicates on the standard examples") {
  GroupAlgebra a(Field(2), Group::cyclic(3));
  CHECK(a.is_idempotent(a.one()));
  CHECK_FALSE(a.has_zero_constant_term(a.one()));
  CHECK(a.is_idempotent(a.zero()));
  CHECK(a.has_zero_constant_term(a.zero()));
  CHECK(a.is_idempotent(Coeffs{0, 1, 1}));
  CHECK(a.has_zero_constant_term(Coeffs{0, 1, 1}));
}

TEST_CASE("element literals") {
  GroupAlgebra a(Field(2), Group::cyclic(3));
  CHECK(a.format_element(Coeffs{0, 1, 1}) == "1*g1+1*g2");
  CHECK(a.parse_element("1*g1+1*g2") == Coeffs{0, 1, 1});
  CHECK(a.format_element(a.zero()) == "0");
  CHECK(a.parse_element("0") == a.zero());

  GroupAlgebra b(Field(2, 2), Group::cyclic(3));
  CHECK(b.format_element(Coeffs{0, 2, 3}) == "10*g1+11*g2");
  CHECK(b.parse_element("10*g1+11*g2") == Coeffs{0, 2, 3});

  CHECK_THROWS_AS(a.parse_element("1*g9"), std::invalid_argument);
  CHECK_THROWS_AS(a.parse_element("1*h1"), std::invalid_argument);
  CHECK_THROWS_AS(a.parse_element("g1+"), std::invalid_argument);
  CHECK_THROWS_AS(a.parse_element(""), std::invalid_argument);

  std::mt19937_64 rng(77);
  GroupAlgebra c(Field(13), Group::abelian({2, 3}));
  for (int i = 0; i < 25; ++i) {
    const Coeffs u = random_elem(c, rng);
    CHECK(c.parse_element(c.format_element(u)) == u);
  }
}
