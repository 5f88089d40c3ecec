#include "doctest.h"

#include <cstdint>

#include "lcgroups/constructors.hpp"
#include "lcgroups/errors.hpp"
#include "lcgroups/group.hpp"

using namespace lcg;

namespace {

std::size_t count_order(const FiniteGroup& G, uint32_t k) {
  std::size_t n = 0;
  for (uint32_t i = 0; i < G.order(); ++i)
    if (G.order_of(i) == k) ++n;
  return n;
}

bool commutative(const FiniteGroup& G) {
  for (uint32_t a : G.generator_indices())
    for (uint32_t b : G.generator_indices())
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(cyclic_group(1).order() == 1);
  FiniteGroup c12 = cyclic_group(12);
  CHECK(c12.order() == 12);
  CHECK(c12.exponent() == 12);
  CHECK(c12.degree() == 12);
  CHECK(commutative(c12));
  CHECK_THROWS_AS(cyclic_group(0), InvalidArgumentError);
}

TEST_CASE("dihedral groups") {
  CHECK(dihedral_group(2).order() == 2);
  FiniteGroup v4 = dihedral_group(4);
  CHECK(v4.order() == 4);
  CHECK(v4.exponent() == 2);
  CHECK(commutative(v4));

  FiniteGroup d8 = dihedral_group(8);
  CHECK(d8.order() == 8);
  CHECK(d8.exponent() == 4);
  CHECK_FALSE(commutative(d8));
  CHECK(count_order(d8, 2) == 5);  // r^2 and four reflections

  FiniteGroup d30 = dihedral_group(30);
  CHECK(d30.order() == 30);
  CHECK(count_order(d30, 2) == 15);

  CHECK_THROWS_AS(dihedral_group(7), InvalidArgumentError);
  CHECK_THROWS_AS(dihedral_group(0), InvalidArgumentError);
}

TEST_CASE("dicyclic groups have a unique involution") {
  FiniteGroup q8 = dicyclic_group(2);
  CHECK(q8.order() == 8);
  CHECK(q8.exponent() == 4);
  CHECK_FALSE(commutative(q8));
  CHECK(count_order(q8, 2) == 1);
  CHECK(count_order(q8, 4) == 6);

  FiniteGroup dic3 = dicyclic_group(3);
  CHECK(dic3.order() == 12);
  CHECK(count_order(dic3, 2) == 1);
  CHECK(dic3.exponent() == 12);

  FiniteGroup q16 = dicyclic_group(4);
  CHECK(q16.order() == 16);
  CHECK(count_order(q16, 2) == 1);
  CHECK(q16.exponent() == 8);

  CHECK_THROWS_AS(dicyclic_group(1), InvalidArgumentError);
}

TEST_CASE("symmetric and alternating groups") {
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(2).order() == 1);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  // Factorial growth hits the cap before overflow can.
  CHECK_THROWS_AS(symmetric_group(8), CapExceededError);
  CHECK_THROWS_AS(alternating_group(9), CapExceededError);
}

TEST_CASE("elementary abelian groups") {
  FiniteGroup e = elementary_abelian(3, 2);
  CHECK(e.order() == 9);
  CHECK(e.exponent() == 3);
  CHECK(e.degree() == 6);
  CHECK(commutative(e));
  CHECK(elementary_abelian(2, 3).order() == 8);
  CHECK_THROWS_AS(elementary_abelian(4, 2), InvalidArgumentError);  // p must be prime
  CHECK_THROWS_AS(elementary_abelian(3, 0), InvalidArgumentError);
}

TEST_CASE("Heisenberg groups") {
  FiniteGroup h3 = heisenberg_group(3);
  CHECK(h3.order() == 27);
  CHECK(h3.exponent() == 3);
  CHECK_FALSE(commutative(h3));
  CHECK(center(h3).order() == 3);

  FiniteGroup h2 = heisenberg_group(2);  // isomorphic to the order-8 dihedral group
  CHECK(h2.order() == 8);
  CHECK(h2.exponent() == 4);
  CHECK_THROWS_AS(heisenberg_group(4), InvalidArgumentError);
}

TEST_CASE("wreath products of cyclic p-groups") {
  FiniteGroup w2 = wreath_cyclic(2);
  CHECK(w2.order() == 8);
  CHECK(w2.degree() == 4);
  CHECK(w2.exponent() == 4);

  FiniteGroup w3 = wreath_cyclic(3);
  CHECK(w3.order() == 81);
  CHECK(w3.degree() == 9);
  CHECK(w3.exponent() == 9);
  CHECK(center(w3).order() == 3);

  CHECK_THROWS_AS(wreath_cyclic(5), CapExceededError);  // 5^6 = 15625 over the cap
  CHECK_THROWS_AS(wreath_cyclic(6), InvalidArgumentError);
}

TEST_CASE("direct products embed both factors") {
  FiniteGroup d8 = dihedral_group(8);
  FiniteGroup c3 = cyclic_group(3);
  DirectProduct dp = direct_product(d8, c3);
  CHECK(dp.group.order() == 24);
  CHECK(dp.group.degree() == d8.degree() + c3.degree());
  CHECK(dp.left_degree == d8.degree());

  // Embedded factors commute elementwise and orders multiply coprimely.
  Perm l = dp.embed_left(d8.element(d8.generator_indices()[0]));
  Perm r = dp.embed_right(c3.element(c3.generator_indices()[0]));
  CHECK(compose(l, r) == compose(r, l));
  CHECK(element_order(compose(l, r)) == 12);
  CHECK(dp.group.contains(compose(l, r)));

  CHECK_THROWS_AS(direct_product(symmetric_group(6), symmetric_group(4)), CapExceededError);
}
