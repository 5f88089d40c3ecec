#include "doctest.h"

#include <algorithm>
#include <vector>

#include "lcgroups/arith.hpp"
#include "lcgroups/constructors.hpp"
#include "lcgroups/errors.hpp"
#include "lcgroups/group_expr.hpp"
#include "lcgroups/lcm.hpp"
#include "lcgroups/structure.hpp"

using namespace lcg;

namespace {

FiniteGroup build(const char* expr) { return build_group_expr(expr); }

// Definition of membership, written independently of the library routine:
// quantify over every h in <x> and every y in G directly.
bool naive_member(const FiniteGroup& G, uint32_t x) {
  uint32_t h = 0;
  do {
    for (uint32_t y = 0; y < G.order(); ++y) {
      uint64_t target = lcm_checked(G.order_of(h), G.order_of(y));
      if (target % G.order_of(G.mul(h, y)) != 0) return false;
    }
    h = G.mul(h, x);
  } while (h != 0);
  return true;
}

std::vector<uint32_t> naive_set(const FiniteGroup& G) {
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < G.order(); ++x)
    if (naive_member(G, x)) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("lcm_set agrees with the direct double loop") {
  for (const char* expr : {"Dih(8)", "Sym(3)", "Alt(4)", "Dic(2)", "Cyc(12)", "Dih(12)",
                           "Heis(3)", "Sym(4)", "Dic(3)", "Wr(2)"}) {
    CAPTURE(expr);
    FiniteGroup G = build(expr);
    CHECK(lcm_set(G) == naive_set(G));
  }
}

TEST_CASE("frozen lcm set sizes") {
  auto size_of = [](const char* e) { return lcm_set(build(e)).size(); };
  CHECK(size_of("Dih(8)") == 4);
  CHECK(size_of("Sym(3)") == 3);
  CHECK(size_of("Alt(4)") == 4);
  CHECK(size_of("Dic(2)") == 8);
  CHECK(size_of("Heis(3)") == 27);
  CHECK(size_of("Sym(4)") == 1);
  CHECK(size_of("Alt(5)") == 1);
  CHECK(size_of("Dic(4)") == 8);
  CHECK(size_of("Wr(3)") == 45);
  CHECK(size_of("prod(Dih(8),Dih(8))") == 32);
  CHECK(size_of("prod(Dih(8),Cyc(3))") == 12);
  CHECK(size_of("Dih(12)") == 6);
  CHECK(size_of("Dih(10)") == 5);
}

TEST_CASE("the lcm set of the order-8 dihedral group is its rotation subgroup") {
  FiniteGroup d8 = build("Dih(8)");
  Subgroup rot = subgroup_generated(d8, {d8.generator_indices()[0]});
  CHECK(lcm_set(d8) == rot.members());
  CHECK(lc_subgroup(d8) == rot);
}

TEST_CASE("witnesses report the first failing pair") {
  FiniteGroup d8 = build("Dih(8)");
  uint32_t s = d8.generator_indices()[1];
  LcmWitness w = lcm_member(d8, s);
  CHECK_FALSE(w.member);
  CHECK(w.x == s);
  // The recorded pair really violates the divisibility.
  CHECK(lcm_checked(w.order_h, w.order_y) % w.order_hy != 0);
  CHECK(d8.order_of(w.h) == w.order_h);
  CHECK(d8.order_of(d8.mul(w.h, w.y)) == w.order_hy);

  LcmWitness ok = lcm_member(d8, d8.generator_indices()[0]);
  CHECK(ok.member);
}

TEST_CASE("lcm_set is closed under inversion and conjugation") {
  for (const char* expr : {"Dih(12)", "Alt(4)", "prod(Dih(8),Dih(8))"}) {
    FiniteGroup G = build(expr);
    std::vector<uint32_t> ls = lcm_set(G);
    for (uint32_t x : ls) {
      CHECK(std::binary_search(ls.begin(), ls.end(), G.inv(x)));
      for (uint32_t g : G.generator_indices())
        CHECK(std::binary_search(ls.begin(), ls.end(), G.conj(x, g)));
    }
  }
}

TEST_CASE("prime-part route equals the direct route") {
  for (const char* expr : {"Dih(8)", "Sym(4)", "Alt(5)", "Cyc(24)", "Dic(3)", "Dih(30)",
                           "prod(Dih(8),Cyc(3))", "Wr(3)", "prod(Heis(3),Cyc(3))"}) {
    CAPTURE(expr);
    FiniteGroup G = build(expr);
    CHECK(lcm_set_fast(G) == lcm_set(G));
  }
}

TEST_CASE("p-local sets") {
  FiniteGroup d12 = build("Dih(12)");
  LcmPResult two = lcm_p_set(d12, 2);
  CHECK(two.conjugation_invariant);
  CHECK(two.generates_p_subgroup);
  LcmPResult three = lcm_p_set(d12, 3);
  CHECK(three.set.size() == 3);
  CHECK(three.generated_order == 3);

  // In a p-group the p-local set with the whole-group quantifier coincides
  // with the plain lcm set.
  FiniteGroup w3 = build("Wr(3)");
  CHECK(lcm_p_set(w3, 3).set == lcm_set(w3));
}

TEST_CASE("power condition verdicts with dual-route agreement") {
  auto holds = [](const char* e) { return is_cp2(build(e)).holds; };
  CHECK(holds("Cyc(4)"));
  CHECK(holds("Cyc(9)"));
  CHECK(holds("Cyc(16)"));
  CHECK(holds("Dic(2)"));
  CHECK(holds("Heis(3)"));
  CHECK(holds("ElemAb(2,2)"));
  CHECK(holds("ElemAb(5,3)"));
  CHECK(holds("Alt(4)"));
  CHECK(holds("prod(Heis(3),Cyc(3))"));
  CHECK(holds("Cyc(1)"));

  CHECK_FALSE(holds("Dih(8)"));
  CHECK_FALSE(holds("Dih(16)"));
  CHECK_FALSE(holds("Dih(32)"));
  CHECK_FALSE(holds("Dic(4)"));
  CHECK_FALSE(holds("Wr(3)"));
  CHECK_FALSE(holds("Sym(3)"));
  CHECK_FALSE(holds("Cyc(6)"));
  CHECK_FALSE(holds("Dih(10)"));
  CHECK_FALSE(holds("prod(Dih(8),Cyc(3))"));
  CHECK_FALSE(holds("Dic(3)"));
}

TEST_CASE("power condition routes and counterexamples") {
  Cp2Verdict a4 = is_cp2(build("Alt(4)"));
  CHECK(a4.route == Cp2Verdict::Route::Frobenius);
  Cp2Verdict q8 = is_cp2(build("Dic(2)"));
  CHECK(q8.route == Cp2Verdict::Route::PowerLayers);

  Cp2Verdict c6 = is_cp2(build("Cyc(6)"));
  REQUIRE_FALSE(c6.holds);
  CHECK(c6.route == Cp2Verdict::Route::None);
  FiniteGroup g = build("Cyc(6)");
  CHECK(g.order_of(g.mul(c6.x, c6.y)) == c6.order_xy);
  CHECK(c6.order_xy > std::max(c6.order_x, c6.order_y));
}

TEST_CASE("LCM-group verdicts (definition vs structure)") {
  auto lcm_grp = [](const char* e) { return is_lcm_group(build(e)); };
  CHECK(lcm_grp("Cyc(24)"));
  CHECK(lcm_grp("Cyc(6)"));
  CHECK(lcm_grp("ElemAb(3,2)"));
  CHECK(lcm_grp("Dih(4)"));
  CHECK(lcm_grp("Dic(2)"));
  CHECK(lcm_grp("Heis(3)"));
  CHECK(lcm_grp("prod(Heis(3),Cyc(3))"));

  CHECK_FALSE(lcm_grp("Dih(8)"));
  CHECK_FALSE(lcm_grp("Dih(16)"));
  CHECK_FALSE(lcm_grp("Dic(4)"));
  CHECK_FALSE(lcm_grp("Sym(3)"));
  CHECK_FALSE(lcm_grp("Sym(4)"));
  CHECK_FALSE(lcm_grp("Alt(4)"));
  CHECK_FALSE(lcm_grp("Alt(5)"));
  CHECK_FALSE(lcm_grp("Wr(3)"));
  CHECK_FALSE(lcm_grp("prod(Dih(8),Dih(8))"));
  CHECK_FALSE(lcm_grp("prod(Dih(8),Cyc(3))"));
  CHECK_FALSE(lcm_grp("Dic(3)"));
}

TEST_CASE("minimality analysis") {
  NlcmReport d8 = nlcm_check(build("Dih(8)"));
  CHECK(d8.is_nlcm);
  CHECK(d8.p_group);
  CHECK(d8.p == 2);
  CHECK(d8.exponent == 4);
  CHECK(d8.maximal_exponent_p_split);
  CHECK(d8.maximal_order == 4);
  CHECK(d8.omega1_generates_group);
  CHECK(d8.omega1_raw_proper);
  CHECK(d8.two_generated);
  CHECK(d8.center_order == 2);
  CHECK(d8.mho1_order == 2);
  CHECK(d8.central_quotient_exponent == 2);
  CHECK(d8.irregular);
  CHECK(d8.proper_subgroups_regular);

  NlcmReport q8 = nlcm_check(build("Dic(2)"));
  CHECK_FALSE(q8.is_nlcm);  // it is an LCM-group outright

  NlcmReport d16 = nlcm_check(build("Dih(16)"));
  CHECK_FALSE(d16.is_nlcm);  // a proper subgroup already fails
  CHECK(d16.has_failing_section);
  CHECK(d16.failing_subgroup_order == 8);
  CHECK(d16.failing_kernel_order == 1);

  NlcmReport s3 = nlcm_check(build("Sym(3)"));
  CHECK(s3.is_nlcm);
  CHECK_FALSE(s3.p_group);
  CHECK(s3.minimal_non_nilpotent);

  NlcmReport a4 = nlcm_check(build("Alt(4)"));
  CHECK(a4.is_nlcm);
  CHECK(a4.minimal_non_nilpotent);

  NlcmReport s4 = nlcm_check(build("Sym(4)"));
  CHECK_FALSE(s4.is_nlcm);
  CHECK(s4.has_failing_section);

  NlcmReport w3 = nlcm_check(build("Wr(3)"));
  CHECK(w3.is_nlcm);
  CHECK(w3.p_group);
  CHECK(w3.exponent == 9);
  CHECK(w3.center_order == 3);
  CHECK(w3.mho1_order == 3);
  CHECK(w3.central_quotient_exponent == 3);
  CHECK(w3.irregular);
  CHECK(w3.proper_subgroups_regular);
  CHECK(w3.maximal_order == 27);
}
