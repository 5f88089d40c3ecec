#include "doctest.h"

#include <vector>

#include "lcgroups/constructors.hpp"
#include "lcgroups/errors.hpp"
#include "lcgroups/group_expr.hpp"
#include "lcgroups/lc_series.hpp"
#include "lcgroups/lcm.hpp"
#include "lcgroups/structure.hpp"

using namespace lcg;

namespace {

FiniteGroup build(const char* expr) { return build_group_expr(expr); }

std::vector<std::size_t> series_orders(const char* expr) {
  std::vector<std::size_t> out;
  for (const Subgroup& t : lc_series(build(expr)).terms) out.push_back(t.order());
  return out;
}

}  // namespace

TEST_CASE("frozen LC-series shapes") {
  using V = std::vector<std::size_t>;
  CHECK(series_orders("Dih(12)") == V{1, 6, 12});
  CHECK(series_orders("Sym(3)") == V{1, 3, 6});
  CHECK(series_orders("Dih(10)") == V{1, 5, 10});
  CHECK(series_orders("Dih(30)") == V{1, 15, 30});
  CHECK(series_orders("Dih(8)") == V{1, 4, 8});
  CHECK(series_orders("Dih(16)") == V{1, 8, 16});
  CHECK(series_orders("Dic(4)") == V{1, 8, 16});
  CHECK(series_orders("Alt(4)") == V{1, 4, 12});
  CHECK(series_orders("Wr(3)") == V{1, 81});
  CHECK(series_orders("prod(Dih(8),Dih(8))") == V{1, 64});
  CHECK(series_orders("Cyc(6)") == V{1, 6});
  CHECK(series_orders("Sym(4)") == V{1});
  CHECK(series_orders("Alt(5)") == V{1});
}

TEST_CASE("termination, classes and factors") {
  LcSeriesResult a4 = lc_series(build("Alt(4)"));
  CHECK(a4.terminated);
  CHECK(a4.lc_class == 2u);
  REQUIRE(a4.factor_nilpotent.size() == 2);
  CHECK(a4.factor_nilpotent[0]);
  CHECK(a4.factor_nilpotent[1]);

  LcSeriesResult s4 = lc_series(build("Sym(4)"));
  CHECK_FALSE(s4.terminated);
  CHECK_FALSE(s4.lc_class.has_value());
  CHECK(s4.factor_nilpotent.empty());

  LcSeriesResult w3 = lc_series(build("Wr(3)"));
  CHECK(w3.terminated);
  CHECK(w3.lc_class == 1u);

  CHECK(lc_series(build("Cyc(1)")).lc_class == 0u);

  // Each term is normal in the whole group and contains the previous one.
  FiniteGroup d12 = build("Dih(12)");
  LcSeriesResult s = lc_series(d12);
  for (std::size_t i = 1; i < s.terms.size(); ++i) {
    CHECK(subgroup_le(s.terms[i - 1], s.terms[i]));
    CHECK(is_normal(d12, s.terms[i]));
  }
  // The first step is the LC-subgroup of the group itself.
  CHECK(s.terms[1] == lc_subgroup(d12));
}

TEST_CASE("prime-power class bound") {
  LcBoundCheck d8 = lc_class_bound_check(build("Dih(8)"));
  CHECK(d8.applies);
  CHECK(d8.p == 2);
  CHECK(d8.nilpotency == 2);
  CHECK(d8.bound == 3);
  CHECK(d8.lc_class == 2u);
  CHECK(d8.within);

  LcBoundCheck w3 = lc_class_bound_check(build("Wr(3)"));
  CHECK(w3.applies);
  CHECK(w3.p == 3);
  CHECK(w3.nilpotency == 3);
  CHECK(w3.bound == 2);
  CHECK(w3.lc_class == 1u);
  CHECK(w3.within);

  LcBoundCheck q16 = lc_class_bound_check(build("Dic(4)"));
  CHECK(q16.applies);
  CHECK(q16.bound == 4);  // nilpotency class 3, p = 2
  CHECK(q16.lc_class == 2u);
  CHECK(q16.within);

  CHECK_FALSE(lc_class_bound_check(build("Sym(3)")).applies);
  CHECK_FALSE(lc_class_bound_check(build("Cyc(1)")).applies);
  CHECK_FALSE(lc_class_bound_check(build("Cyc(12)")).applies);
}

TEST_CASE("invariant prime towers") {
  FiniteGroup d8 = build("Dih(8)");
  Subgroup v4 = normal_closure(d8, {d8.generator_indices()[1]});
  REQUIRE(v4.order() == 4);
  auto tower = invariant_prime_tower(d8, v4);
  REQUIRE(tower.has_value());
  REQUIRE(tower->terms.size() == 3);
  CHECK(tower->terms[0].is_trivial());
  CHECK(tower->terms[1].order() == 2);
  CHECK(tower->terms[2] == v4);
  // The middle term must be normal in the ambient group, which forces the
  // central rotation subgroup rather than a reflection.
  CHECK(tower->terms[1].contains(
      d8.mul(d8.generator_indices()[0], d8.generator_indices()[0])));
  CHECK(tower_within_lc_series(d8, *tower));

  // Whole-group tower of a supersolvable group.
  FiniteGroup d12 = build("Dih(12)");
  auto full = invariant_prime_tower(d12, whole_subgroup(d12));
  REQUIRE(full.has_value());
  CHECK(full->terms.size() == 4);  // 12 = 2*2*3: three prime steps above the trivial term
  CHECK(full->terms.back().is_whole());
  CHECK(tower_within_lc_series(d12, *full));

  // A minimal normal subgroup that is not prime-cyclic-reachable: the Klein
  // four-subgroup of the alternating group has no prime-order subgroup normal
  // in the ambient group, so no tower exists.
  FiniteGroup a4 = build("Alt(4)");
  CHECK_FALSE(invariant_prime_tower(a4, fitting_subgroup(a4)).has_value());

  FiniteGroup s4 = build("Sym(4)");
  Subgroup a4_in_s4 = derived_subgroup(s4);
  REQUIRE(a4_in_s4.order() == 12);
  CHECK_FALSE(invariant_prime_tower(s4, a4_in_s4).has_value());

  // Non-normal input is rejected.
  Subgroup refl = subgroup_generated(d8, {d8.generator_indices()[1]});
  CHECK_THROWS_AS(invariant_prime_tower(d8, refl), InvalidArgumentError);

  // Trivial subgroup: the empty tower.
  auto triv = invariant_prime_tower(d8, trivial_subgroup(d8));
  REQUIRE(triv.has_value());
  CHECK(triv->terms.size() == 1);
  CHECK(tower_within_lc_series(d8, *triv));
}
