#include "lcgroups/lc_series.hpp"

#include "lcgroups/arith.hpp"
#include "lcgroups/errors.hpp"
#include "lcgroups/lcm.hpp"
#include "lcgroups/structure.hpp"

namespace lcg {

LcSeriesResult lc_series(const FiniteGroup& G, std::size_t order_cap) {
  LcSeriesResult out;
  out.terms.push_back(trivial_subgroup(G));
  for (;;) {
    const Subgroup& cur = out.terms.back();
    if (cur.is_whole()) {
      out.terminated = true;
      out.lc_class = static_cast<uint32_t>(out.terms.size() - 1);
      return out;
    }
    Epimorphism epi = cur.is_trivial() ? identity_epimorphism(G) : quotient(G, cur, order_cap);
    Subgroup step = lc_subgroup(epi.image);
    if (step.is_trivial()) return out;  // stalled below G
    out.factor_nilpotent.push_back(is_nilpotent(step.as_group(order_cap), order_cap));
    out.terms.push_back(epi.pullback(step));
  }
}

LcBoundCheck lc_class_bound_check(const FiniteGroup& G, std::size_t order_cap) {
  LcBoundCheck out;
  if (G.order() < 2 || !is_prime_power(G.order(), &out.p)) return out;
  out.applies = true;
  auto t = nilpotency_class(G, order_cap);
  if (!t) throw InvariantViolationError("a prime-power-order group must be nilpotent");
  out.nilpotency = *t;
  out.bound = static_cast<uint32_t>(*t / (out.p - 1)) + 1;
  LcSeriesResult series = lc_series(G, order_cap);
  out.lc_class = series.lc_class;
  out.within = series.terminated && *series.lc_class <= out.bound;
  return out;
}

std::optional<InvariantTower> invariant_prime_tower(const FiniteGroup& H, const Subgroup& N,
                                                    const Caps& caps) {
  if (!N.parent().same_underlying(H))
    throw InvalidArgumentError("invariant_prime_tower: subgroup of a different group");
  if (!is_normal(H, N))
    throw InvalidArgumentError("invariant_prime_tower: subgroup is not normal");

  InvariantTower tower;
  tower.terms.push_back(trivial_subgroup(H));
  while (tower.terms.back().order() < N.order()) {
    const Subgroup& cur = tower.terms.back();
    Epimorphism epi = cur.is_trivial() ? identity_epimorphism(H) : quotient(H, cur, caps.order);
    Subgroup n_image = epi.push_forward(N);
    bool extended = false;
    for (uint32_t z : epi.image.canonical_order()) {
      if (!is_prime(epi.image.order_of(z)) || !n_image.contains(z)) continue;
      Subgroup zs = subgroup_generated(epi.image, {z});
      if (!is_normal(epi.image, zs)) continue;
      Subgroup next = epi.pullback(zs);
      if (!is_normal(H, next))
        throw InvariantViolationError("pullback of a normal subgroup must be normal");
      tower.terms.push_back(next);
      extended = true;
      break;
    }
    if (!extended) return std::nullopt;
  }
  return tower;
}

bool tower_within_lc_series(const FiniteGroup& H, const InvariantTower& tower, const Caps& caps) {
  LcSeriesResult lc = lc_series(H, caps.order);
  for (std::size_t i = 0; i < tower.terms.size(); ++i) {
    const Subgroup& level = lc.terms[std::min(i, lc.terms.size() - 1)];
    if (!subgroup_le(tower.terms[i], level)) return false;
  }
  return true;
}

}  // namespace lcg
