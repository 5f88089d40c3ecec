#include "lcgroups/lcm.hpp"

#include <algorithm>
#include <unordered_map>

#include "lcgroups/arith.hpp"
#include "lcgroups/errors.hpp"
#include "lcgroups/structure.hpp"

namespace lcg {

namespace {

// Member indices of <x>, in power order starting at the identity.
std::vector<uint32_t> cyclic_members(const FiniteGroup& G, uint32_t x) {
  std::vector<uint32_t> out{0};
  uint32_t cur = x;
  while (cur != 0) {
    out.push_back(cur);
    cur = G.mul(cur, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool divides(uint64_t a, uint64_t b) { return b % a == 0; }

// Shared verdict for all generators of one cyclic subgroup: the membership
// condition quantifies over <x>, so it only depends on the subgroup.
struct CyclicVerdictCache {
  std::unordered_map<std::vector<uint32_t>, bool, IndexVecHash> map;
};

// Does every h in `powers` and y in `ys` satisfy o(hy) | lcm(o(h), o(y))?
bool cyclic_passes(const FiniteGroup& G, const std::vector<uint32_t>& powers,
                   const std::vector<uint32_t>& ys) {
  for (uint32_t h : powers) {
    uint64_t oh = G.order_of(h);
    for (uint32_t y : ys) {
      uint64_t oy = G.order_of(y);
      if (!divides(G.order_of(G.mul(h, y)), lcm_checked(oh, oy))) return false;
    }
  }
  return true;
}

std::vector<uint32_t> all_indices(const FiniteGroup& G) {
  std::vector<uint32_t> out(G.order());
  for (uint32_t i = 0; i < G.order(); ++i) out[i] = i;
  return out;
}

}  // namespace

LcmWitness lcm_member(const FiniteGroup& G, uint32_t x) {
  if (x >= G.order()) throw InvalidArgumentError("lcm_member: element index out of range");
  LcmWitness w;
  w.x = x;
  // Canonical scan order so the reported pair is deterministic.
  std::vector<uint32_t> powers = cyclic_members(G, x);
  std::sort(powers.begin(), powers.end(),
            [&](uint32_t a, uint32_t b) { return G.canonical_rank(a) < G.canonical_rank(b); });
  for (uint32_t h : powers) {
    uint64_t oh = G.order_of(h);
    for (uint32_t y : G.canonical_order()) {
      uint64_t oy = G.order_of(y);
      uint64_t ohy = G.order_of(G.mul(h, y));
      if (!divides(ohy, lcm_checked(oh, oy))) {
        w.member = false;
        w.h = h;
        w.y = y;
        w.order_h = oh;
        w.order_y = oy;
        w.order_hy = ohy;
        return w;
      }
    }
  }
  return w;
}

std::vector<uint32_t> lcm_set(const FiniteGroup& G) {
  CyclicVerdictCache cache;
  std::vector<uint32_t> ys = all_indices(G);
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < G.order(); ++x) {
    std::vector<uint32_t> powers = cyclic_members(G, x);
    auto it = cache.map.find(powers);
    if (it == cache.map.end())
      it = cache.map.emplace(powers, cyclic_passes(G, powers, ys)).first;
    if (it->second) out.push_back(x);
  }
  return out;
}

Subgroup lc_subgroup(const FiniteGroup& G) { return subgroup_generated(G, lcm_set(G)); }

LcmPResult lcm_p_set(const FiniteGroup& G, uint64_t p) {
  if (!is_prime(p)) throw InvalidArgumentError("lcm_p_set: " + std::to_string(p) + " is not prime");
  std::vector<uint32_t> pelems;
  for (uint32_t i = 0; i < G.order(); ++i) {
    uint64_t o = G.order_of(i);
    if (o == p_part(o, p)) pelems.push_back(i);
  }

  LcmPResult res;
  CyclicVerdictCache cache;
  for (uint32_t x : pelems) {
    std::vector<uint32_t> powers = cyclic_members(G, x);
    auto it = cache.map.find(powers);
    if (it == cache.map.end())
      it = cache.map.emplace(powers, cyclic_passes(G, powers, pelems)).first;
    if (it->second) res.set.push_back(x);
  }

  for (uint32_t s : res.set) {
    for (uint32_t g : G.generator_indices()) {
      if (!std::binary_search(res.set.begin(), res.set.end(), G.conj(s, g))) {
        res.conjugation_invariant = false;
        break;
      }
    }
    if (!res.conjugation_invariant) break;
  }

  Subgroup gen = subgroup_generated(G, res.set);
  res.generated_order = gen.order();
  res.generates_p_subgroup =
      gen.order() == 1 || (is_prime_power(gen.order()) && p_part(gen.order(), p) == gen.order());
  return res;
}

std::vector<uint32_t> lcm_set_fast(const FiniteGroup& G) {
  std::unordered_map<uint64_t, std::vector<uint32_t>> locals;
  for (uint64_t p : prime_divisors(G.order())) locals.emplace(p, lcm_p_set(G, p).set);

  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < G.order(); ++x) {
    uint64_t o = G.order_of(x);
    bool ok = true;
    for (const auto& [p, e] : factorize(o)) {
      uint64_t pa = pow_checked(p, static_cast<uint32_t>(e));
      uint64_t m = o / pa;
      // x = x_p * x_{p'} with x_p = x^(m * (m^{-1} mod p^a)): a power of x
      // that is a p-element congruent to x modulo p'-parts.
      uint64_t exp = m * mod_inverse(m % pa, pa);
      uint32_t xp = G.power(x, exp);
      const auto& sp = locals.at(p);
      if (!std::binary_search(sp.begin(), sp.end(), xp)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

Cp2Verdict is_cp2(const FiniteGroup& G, const Caps& caps) {
  Cp2Verdict v;

  // Route one: the definition, scanning pairs in canonical order.
  bool by_definition = true;
  for (uint32_t x : G.canonical_order()) {
    for (uint32_t y : G.canonical_order()) {
      if (x == y) continue;
      uint64_t ox = G.order_of(x), oy = G.order_of(y);
      uint64_t oxy = G.order_of(G.mul(x, y));
      if (oxy > std::max(ox, oy)) {
        by_definition = false;
        v.x = x;
        v.y = y;
        v.order_x = ox;
        v.order_y = oy;
        v.order_xy = oxy;
        break;
      }
    }
    if (!by_definition) break;
  }

  // Route two: structure.
  bool by_structure = false;
  Cp2Verdict::Route route = Cp2Verdict::Route::None;
  std::string detail;
  uint64_t p = 0;
  if (G.order() == 1) {
    by_structure = true;
    route = Cp2Verdict::Route::PowerLayers;
    detail = "trivial group";
  } else if (is_prime_power(G.order(), &p)) {
    by_structure = true;
    uint64_t exp = G.exponent();
    for (uint64_t pn = p; pn < exp && by_structure; pn *= p) {
      std::vector<uint32_t> layer;
      for (uint32_t i = 0; i < G.order(); ++i)
        if (pn % G.order_of(i) == 0) layer.push_back(i);
      for (std::size_t a = 0; a < layer.size() && by_structure; ++a)
        for (std::size_t b = 0; b < layer.size(); ++b)
          if (!std::binary_search(layer.begin(), layer.end(), G.mul(layer[a], layer[b]))) {
            by_structure = false;
            detail = "elements of order dividing " + std::to_string(pn) +
                     " are not closed under multiplication";
            break;
          }
    }
    if (by_structure) {
      route = Cp2Verdict::Route::PowerLayers;
      detail = "p-group with every power layer a subgroup";
    }
  } else {
    auto factors = factorize(G.order());
    if (factors.size() != 2) {
      detail = "order has more than two prime divisors";
    } else {
      uint64_t small_p = factors[0].first;
      Subgroup F = fitting_subgroup(G, caps.order);
      if (F.order() != p_part(G.order(), small_p)) {
        detail = "Fitting subgroup is not the full power of the smaller prime";
      } else {
        FrobeniusResult fr = frobenius_with_kernel(G, F, caps);
        if (!fr.is_frobenius) {
          detail = "no Frobenius structure over the Fitting subgroup: " + fr.detail;
        } else {
          bool cyclic = false;
          for (uint32_t m : fr.complement->members())
            if (G.order_of(m) == fr.complement->order()) cyclic = true;
          if (!cyclic) {
            detail = "Frobenius complement is not cyclic";
          } else {
            by_structure = true;
            route = Cp2Verdict::Route::Frobenius;
            detail = "Frobenius group with nilpotent p-kernel and cyclic complement";
          }
        }
      }
    }
  }

  if (by_definition != by_structure)
    throw InvariantViolationError(
        "power-condition verdict differs between definition and structure routes");

  v.holds = by_definition;
  v.route = v.holds ? route : Cp2Verdict::Route::None;
  v.detail = v.holds ? detail : ("counterexample found; structure route agrees: " + detail);
  return v;
}

bool is_lcm_group(const FiniteGroup& G, const Caps& caps) {
  bool by_definition = lcm_set(G).size() == G.order();

  bool by_structure = is_nilpotent(G, caps.order);
  if (by_structure) {
    for (uint64_t p : prime_divisors(G.order())) {
      FiniteGroup S = sylow_subgroup(G, p).as_group(caps.order);
      if (!is_cp2(S, caps).holds) {
        by_structure = false;
        break;
      }
    }
  }

  if (by_definition != by_structure)
    throw InvariantViolationError(
        "LCM-group verdict differs between definition and structure routes");
  return by_definition;
}

NlcmReport nlcm_check(const FiniteGroup& G, const Caps& caps) {
  NlcmReport r;
  if (is_lcm_group(G, caps)) {
    r.reason = "the group itself satisfies the LCM property";
    return r;
  }

  std::vector<Subgroup> subs = all_subgroups(G, caps.lattice);

  // Proper subgroups, smallest first.
  for (const Subgroup& S : subs) {
    if (S.is_whole() || S.is_trivial()) continue;
    if (!is_lcm_group(S.as_group(caps.order), caps)) {
      r.reason = "a proper subgroup of order " + std::to_string(S.order()) +
                 " already fails the LCM property";
      r.has_failing_section = true;
      r.failing_subgroup_order = S.order();
      r.failing_kernel_order = 1;
      return r;
    }
  }

  // Proper quotients, smallest kernel first.
  for (const Subgroup& N : subs) {
    if (N.is_whole() || N.is_trivial() || !is_normal(G, N)) continue;
    if (!is_lcm_group(quotient(G, N, caps.order).image, caps)) {
      r.reason = "the quotient by a normal subgroup of order " + std::to_string(N.order()) +
                 " fails the LCM property";
      r.has_failing_section = true;
      r.failing_subgroup_order = G.order();
      r.failing_kernel_order = N.order();
      return r;
    }
  }

  // Quotients of proper subgroups.
  for (const Subgroup& S : subs) {
    if (S.is_whole() || S.order() < 4) continue;  // smaller sections are cyclic images
    FiniteGroup H = S.as_group(caps.order);
    for (const Subgroup& N : all_subgroups(H, caps.lattice)) {
      if (N.is_whole() || N.is_trivial() || !is_normal(H, N)) continue;
      if (!is_lcm_group(quotient(H, N, caps.order).image, caps)) {
        r.reason = "a section of shape " + std::to_string(S.order()) + "/" +
                   std::to_string(N.order()) + " fails the LCM property";
        r.has_failing_section = true;
        r.failing_subgroup_order = S.order();
        r.failing_kernel_order = N.order();
        return r;
      }
    }
  }

  r.is_nlcm = true;
  r.reason = "not an LCM-group, but every proper section is";

  r.p_group = is_prime_power(G.order(), &r.p);
  if (!r.p_group) {
    bool all_maximal_nilpotent = true;
    for (const Subgroup& M : maximal_subgroups(G, caps.lattice))
      if (!is_nilpotent(M.as_group(caps.order), caps.order)) all_maximal_nilpotent = false;
    r.minimal_non_nilpotent = !is_nilpotent(G, caps.order) && all_maximal_nilpotent;
    return r;
  }

  uint64_t p = r.p;
  r.exponent = G.exponent();

  // A maximal subgroup of exponent p split off by an order-p element.
  std::optional<Subgroup> chosen_h;
  uint32_t chosen_u = 0;
  for (const Subgroup& M : maximal_subgroups(G, caps.lattice)) {
    if (subgroup_exponent(M) != p) continue;
    for (uint32_t u : G.canonical_order()) {
      if (G.order_of(u) == p && !M.contains(u)) {
        // Maximal subgroups of a p-group have index p, so H<u> is everything.
        r.maximal_exponent_p_split = M.order() * p == G.order();
        r.maximal_order = M.order();
        chosen_h = M;
        chosen_u = u;
        break;
      }
    }
    if (chosen_h) break;
  }

  OmegaResult om = omega(G, p, 1);
  r.omega1_generates_group = om.generated.is_whole();
  r.omega1_raw_proper = om.raw.size() < G.order();

  if (chosen_h) {
    for (uint32_t h : chosen_h->members()) {
      if (subgroup_generated(G, {h, chosen_u}).is_whole()) {
        r.two_generated = true;
        break;
      }
    }
  }
  if (!r.two_generated) {
    for (uint32_t a : G.canonical_order()) {
      for (uint32_t b : G.canonical_order()) {
        if (a != b && subgroup_generated(G, {a, b}).is_whole()) {
          r.two_generated = true;
          break;
        }
      }
      if (r.two_generated) break;
    }
  }

  Subgroup Z = center(G);
  r.center_order = Z.order();
  r.mho1_order = mho(G, p, 1).order();
  r.central_quotient_exponent = quotient(G, Z, caps.order).image.exponent();

  r.irregular = !is_regular_p_group(G, p);
  r.proper_subgroups_regular = true;
  for (const Subgroup& S : subs) {
    if (S.is_whole()) continue;
    if (!is_regular_p_group(S.as_group(caps.order), p)) {
      r.proper_subgroups_regular = false;
      break;
    }
  }
  return r;
}

}  // namespace lcg
