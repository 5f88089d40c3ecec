#include "lcgroups/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lcgroups/arith.hpp"
#include "lcgroups/errors.hpp"

namespace lcg {

namespace {

void require_same_parent(const FiniteGroup& G, const Subgroup& H, const char* what) {
  if (!H.parent().same_underlying(G))
    throw InvalidArgumentError(std::string(what) + ": subgroup belongs to a different group");
}

void require_prime(uint64_t p, const char* what) {
  if (!is_prime(p))
    throw InvalidArgumentError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace

Perm Epimorphism::map(const Perm& p) const {
  auto idx = source.index_of(p);
  if (!idx) throw InvalidArgumentError("map: permutation not in the source group");
  return image.element(forward[*idx]);
}

Subgroup Epimorphism::pullback(const Subgroup& s) const {
  require_same_parent(image, s, "pullback");
  std::vector<uint32_t> members;
  for (uint32_t i = 0; i < source.order(); ++i)
    if (s.contains(forward[i])) members.push_back(i);

  // Kernel generators plus one preimage per generator of s generate the full
  // preimage: they generate a subgroup containing the kernel that maps onto s.
  std::vector<uint32_t> gens = kernel.generators();
  for (uint32_t g : s.generators()) {
    for (uint32_t i = 0; i < source.order(); ++i) {
      if (forward[i] == g) {
        gens.push_back(i);
        break;
      }
    }
  }
  Subgroup out = subgroup_generated(source, gens);
  if (out.members() != members)
    throw InvariantViolationError("pullback generators do not reproduce the preimage");
  return out;
}

Subgroup Epimorphism::push_forward(const Subgroup& s) const {
  require_same_parent(source, s, "push_forward");
  std::vector<uint32_t> members;
  for (uint32_t m : s.members()) members.push_back(forward[m]);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<uint32_t> gens;
  for (uint32_t g : s.generators()) gens.push_back(forward[g]);
  Subgroup out = subgroup_generated(image, gens);
  if (out.members() != members)
    throw InvariantViolationError("push_forward generators do not reproduce the image set");
  return out;
}

Epimorphism identity_epimorphism(const FiniteGroup& G) {
  std::vector<uint32_t> forward(G.order());
  std::iota(forward.begin(), forward.end(), 0u);
  return Epimorphism{G, trivial_subgroup(G), G, std::move(forward)};
}

Epimorphism quotient(const FiniteGroup& G, const Subgroup& N, std::size_t order_cap) {
  require_same_parent(G, N, "quotient");
  if (!is_normal(G, N)) throw InvalidArgumentError("quotient: subgroup is not normal");
  if (N.is_trivial()) return identity_epimorphism(G);

  // Left cosets xN, discovered in element-index order; G acts by left
  // multiplication, so index composition matches compose() (right factor
  // applied first).
  std::size_t n = G.order();
  std::vector<int32_t> coset_of(n, -1);
  std::vector<uint32_t> reps;
  for (uint32_t i = 0; i < n; ++i) {
    if (coset_of[i] >= 0) continue;
    int32_t c = static_cast<int32_t>(reps.size());
    reps.push_back(i);
    for (uint32_t m : N.members()) coset_of[G.mul(i, m)] = c;
  }
  uint32_t k = static_cast<uint32_t>(reps.size());

  auto act = [&](uint32_t g) {
    std::vector<uint32_t> im(k);
    for (uint32_t c = 0; c < k; ++c) im[c] = static_cast<uint32_t>(coset_of[G.mul(g, reps[c])]);
    return Perm(std::move(im));
  };

  std::vector<Perm> gens;
  for (uint32_t g : G.generator_indices()) gens.push_back(act(g));
  FiniteGroup image = FiniteGroup::enumerate(gens, order_cap);
  if (image.order() * N.order() != n)
    throw InvariantViolationError("quotient: coset action has wrong order");

  std::vector<uint32_t> forward(n);
  for (uint32_t i = 0; i < n; ++i) {
    auto idx = image.index_of(act(i));
    if (!idx) throw InvariantViolationError("quotient: element image not in coset-action group");
    forward[i] = *idx;
    if ((forward[i] == 0) != N.contains(i))
      throw InvariantViolationError("quotient: kernel mismatch");
  }
  return Epimorphism{G, N, std::move(image), std::move(forward)};
}

CentralSeries upper_central_series(const FiniteGroup& G, std::size_t order_cap) {
  CentralSeries out;
  out.terms.push_back(trivial_subgroup(G));
  for (;;) {
    const Subgroup& cur = out.terms.back();
    if (cur.is_whole()) {
      out.reaches_whole = true;
      out.nilpotency_class = static_cast<uint32_t>(out.terms.size() - 1);
      return out;
    }
    Epimorphism epi = cur.is_trivial() ? identity_epimorphism(G) : quotient(G, cur, order_cap);
    Subgroup next = epi.pullback(center(epi.image));
    if (next.order() == cur.order()) return out;  // stabilized below G
    out.terms.push_back(next);
  }
}

bool is_nilpotent(const FiniteGroup& G, std::size_t order_cap) {
  return upper_central_series(G, order_cap).reaches_whole;
}

std::optional<uint32_t> nilpotency_class(const FiniteGroup& G, std::size_t order_cap) {
  return upper_central_series(G, order_cap).nilpotency_class;
}

bool is_solvable(const FiniteGroup& G) {
  std::vector<uint32_t> current(G.order());
  std::iota(current.begin(), current.end(), 0u);
  while (current.size() > 1) {
    std::vector<bool> seen(G.order(), false);
    std::vector<uint32_t> seeds;
    for (uint32_t a : current) {
      for (uint32_t b : current) {
        uint32_t c = G.commutator(a, b);
        if (!seen[c]) {
          seen[c] = true;
          if (c != 0) seeds.push_back(c);
        }
      }
    }
    Subgroup derived = subgroup_generated(G, seeds);
    if (derived.order() == current.size()) return false;  // perfect stage
    current = derived.members();
  }
  return true;
}

bool is_supersolvable(const FiniteGroup& G, std::size_t order_cap) {
  if (G.order() == 1) return true;
  for (uint32_t x : G.canonical_order()) {
    if (!is_prime(G.order_of(x))) continue;
    Subgroup S = subgroup_generated(G, {x});
    if (!is_normal(G, S)) continue;
    return is_supersolvable(quotient(G, S, order_cap).image, order_cap);
  }
  return false;
}

Subgroup sylow_subgroup(const FiniteGroup& G, uint64_t p) {
  require_prime(p, "sylow_subgroup");
  uint64_t target = p_part(G.order(), p);
  if (target == 1) return trivial_subgroup(G);

  uint32_t seed = 0;
  uint64_t best = 1;
  for (uint32_t x : G.canonical_order()) {
    uint64_t o = G.order_of(x);
    if (o > 1 && o == p_part(o, p) && o > best) {
      best = o;
      seed = x;
    }
  }
  if (best == 1) throw InvariantViolationError("sylow_subgroup: no p-element found");

  Subgroup P = subgroup_generated(G, {seed});
  while (P.order() < target) {
    Subgroup Nr = normalizer(G, P);
    bool grown = false;
    for (uint32_t x : G.canonical_order()) {
      uint64_t o = G.order_of(x);
      if (o > 1 && o == p_part(o, p) && Nr.contains(x) && !P.contains(x)) {
        std::vector<uint32_t> gens = P.generators();
        gens.push_back(x);
        P = subgroup_generated(G, gens);
        grown = true;
        break;
      }
    }
    if (!grown)
      throw InvariantViolationError("sylow_subgroup: stuck below the full p-part");
    if (P.order() != p_part(P.order(), p))
      throw InvariantViolationError("sylow_subgroup: accretion left the p-elements");
  }
  return P;
}

Subgroup fitting_subgroup(const FiniteGroup& G, std::size_t order_cap) {
  std::vector<uint32_t> seeds;
  for (uint64_t p : prime_divisors(G.order())) {
    Subgroup P = sylow_subgroup(G, p);
    std::vector<uint32_t> core = P.members();
    for (uint32_t g = 0; g < G.order() && core.size() > 1; ++g) {
      std::vector<uint32_t> conj;
      conj.reserve(P.order());
      for (uint32_t m : P.members()) conj.push_back(G.conj(m, g));
      std::sort(conj.begin(), conj.end());
      std::vector<uint32_t> inter;
      std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(),
                            std::back_inserter(inter));
      core = std::move(inter);
    }
    for (uint32_t m : core)
      if (m != 0) seeds.push_back(m);
  }
  Subgroup F = subgroup_generated(G, seeds);
  if (!is_normal(G, F))
    throw InvariantViolationError("fitting_subgroup: result is not normal");
  if (!is_nilpotent(F.as_group(order_cap), order_cap))
    throw InvariantViolationError("fitting_subgroup: result is not nilpotent");
  return F;
}

OmegaResult omega(const FiniteGroup& G, uint64_t p, uint32_t n) {
  return omega(whole_subgroup(G), p, n);
}

OmegaResult omega(const Subgroup& H, uint64_t p, uint32_t n) {
  require_prime(p, "omega");
  uint64_t pn = pow_checked(p, n);
  std::vector<uint32_t> raw;
  for (uint32_t m : H.members())
    if (pn % H.parent().order_of(m) == 0) raw.push_back(m);
  Subgroup generated = subgroup_generated(H.parent(), raw);
  if (!subgroup_le(generated, H))
    throw InvariantViolationError("omega: generated subgroup escaped the ambient subgroup");
  bool closed = generated.order() == raw.size();
  return OmegaResult{std::move(raw), std::move(generated), closed};
}

Subgroup mho(const FiniteGroup& G, uint64_t p, uint32_t n) {
  require_prime(p, "mho");
  uint64_t pn = pow_checked(p, n);
  std::vector<bool> seen(G.order(), false);
  std::vector<uint32_t> seeds;
  for (uint32_t i = 0; i < G.order(); ++i) {
    uint32_t v = G.power(i, pn);
    if (!seen[v]) {
      seen[v] = true;
      if (v != 0) seeds.push_back(v);
    }
  }
  return subgroup_generated(G, seeds);
}

bool is_regular_p_group(const FiniteGroup& G, uint64_t p) {
  require_prime(p, "is_regular_p_group");
  if (G.order() != p_part(G.order(), p))
    throw InvalidArgumentError("is_regular_p_group: group order is not a power of " +
                               std::to_string(p));
  // d-target per generated pair subgroup: p-th powers of its derived subgroup.
  std::unordered_map<std::vector<uint32_t>, std::vector<uint32_t>, IndexVecHash> cache;
  for (uint32_t x = 1; x < G.order(); ++x) {
    for (uint32_t y = 1; y < G.order(); ++y) {
      if (x == y) continue;  // (xx)^p = x^p x^p exactly
      Subgroup H = subgroup_generated(G, {x, y});
      auto it = cache.find(H.members());
      if (it == cache.end()) {
        std::vector<bool> seen(G.order(), false);
        std::vector<uint32_t> comms;
        for (uint32_t a : H.members()) {
          for (uint32_t b : H.members()) {
            uint32_t c = G.commutator(a, b);
            if (!seen[c]) {
              seen[c] = true;
              if (c != 0) comms.push_back(c);
            }
          }
        }
        Subgroup derived = subgroup_generated(G, comms);
        std::vector<uint32_t> pow_seeds;
        std::fill(seen.begin(), seen.end(), false);
        for (uint32_t m : derived.members()) {
          uint32_t v = G.power(m, p);
          if (!seen[v]) {
            seen[v] = true;
            if (v != 0) pow_seeds.push_back(v);
          }
        }
        Subgroup target = subgroup_generated(G, pow_seeds);
        it = cache.emplace(H.members(), target.members()).first;
      }
      uint32_t lhs = G.power(G.mul(x, y), p);
      uint32_t rhs = G.mul(G.power(x, p), G.power(y, p));
      uint32_t d = G.mul(G.inv(rhs), lhs);
      if (!std::binary_search(it->second.begin(), it->second.end(), d)) return false;
    }
  }
  return true;
}

FrobeniusResult frobenius_with_kernel(const FiniteGroup& G, const Subgroup& K, const Caps& caps) {
  require_same_parent(G, K, "frobenius_with_kernel");
  if (K.is_trivial() || K.is_whole())
    return {false, std::nullopt, "kernel must be nontrivial and proper"};
  if (!is_normal(G, K)) return {false, std::nullopt, "kernel is not normal"};
  std::size_t m = G.order() / K.order();

  std::vector<Subgroup> candidates;
  uint64_t q = 0;
  if (std::gcd<uint64_t>(m, K.order()) == 1 && is_prime_power(m, &q)) {
    // Any complement would be a Sylow q-subgroup; try all conjugates.
    Subgroup Q = sylow_subgroup(G, q);
    std::vector<std::vector<uint32_t>> member_sets;
    for (uint32_t g = 0; g < G.order(); ++g) {
      std::vector<uint32_t> conj;
      conj.reserve(Q.order());
      for (uint32_t x : Q.members()) conj.push_back(G.conj(x, g));
      std::sort(conj.begin(), conj.end());
      member_sets.push_back(std::move(conj));
    }
    std::sort(member_sets.begin(), member_sets.end());
    member_sets.erase(std::unique(member_sets.begin(), member_sets.end()), member_sets.end());
    for (auto& ms : member_sets) {
      std::vector<uint32_t> gens = ms;
      candidates.emplace_back(G, std::move(ms), std::move(gens));
    }
  } else {
    for (const Subgroup& H : all_subgroups(G, caps.lattice))
      if (H.order() == m) candidates.push_back(H);
  }

  for (const Subgroup& H : candidates) {
    if (intersect(H, K).order() != 1) continue;
    bool fpf = true;
    for (uint32_t h : H.members()) {
      if (h == 0) continue;
      for (uint32_t k : K.members()) {
        if (k == 0) continue;
        if (G.mul(h, k) == G.mul(k, h)) {
          fpf = false;
          break;
        }
      }
      if (!fpf) break;
    }
    if (fpf)
      return {true, H, "fixed-point-free complement of order " + std::to_string(m)};
  }
  return {false, std::nullopt, "no fixed-point-free complement of order " + std::to_string(m)};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t lattice_cap) {
  if (G.order() > lattice_cap)
    throw LatticeCapExceededError("subgroup lattice of a group of order " +
                                      std::to_string(G.order()) + " exceeds lattice cap " +
                                      std::to_string(lattice_cap),
                                  lattice_cap);

  std::vector<Subgroup> list;
  std::unordered_map<std::vector<uint32_t>, std::size_t, IndexVecHash> seen;
  auto add = [&](Subgroup s) -> bool {
    if (seen.count(s.members())) return false;
    seen.emplace(s.members(), list.size());
    list.push_back(std::move(s));
    return true;
  };

  for (uint32_t x = 0; x < G.order(); ++x) add(subgroup_generated(G, {x}));

  // Close the cyclic subgroups under pairwise join; newly found subgroups
  // re-enter the pairing as the outer index advances.
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (subgroup_le(list[j], list[i]) || subgroup_le(list[i], list[j])) continue;
      std::vector<uint32_t> gens = list[i].generators();
      for (uint32_t g : list[j].generators()) gens.push_back(g);
      add(subgroup_generated(G, gens));
    }
  }

  std::sort(list.begin(), list.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return list;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, std::size_t lattice_cap) {
  std::vector<Subgroup> out;
  for (const Subgroup& H : all_subgroups(G, lattice_cap))
    if (is_normal(G, H)) out.push_back(H);
  return out;
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& G, std::size_t lattice_cap) {
  std::vector<Subgroup> subs = all_subgroups(G, lattice_cap);
  std::vector<Subgroup> out;
  for (const Subgroup& H : subs) {
    if (H.is_whole()) continue;
    bool maximal = true;
    for (const Subgroup& K : subs) {
      if (K.is_whole() || K.order() <= H.order()) continue;
      if (subgroup_le(H, K)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(H);
  }
  return out;
}

uint64_t subgroup_exponent(const Subgroup& H) {
  uint64_t e = 1;
  for (uint32_t m : H.members()) e = lcm_checked(e, H.parent().order_of(m));
  return e;
}

}  // namespace lcg
