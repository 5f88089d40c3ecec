#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcgroups/caps.hpp"
#include "lcgroups/group.hpp"

namespace lcg {

// Ascending series 1 = L_0 <= L_1 <= ... where L_{i+1} is the full preimage
// in G of the subgroup generated by the lcm-power set of G / L_i.  The series
// either reaches G (terminated, lc_class = number of steps) or stalls when a
// quotient contributes nothing new.
struct LcSeriesResult {
  std::vector<Subgroup> terms;         // terms[0] is trivial
  std::vector<bool> factor_nilpotent;  // one entry per step: L_{i+1}/L_i nilpotent?
  bool terminated = false;
  std::optional<uint32_t> lc_class;
};

LcSeriesResult lc_series(const FiniteGroup& G, std::size_t order_cap = Caps{}.order);

// For a nontrivial p-group: the series must terminate within
// floor(c / (p-1)) + 1 steps, c the nilpotency class.
struct LcBoundCheck {
  bool applies = false;  // nontrivial group of prime-power order
  uint64_t p = 0;
  uint32_t nilpotency = 0;
  uint32_t bound = 0;
  std::optional<uint32_t> lc_class;
  bool within = false;
};

LcBoundCheck lc_class_bound_check(const FiniteGroup& G, std::size_t order_cap = Caps{}.order);

// Ascending chain 1 = N_0 < N_1 < ... < N_k = N with every term normal in H
// and every step of prime index.
struct InvariantTower {
  std::vector<Subgroup> terms;  // subgroups of H
};

// Greedy construction of such a tower for N normal in H: in each quotient
// H / N_i, take the first prime-order subgroup (canonical element order) of
// the image of N that is normal in the quotient, and pull it back.  Because
// the defining property passes to quotients, the greedy choice dead-ends only
// when no tower exists at all.
std::optional<InvariantTower> invariant_prime_tower(const FiniteGroup& H, const Subgroup& N,
                                                    const Caps& caps = {});

// Every tower term must sit inside the matching term of the LC-series of H
// (whose value freezes once the series stalls).
bool tower_within_lc_series(const FiniteGroup& H, const InvariantTower& tower,
                            const Caps& caps = {});

}  // namespace lcg
