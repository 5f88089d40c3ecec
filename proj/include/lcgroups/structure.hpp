#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcgroups/caps.hpp"
#include "lcgroups/group.hpp"

namespace lcg {

// Surjective homomorphism from `source` onto `image` with the given kernel.
// `forward` maps source element indices to image element indices.
struct Epimorphism {
  FiniteGroup source;
  Subgroup kernel;  // subgroup of source
  FiniteGroup image;
  std::vector<uint32_t> forward;

  uint32_t map_index(uint32_t i) const { return forward[i]; }
  Perm map(const Perm& p) const;

  // Full preimage of a subgroup of the image.
  Subgroup pullback(const Subgroup& s) const;

  // Image of a subgroup of the source (a subgroup of `image`).
  Subgroup push_forward(const Subgroup& s) const;
};

// The quotient of G by a normal subgroup N, realized by the action of G on
// the cosets of N (so the image is again a concrete permutation group).
// Quotient by the trivial subgroup returns G itself with the identity map.
// Throws InvalidArgumentError when N is not normal.
Epimorphism quotient(const FiniteGroup& G, const Subgroup& N, std::size_t order_cap = Caps{}.order);

// The identity map of G viewed as an Epimorphism with trivial kernel.
Epimorphism identity_epimorphism(const FiniteGroup& G);

// Upper central series 1 = Z_0 <= Z_1 <= ... ; each term is the full
// preimage of the center of G/previous.  Stops when it reaches G
// (reaches_whole, nilpotency_class = number of steps) or stabilizes short of
// G (reaches_whole = false).
struct CentralSeries {
  std::vector<Subgroup> terms;
  bool reaches_whole = false;
  std::optional<uint32_t> nilpotency_class;
};

CentralSeries upper_central_series(const FiniteGroup& G, std::size_t order_cap = Caps{}.order);

bool is_nilpotent(const FiniteGroup& G, std::size_t order_cap = Caps{}.order);
std::optional<uint32_t> nilpotency_class(const FiniteGroup& G,
                                         std::size_t order_cap = Caps{}.order);

// Derived series G >= [G,G] >= ... ; solvable iff it reaches the trivial group.
bool is_solvable(const FiniteGroup& G);

// Supersolvability by descent: a nontrivial supersolvable group has a normal
// subgroup of prime order, and any quotient of a supersolvable group is
// supersolvable -- so following one normal prime-order subgroup (the first in
// canonical order) and recursing on the quotient decides the property.
bool is_supersolvable(const FiniteGroup& G, std::size_t order_cap = Caps{}.order);

// A Sylow p-subgroup, grown deterministically: start from the maximal-order
// p-element that comes first in canonical order, then repeatedly adjoin the
// first p-element of the normalizer not yet inside.  Returns the trivial
// subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& G, uint64_t p);

// Largest normal nilpotent subgroup: the product over p | |G| of the p-cores
// (each p-core is the intersection of the conjugates of a Sylow p-subgroup).
// Normality and nilpotency of the result are re-checked.
Subgroup fitting_subgroup(const FiniteGroup& G, std::size_t order_cap = Caps{}.order);

// Elements of order dividing p^n ("raw" -- not a subgroup in general) and the
// subgroup they generate.
struct OmegaResult {
  std::vector<uint32_t> raw;  // ascending parent indices
  Subgroup generated;
  bool raw_is_subgroup;  // raw set == generated subgroup
};

OmegaResult omega(const FiniteGroup& G, uint64_t p, uint32_t n);
OmegaResult omega(const Subgroup& H, uint64_t p, uint32_t n);

// Subgroup generated by the p^n-th powers.
Subgroup mho(const FiniteGroup& G, uint64_t p, uint32_t n);

// Power-structure regularity for p-groups: every pair x, y satisfies
// (xy)^p = x^p y^p d with d a product of p-th powers drawn from the derived
// subgroup of <x, y>.  Requires |G| to be a power of p.
bool is_regular_p_group(const FiniteGroup& G, uint64_t p);

// Search for a complement witnessing a Frobenius structure with kernel K:
// a subgroup H with |H| = [G:K], H meeting K trivially, and no nontrivial
// element of H commuting with a nontrivial element of K.  When [G:K] is a
// prime power coprime to |K| the Sylow conjugates are the only candidates;
// otherwise every subgroup of the right order is tried (which needs the
// lattice, hence the cap).
struct FrobeniusResult {
  bool is_frobenius = false;
  std::optional<Subgroup> complement;
  std::string detail;
};

FrobeniusResult frobenius_with_kernel(const FiniteGroup& G, const Subgroup& K,
                                      const Caps& caps = {});

// All subgroups, deduplicated, sorted by (order, member vector): the closure
// of the cyclic subgroups under pairwise join.  Throws LatticeCapExceededError
// when |G| exceeds caps.lattice.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t lattice_cap = Caps{}.lattice);

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G,
                                       std::size_t lattice_cap = Caps{}.lattice);

// Maximal proper subgroups.
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& G,
                                        std::size_t lattice_cap = Caps{}.lattice);

// lcm of the element orders of a subgroup (its exponent, without re-enumeration).
uint64_t subgroup_exponent(const Subgroup& H);

}  // namespace lcg
