#pragma once

#include <cstddef>
#include <cstdint>

#include "lcgroups/caps.hpp"
#include "lcgroups/cayley.hpp"
#include "lcgroups/group.hpp"

namespace lcg {

// Named families of concrete permutation groups.  Every constructor checks
// its parameter range, pre-checks the resulting order against the cap, and
// returns a deterministically enumerated group (fixed generators, fixed BFS).

// Cyclic group of order n >= 1, acting on n points (one point for n = 1).
FiniteGroup cyclic_group(uint64_t n, std::size_t order_cap = Caps{}.order);

// Dihedral group of order m (m even, m >= 2): symmetries of an (m/2)-gon.
// Dih(2) is the cyclic group of order 2 and Dih(4) the Klein four-group,
// realized on 2 and 4 points respectively.
FiniteGroup dihedral_group(uint64_t m, std::size_t order_cap = Caps{}.order);

// Dicyclic group of order 4n, n >= 2 (n = 2 gives the quaternion group,
// n = 4 the generalized quaternion group of order 16).  Built from its
// multiplication table and taken in the regular representation.
FiniteGroup dicyclic_group(uint64_t n, std::size_t order_cap = Caps{}.order);

// Symmetric group on n >= 1 letters.
FiniteGroup symmetric_group(uint64_t n, std::size_t order_cap = Caps{}.order);

// Alternating group on n >= 1 letters.
FiniteGroup alternating_group(uint64_t n, std::size_t order_cap = Caps{}.order);

// Elementary abelian group of order p^k (p prime, k >= 1) on p*k points.
FiniteGroup elementary_abelian(uint64_t p, uint64_t k, std::size_t order_cap = Caps{}.order);

// Heisenberg group modulo a prime p: upper unitriangular 3x3 matrices over
// the field with p elements; order p^3, exponent p for odd p.  Built from its
// multiplication table and taken in the regular representation.
FiniteGroup heisenberg_group(uint64_t p, std::size_t order_cap = Caps{}.order);

// Wreath product of two cyclic groups of prime order p: the Sylow p-subgroup
// of the symmetric group on p^2 letters, acting on p^2 points (order p^(p+1)).
FiniteGroup wreath_cyclic(uint64_t p, std::size_t order_cap = Caps{}.order);

// Direct product acting on the disjoint union of the factors' points, with
// the embeddings of each factor exposed.
struct DirectProduct {
  FiniteGroup group;
  uint32_t left_degree;
  uint32_t right_degree;

  // Lift a permutation of one factor to the product's points.
  Perm embed_left(const Perm& p) const;
  Perm embed_right(const Perm& p) const;
};

DirectProduct direct_product(const FiniteGroup& A, const FiniteGroup& B,
                             std::size_t order_cap = Caps{}.order);

}  // namespace lcg
