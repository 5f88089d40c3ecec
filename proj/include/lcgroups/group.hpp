#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lcgroups/caps.hpp"
#include "lcgroups/perm.hpp"

namespace lcg {

// A finite permutation group, fully enumerated at construction.
//
// Element indices are assigned breadth-first over generator words: index 0 is
// the identity, then products of one generator (ties broken by generator
// position), then words of length two, and so on.  For a fixed generator list
// the numbering is therefore deterministic across runs and platforms.
//
// The handle is an immutable shared pointer; copies are cheap and all derived
// data (inverses, element orders, a multiplication table for small groups,
// the canonical ordering) is computed once.
class FiniteGroup {
 public:
  // Enumerates the closure of `generators` (all of equal degree, at least
  // one).  Throws CapExceededError as soon as more than `order_cap` distinct
  // elements appear.
  static FiniteGroup enumerate(const std::vector<Perm>& generators,
                               std::size_t order_cap = Caps{}.order);

  uint32_t degree() const;
  std::size_t order() const;
  const std::vector<Perm>& elements() const;
  const Perm& element(uint32_t i) const;

  // Indices of the distinct generators, in the order given to enumerate().
  const std::vector<uint32_t>& generator_indices() const;

  std::optional<uint32_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const;

  // Index arithmetic.  mul applies the right factor first, matching compose.
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t conj(uint32_t h, uint32_t g) const;  // g^{-1} h g
  uint32_t power(uint32_t a, uint64_t e) const;
  uint32_t commutator(uint32_t a, uint32_t b) const;  // a^{-1} b^{-1} a b

  uint32_t order_of(uint32_t a) const;  // element order
  uint64_t exponent() const;            // lcm of all element orders

  // All indices sorted by image sequence (lexicographic).  This is the
  // "canonical order" used whenever a deterministic search over elements must
  // not depend on the generating set's BFS numbering.
  const std::vector<uint32_t>& canonical_order() const;
  uint32_t canonical_rank(uint32_t i) const;  // position of i in canonical_order()

  bool is_trivial() const { return order() == 1; }

  // True iff both handles share one underlying element table (same enumeration).
  bool same_underlying(const FiniteGroup& o) const { return d_ == o.d_; }

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Free-function spelling of FiniteGroup::enumerate.
FiniteGroup enumerate_group(const std::vector<Perm>& generators,
                            std::size_t order_cap = Caps{}.order);

// A subgroup of a fixed parent group: the ascending sorted vector of parent
// element indices, plus a generating subset.  The sorted member vector is the
// canonical key -- two Subgroup values of the same parent are equal exactly
// when their member vectors are equal, regardless of generators.
class Subgroup {
 public:
  // `members` must be sorted, closed under the parent's multiplication and
  // contain the identity; `generators` must generate exactly `members`.
  // Both facts are the caller's responsibility (the factory functions below
  // always satisfy them).
  Subgroup(FiniteGroup parent, std::vector<uint32_t> members, std::vector<uint32_t> generators);

  const FiniteGroup& parent() const { return parent_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<uint32_t>& members() const { return members_; }
  const std::vector<uint32_t>& generators() const { return generators_; }

  bool contains(uint32_t index) const;  // binary search
  bool contains_perm(const Perm& p) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_.order(); }

  std::vector<Perm> member_perms() const;
  std::vector<Perm> generator_perms() const;

  // The subgroup re-enumerated as a standalone FiniteGroup on the same
  // points.  Element indices of the result are its own BFS numbering, not the
  // parent's.
  FiniteGroup as_group(std::size_t order_cap = Caps{}.order) const;

  bool operator==(const Subgroup& o) const {
    return parent_.same_underlying(o.parent_) && members_ == o.members_;
  }

 private:
  FiniteGroup parent_;
  std::vector<uint32_t> members_;
  std::vector<uint32_t> generators_;
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_subgroup(const FiniteGroup& G);

// Closure of the seed indices inside G (breadth-first, deterministic).
Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<uint32_t>& seed);

// Same, but the seed is given as permutations; every one must lie in G.
Subgroup subgroup_generated_perms(const FiniteGroup& G, const std::vector<Perm>& seed);

// Smallest normal subgroup of G containing the seed.
Subgroup normal_closure(const FiniteGroup& G, const std::vector<uint32_t>& seed);

// Elements commuting with every element of `s` (indices into G).
Subgroup centralizer(const FiniteGroup& G, const std::vector<uint32_t>& s);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& s);

Subgroup center(const FiniteGroup& G);

// Elements g with H^g = H.
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);

bool is_normal(const FiniteGroup& G, const Subgroup& H);

// a <= b as subgroups of the same parent.
bool subgroup_le(const Subgroup& a, const Subgroup& b);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Derived subgroup [G, G].
Subgroup derived_subgroup(const FiniteGroup& G);

// Re-expresses `s` (a subgroup of some parent) as a subgroup of H, which must
// contain exactly the same permutations (typically H = t.as_group() for a
// subgroup t with s <= t).
Subgroup restrict_to(const FiniteGroup& H, const Subgroup& s);

// Hash for sorted index vectors (subgroup member keys), for dedup maps.
struct IndexVecHash {
  std::size_t operator()(const std::vector<uint32_t>& v) const;
};

}  // namespace lcg
