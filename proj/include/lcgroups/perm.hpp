#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lcg {

// Permutation of {0, ..., degree-1}, stored as its image sequence: the entry
// at position i is the image of i.  The image sequence doubles as the
// canonical key -- equality, ordering and hashing all read it directly.
//
// Composition applies the right factor first: compose(a, b) maps i to a(b(i)).
class Perm {
 public:
  Perm() = default;  // degree 0
  explicit Perm(std::vector<uint32_t> images);  // validates a bijection

  static Perm identity(uint32_t degree);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t operator()(uint32_t i) const { return images_[i]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm power(uint64_t e) const;

  // Nontrivial cycles (length >= 2), 0-based, each starting at its smallest
  // point, listed by that smallest point in ascending order.
  std::vector<std::vector<uint32_t>> cycles() const;

  // 1-based cycle notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
  std::string cycle_string() const;

  bool operator==(const Perm&) const = default;
  std::strong_ordering operator<=>(const Perm& o) const { return images_ <=> o.images_; }

 private:
  std::vector<uint32_t> images_;
};

// a after b: the result maps i to a(b(i)).  Degrees must match.
Perm compose(const Perm& a, const Perm& b);

// g^{-1} h g.
Perm conjugate(const Perm& h, const Perm& g);

// Order of the permutation (lcm of its cycle lengths).
uint64_t element_order(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace lcg
