#pragma once

#include <cstddef>

namespace lcg {

// Resource ceilings.  Enumerating more than `order` elements, or asking for
// the subgroup lattice of a group larger than `lattice`, raises an error --
// results are never silently truncated.
struct Caps {
  std::size_t order = 5000;
  std::size_t lattice = 256;
};

// Environment variable the CLI consults for a default order cap; explicit
// command-line flags take precedence over it.
inline constexpr const char* kOrderCapEnvVar = "LCGROUPS_ORDER_CAP";

}  // namespace lcg
