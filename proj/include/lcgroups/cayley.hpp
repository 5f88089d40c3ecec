#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcgroups/caps.hpp"
#include "lcgroups/group.hpp"

namespace lcg {

// A finite group presented as an explicit multiplication table.
// table[i][j] is the product "i then j" under the same convention as the rest
// of the engine (the right factor is applied first when the elements act).
// Construction verifies the full group axioms: closure and well-formedness,
// a two-sided identity, inverses, and associativity.
class CayleyTable {
 public:
  explicit CayleyTable(std::vector<std::vector<uint32_t>> table);

  std::size_t order() const { return table_.size(); }
  uint32_t at(uint32_t i, uint32_t j) const { return table_[i][j]; }
  uint32_t identity() const { return identity_; }

 private:
  std::vector<std::vector<uint32_t>> table_;
  uint32_t identity_ = 0;
};

// Left-regular permutation representation: row index g becomes the
// permutation x -> g*x of the element set.  The generating set is chosen
// greedily and minimally: scan rows in index order, adding each row not yet
// generated by the previous picks.  Faithful by construction; the resulting
// group order equals the table order (checked).
FiniteGroup regular_representation(const CayleyTable& table, std::size_t order_cap = Caps{}.order);

}  // namespace lcg
