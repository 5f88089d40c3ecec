#include "lcgroups/cayley.hpp"

#include <deque>
#include <string>

#include "lcgroups/errors.hpp"

namespace lcg {

CayleyTable::CayleyTable(std::vector<std::vector<uint32_t>> table) : table_(std::move(table)) {
  std::size_t n = table_.size();
  if (n == 0) throw InvalidArgumentError("multiplication table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n)
      throw InvalidArgumentError("multiplication table is not square at row " + std::to_string(i));
    std::vector<bool> seen(n, false);
    for (uint32_t v : table_[i]) {
      if (v >= n || seen[v])
        throw InvalidArgumentError("row " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      uint32_t v = table_[i][j];
      if (seen[v]) throw InvalidArgumentError("column " + std::to_string(j) + " is not a permutation");
      seen[v] = true;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      if (table_[e][j] != j || table_[j][e] != j) ok = false;
    if (ok) {
      identity_ = static_cast<uint32_t>(e);
      found = true;
    }
  }
  if (!found) throw InvalidArgumentError("multiplication table has no two-sided identity");

  for (std::size_t i = 0; i < n; ++i) {
    bool inv = false;
    for (std::size_t j = 0; j < n && !inv; ++j)
      if (table_[i][j] == identity_ && table_[j][i] == identity_) inv = true;
    if (!inv)
      throw InvalidArgumentError("element " + std::to_string(i) + " has no two-sided inverse");
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
          throw InvalidArgumentError("multiplication table is not associative at (" +
                                     std::to_string(i) + ", " + std::to_string(j) + ", " +
                                     std::to_string(k) + ")");
}

FiniteGroup regular_representation(const CayleyTable& t, std::size_t order_cap) {
  std::size_t n = t.order();
  std::vector<uint32_t> gens;
  std::vector<bool> closed(n, false);
  auto reclose = [&]() {
    std::fill(closed.begin(), closed.end(), false);
    closed[t.identity()] = true;
    std::deque<uint32_t> queue{t.identity()};
    while (!queue.empty()) {
      uint32_t cur = queue.front();
      queue.pop_front();
      for (uint32_t g : gens) {
        uint32_t nxt = t.at(cur, g);
        if (!closed[nxt]) {
          closed[nxt] = true;
          queue.push_back(nxt);
        }
      }
    }
  };
  reclose();
  for (uint32_t g = 0; g < n; ++g) {
    if (!closed[g]) {
      gens.push_back(g);
      reclose();
    }
  }

  std::vector<Perm> perm_gens;
  if (gens.empty()) {
    perm_gens.push_back(Perm::identity(static_cast<uint32_t>(n)));
  } else {
    for (uint32_t g : gens) {
      std::vector<uint32_t> images(n);
      for (uint32_t x = 0; x < n; ++x) images[x] = t.at(g, x);
      perm_gens.emplace_back(std::move(images));
    }
  }
  FiniteGroup G = FiniteGroup::enumerate(perm_gens, order_cap);
  if (G.order() != n)
    throw InvariantViolationError("regular representation has wrong order: got " +
                                  std::to_string(G.order()) + ", expected " + std::to_string(n));
  return G;
}

}  // namespace lcg
