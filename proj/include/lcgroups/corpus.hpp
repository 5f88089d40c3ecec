#pragma once

#include <string>
#include <vector>

#include "lcgroups/caps.hpp"
#include "lcgroups/group.hpp"

namespace lcg {

// A named group in the shipped verification corpus.  Tags are coarse
// properties used to pick which campaigns apply to which entries; a unit test
// re-derives every tag from the built group.
struct CorpusEntry {
  std::string name;
  std::string expr;  // group expression, parseable by parse_group_expr
  std::vector<std::string> tags;

  bool has_tag(const std::string& t) const;
};

// Cyclic, dihedral, dicyclic, symmetric/alternating, elementary abelian,
// Heisenberg, wreath and product groups -- 62 entries, all of order <= 125.
const std::vector<CorpusEntry>& corpus();

const CorpusEntry* corpus_find(const std::string& name);

FiniteGroup build_corpus_entry(const CorpusEntry& e, const Caps& caps = {});

}  // namespace lcg
