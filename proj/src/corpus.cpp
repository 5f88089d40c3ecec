#include "lcgroups/corpus.hpp"

#include <algorithm>

#include "lcgroups/arith.hpp"
#include "lcgroups/group_expr.hpp"
#include "lcgroups/group_io.hpp"

namespace lcg {

bool CorpusEntry::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string expr, std::vector<std::string> tags) {
    out.push_back(CorpusEntry{std::move(name), std::move(expr), std::move(tags)});
  };

  for (uint64_t n = 1; n <= 24; ++n) {
    std::vector<std::string> tags{"abelian", "supersolvable"};
    if (n > 1 && is_prime_power(n)) tags.push_back("p-group");
    std::string e = "Cyc(" + std::to_string(n) + ")";
    add(e, e, std::move(tags));
  }

  for (uint64_t m = 4; m <= 32; m += 2) {
    std::vector<std::string> tags{"supersolvable"};
    if (m == 4) tags.push_back("abelian");
    if (is_prime_power(m)) tags.push_back("p-group");
    std::string e = "Dih(" + std::to_string(m) + ")";
    add(e, e, std::move(tags));
  }

  add("Dic(2)", "Dic(2)", {"supersolvable", "p-group"});
  add("Dic(3)", "Dic(3)", {"supersolvable"});
  add("Dic(4)", "Dic(4)", {"supersolvable", "p-group"});

  add("Sym(3)", "Sym(3)", {"supersolvable"});
  add("Sym(4)", "Sym(4)", {});
  add("Sym(5)", "Sym(5)", {});
  add("Alt(4)", "Alt(4)", {});
  add("Alt(5)", "Alt(5)", {});

  for (uint64_t p : {2, 3, 5})
    for (uint64_t k = 1; k <= 3; ++k) {
      std::string e = "ElemAb(" + std::to_string(p) + "," + std::to_string(k) + ")";
      add(e, e, {"abelian", "supersolvable", "p-group"});
    }

  add("Heis(3)", "Heis(3)", {"supersolvable", "p-group"});
  add("Wr(2)", "Wr(2)", {"supersolvable", "p-group"});
  add("Wr(3)", "Wr(3)", {"supersolvable", "p-group"});

  add("Dih(8)xDih(8)", "prod(Dih(8),Dih(8))", {"supersolvable", "p-group", "product"});
  add("Dih(8)xCyc(3)", "prod(Dih(8),Cyc(3))", {"supersolvable", "product"});
  add("Heis(3)xCyc(3)", "prod(Heis(3),Cyc(3))", {"supersolvable", "p-group", "product"});

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make_corpus();
  return c;
}

const CorpusEntry* corpus_find(const std::string& name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

FiniteGroup build_corpus_entry(const CorpusEntry& e, const Caps& caps) {
  return build_group_expr(e.expr, caps,
                          [](const std::string& path, const Caps& c) {
                            return load_group_file(path, c);
                          });
}

}  // namespace lcg
