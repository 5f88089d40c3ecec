#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcgroups/caps.hpp"
#include "lcgroups/group.hpp"

namespace lcg {

// Textual group expressions, as accepted by the command line:
//
//   Cyc(n) | Dih(m) | Dic(n) | Sym(n) | Alt(n) | ElemAb(p,k) | Heis(p) | Wr(p)
//   prod(E1,E2)       direct product of two expressions
//   file:PATH         generators read from a file of cycle-notation lines
//
// Whitespace is allowed around tokens.  Parse errors carry the 0-based
// character offset into the expression.
struct GroupExpr {
  enum class Kind { Cyc, Dih, Dic, Sym, Alt, ElemAb, Heis, Wr, Prod, File };
  Kind kind;
  std::vector<uint64_t> args;       // numeric parameters of a family atom
  std::string path;                 // Kind::File only
  std::vector<GroupExpr> children;  // Kind::Prod only (exactly two)

  // Canonical form: no whitespace, e.g. "prod(Dih(8),Cyc(3))".
  std::string to_string() const;
};

GroupExpr parse_group_expr(const std::string& text);

// Resolver for file: atoms; receives the path and the caps.  Building an
// expression containing file: atoms without a loader is an error.
using FileLoader = std::function<FiniteGroup(const std::string& path, const Caps& caps)>;

FiniteGroup build_group_expr(const GroupExpr& expr, const Caps& caps = {},
                             const FileLoader& loader = {});

FiniteGroup build_group_expr(const std::string& text, const Caps& caps = {},
                             const FileLoader& loader = {});

}  // namespace lcg
