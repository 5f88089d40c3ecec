#include "lcgroups/group_expr.hpp"

#include <cctype>

#include "lcgroups/constructors.hpp"
#include "lcgroups/errors.hpp"

namespace lcg {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, pos); }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }

  uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    uint64_t v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      if (v > UINT64_MAX / 10) fail("number too large");
      v = v * 10 + static_cast<uint64_t>(s[i] - '0');
    }
    return v;
  }

  std::vector<uint64_t> arg_list(std::size_t count) {
    expect('(');
    std::vector<uint64_t> args;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect(',');
      args.push_back(number());
    }
    expect(')');
    return args;
  }

  GroupExpr expr() {
    std::string name = ident();
    if (name == "file") {
      expect(':');
      std::size_t start = pos;
      while (pos < s.size() && s[pos] != ',' && s[pos] != ')' &&
             !std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start) fail("expected a file path after 'file:'");
      GroupExpr e;
      e.kind = GroupExpr::Kind::File;
      e.path = s.substr(start, pos - start);
      return e;
    }
    if (name == "prod") {
      expect('(');
      GroupExpr e;
      e.kind = GroupExpr::Kind::Prod;
      e.children.push_back(expr());
      expect(',');
      e.children.push_back(expr());
      expect(')');
      return e;
    }
    GroupExpr e;
    if (name == "Cyc") {
      e.kind = GroupExpr::Kind::Cyc;
      e.args = arg_list(1);
    } else if (name == "Dih") {
      e.kind = GroupExpr::Kind::Dih;
      e.args = arg_list(1);
    } else if (name == "Dic") {
      e.kind = GroupExpr::Kind::Dic;
      e.args = arg_list(1);
    } else if (name == "Sym") {
      e.kind = GroupExpr::Kind::Sym;
      e.args = arg_list(1);
    } else if (name == "Alt") {
      e.kind = GroupExpr::Kind::Alt;
      e.args = arg_list(1);
    } else if (name == "ElemAb") {
      e.kind = GroupExpr::Kind::ElemAb;
      e.args = arg_list(2);
    } else if (name == "Heis") {
      e.kind = GroupExpr::Kind::Heis;
      e.args = arg_list(1);
    } else if (name == "Wr") {
      e.kind = GroupExpr::Kind::Wr;
      e.args = arg_list(1);
    } else {
      pos -= name.size();
      fail("unknown family '" + name + "'");
    }
    return e;
  }
};

}  // namespace

std::string GroupExpr::to_string() const {
  switch (kind) {
    case Kind::Cyc:
      return "Cyc(" + std::to_string(args[0]) + ")";
    case Kind::Dih:
      return "Dih(" + std::to_string(args[0]) + ")";
    case Kind::Dic:
      return "Dic(" + std::to_string(args[0]) + ")";
    case Kind::Sym:
      return "Sym(" + std::to_string(args[0]) + ")";
    case Kind::Alt:
      return "Alt(" + std::to_string(args[0]) + ")";
    case Kind::ElemAb:
      return "ElemAb(" + std::to_string(args[0]) + "," + std::to_string(args[1]) + ")";
    case Kind::Heis:
      return "Heis(" + std::to_string(args[0]) + ")";
    case Kind::Wr:
      return "Wr(" + std::to_string(args[0]) + ")";
    case Kind::Prod:
      return "prod(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::File:
      return "file:" + path;
  }
  return "";
}

GroupExpr parse_group_expr(const std::string& text) {
  Parser p{text};
  GroupExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing text");
  return e;
}

FiniteGroup build_group_expr(const GroupExpr& expr, const Caps& caps, const FileLoader& loader) {
  switch (expr.kind) {
    case GroupExpr::Kind::Cyc:
      return cyclic_group(expr.args[0], caps.order);
    case GroupExpr::Kind::Dih:
      return dihedral_group(expr.args[0], caps.order);
    case GroupExpr::Kind::Dic:
      return dicyclic_group(expr.args[0], caps.order);
    case GroupExpr::Kind::Sym:
      return symmetric_group(expr.args[0], caps.order);
    case GroupExpr::Kind::Alt:
      return alternating_group(expr.args[0], caps.order);
    case GroupExpr::Kind::ElemAb:
      return elementary_abelian(expr.args[0], expr.args[1], caps.order);
    case GroupExpr::Kind::Heis:
      return heisenberg_group(expr.args[0], caps.order);
    case GroupExpr::Kind::Wr:
      return wreath_cyclic(expr.args[0], caps.order);
    case GroupExpr::Kind::Prod:
      return direct_product(build_group_expr(expr.children[0], caps, loader),
                            build_group_expr(expr.children[1], caps, loader), caps.order)
          .group;
    case GroupExpr::Kind::File:
      if (!loader)
        throw InvalidArgumentError("no file loader available for 'file:" + expr.path + "'");
      return loader(expr.path, caps);
  }
  throw InvalidArgumentError("unreachable group expression kind");
}

FiniteGroup build_group_expr(const std::string& text, const Caps& caps, const FileLoader& loader) {
  return build_group_expr(parse_group_expr(text), caps, loader);
}

}  // namespace lcg
