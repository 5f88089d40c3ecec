#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "lcgroups/errors.hpp"
#include "lcgroups/group_expr.hpp"
#include "lcgroups/group_io.hpp"

using namespace lcg;

TEST_CASE("cycle-notation lines parse 1-based") {
  auto gens = parse_generator_lines("(1 2 3 4)\n(2 4)\n");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].degree() == 4);
  CHECK(gens[0](0) == 1);  // point 1 -> point 2, 0-based 0 -> 1
  CHECK(gens[1](1) == 3);
  CHECK(gens[1](0) == 0);  // untouched point

  FiniteGroup g = parse_group_text("(1 2 3 4)\n(2 4)\n");
  CHECK(g.order() == 8);  // the order-8 dihedral group on the square
}

TEST_CASE("comments, blank lines, identity") {
  auto gens = parse_generator_lines(
      "# generators of a cyclic group\n"
      "\n"
      "  ()   # identity is allowed\n"
      "(1 2 3)  # trailing comment\n");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].is_identity());
  CHECK(element_order(gens[1]) == 3);
}

TEST_CASE("degree is the largest point mentioned") {
  auto gens = parse_generator_lines("(1 2)\n(7 9)\n");
  CHECK(gens[0].degree() == 9);
  CHECK(gens[1].degree() == 9);
  CHECK(parse_generator_lines("()")[0].degree() == 1);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_generator_lines("(1 2)\n(3 3)\n", "g.gens");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("g.gens:2:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_generator_lines("(1 2"), ParseError);      // unbalanced
  CHECK_THROWS_AS(parse_generator_lines("(0 1)"), ParseError);     // points are 1-based
  CHECK_THROWS_AS(parse_generator_lines("(3)"), ParseError);       // singleton cycle
  CHECK_THROWS_AS(parse_generator_lines("1 2 3"), ParseError);     // missing parens
  CHECK_THROWS_AS(parse_generator_lines("(1 2)(2 3)x"), ParseError);
  CHECK_THROWS_AS(parse_group_text(""), ParseError);               // no generators at all
  CHECK_THROWS_WITH_AS(parse_group_text(""), "1:0: no generators found", ParseError);
}

TEST_CASE("overlapping cycles within one permutation are rejected") {
  CHECK_THROWS_AS(parse_generator_lines("(1 2)(2 3)"), ParseError);
  CHECK_NOTHROW(parse_generator_lines("(1 2)(3 4)"));
}

TEST_CASE("files load through the expression language") {
  std::string path = "test_io_q8.gens";
  {
    std::ofstream f(path);
    // Quaternion generators as permutations on 8 points.
    f << "(1 2 3 4)(5 6 7 8)  # i\n";
    f << "(1 5 3 7)(2 8 4 6)  # j\n";
  }
  FiniteGroup q8 = load_group_file(path);
  CHECK(q8.order() == 8);
  CHECK(q8.exponent() == 4);

  FiniteGroup prod = build_group_expr("prod(file:" + path + ",Cyc(3))", Caps{},
                                      load_group_file);
  CHECK(prod.order() == 24);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_group_file("missing_file.gens"), InvalidArgumentError);
}
