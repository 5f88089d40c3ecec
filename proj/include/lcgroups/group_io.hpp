#pragma once

#include <string>
#include <vector>

#include "lcgroups/caps.hpp"
#include "lcgroups/group.hpp"
#include "lcgroups/perm.hpp"

namespace lcg {

// Generator-file format: one permutation per line in 1-based cycle notation,
// e.g. "(1 2 3)(4 5)".  A cycle "(a b c)" maps a -> b -> c -> a.  Blank lines
// are skipped and '#' starts a comment that runs to the end of the line.
// "()" denotes the identity.  The degree is the largest point mentioned
// anywhere in the file (at least 1).  Errors carry 1-based line numbers and
// 0-based column offsets.
std::vector<Perm> parse_generator_lines(const std::string& text, const std::string& origin = "");

FiniteGroup parse_group_text(const std::string& text, const Caps& caps = {},
                             const std::string& origin = "");

FiniteGroup load_group_file(const std::string& path, const Caps& caps = {});

}  // namespace lcg
