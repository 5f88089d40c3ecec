#include "lcgroups/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "lcgroups/errors.hpp"

namespace lcg {

namespace {

struct RawPerm {
  std::vector<std::vector<uint32_t>> cycles;  // 0-based points
};

[[noreturn]] void fail(const std::string& origin, std::size_t line, std::size_t col,
                       const std::string& msg) {
  std::string where = origin.empty() ? "" : origin + ":";
  throw ParseError(where + std::to_string(line) + ":" + std::to_string(col) + ": " + msg, line,
                   col);
}

}  // namespace

std::vector<Perm> parse_generator_lines(const std::string& text, const std::string& origin) {
  std::vector<RawPerm> raws;
  uint32_t max_point = 0;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::size_t i = 0;
    auto skip_ws = [&]() {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    if (i == line.size()) continue;

    RawPerm raw;
    std::vector<bool> used;  // per-point, across all cycles of this permutation
    auto mark_used = [&](uint32_t pt, std::size_t col) {
      if (used.size() <= pt) used.resize(pt + 1, false);
      if (used[pt]) fail(origin, lineno, col, "point " + std::to_string(pt + 1) + " repeated");
      used[pt] = true;
    };

    while (i < line.size()) {
      if (line[i] != '(') fail(origin, lineno, i, "expected '('");
      ++i;
      std::vector<uint32_t> cycle;
      for (;;) {
        skip_ws();
        if (i >= line.size()) fail(origin, lineno, i, "unterminated cycle");
        if (line[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(line[i])))
          fail(origin, lineno, i, "expected a point or ')'");
        std::size_t col = i;
        uint64_t v = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
          v = v * 10 + static_cast<uint64_t>(line[i] - '0');
          if (v > 1000000) fail(origin, lineno, col, "point out of range");
          ++i;
        }
        if (v == 0) fail(origin, lineno, col, "points are 1-based; 0 is not a point");
        uint32_t pt = static_cast<uint32_t>(v - 1);
        mark_used(pt, col);
        if (pt + 1 > max_point) max_point = pt + 1;
        cycle.push_back(pt);
      }
      if (cycle.size() == 1)
        fail(origin, lineno, i, "a cycle needs zero or at least two points");
      if (!cycle.empty()) raw.cycles.push_back(std::move(cycle));
      skip_ws();
    }
    raws.push_back(std::move(raw));
  }

  if (raws.empty())
    fail(origin, lineno ? lineno : 1, 0, "no generators found");

  uint32_t degree = max_point ? max_point : 1;
  std::vector<Perm> out;
  for (const RawPerm& raw : raws) {
    std::vector<uint32_t> im(degree);
    for (uint32_t i = 0; i < degree; ++i) im[i] = i;
    for (const auto& cycle : raw.cycles)
      for (std::size_t k = 0; k < cycle.size(); ++k)
        im[cycle[k]] = cycle[(k + 1) % cycle.size()];
    out.emplace_back(std::move(im));
  }
  return out;
}

FiniteGroup parse_group_text(const std::string& text, const Caps& caps, const std::string& origin) {
  return FiniteGroup::enumerate(parse_generator_lines(text, origin), caps.order);
}

FiniteGroup load_group_file(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), caps, path);
}

}  // namespace lcg
