#include "lcgroups/perm.hpp"

#include <algorithm>
#include <sstream>

#include "lcgroups/arith.hpp"
#include "lcgroups/errors.hpp"

namespace lcg {

Perm::Perm(std::vector<uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidArgumentError("image sequence is not a permutation of 0.." +
                                 std::to_string(images_.size() ? images_.size() - 1 : 0));
    }
    seen[v] = true;
  }
}

Perm Perm::identity(uint32_t degree) {
  std::vector<uint32_t> im(degree);
  for (uint32_t i = 0; i < degree; ++i) im[i] = i;
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<uint32_t> im(images_.size());
  for (uint32_t i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Perm(std::move(im));
}

Perm Perm::power(uint64_t e) const {
  uint64_t o = element_order(*this);
  e %= o;
  Perm result = identity(degree());
  Perm base = *this;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::vector<uint32_t>> Perm::cycles() const {
  std::vector<std::vector<uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<uint32_t> cyc;
    uint32_t j = i;
    do {
      cyc.push_back(j);
      seen[j] = true;
      j = images_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k] + 1;
    }
    os << ')';
  }
  return os.str();
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw InvalidArgumentError("cannot compose permutations of degrees " +
                               std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  std::vector<uint32_t> im(a.degree());
  for (uint32_t i = 0; i < a.degree(); ++i) im[i] = a(b(i));
  return Perm(std::move(im));
}

Perm conjugate(const Perm& h, const Perm& g) { return compose(compose(g.inverse(), h), g); }

uint64_t element_order(const Perm& p) {
  uint64_t o = 1;
  for (const auto& c : p.cycles()) o = lcm_checked(o, c.size());
  return o;
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (uint32_t v : p.images()) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace lcg
