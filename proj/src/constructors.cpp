#include "lcgroups/constructors.hpp"

#include <string>

#include "lcgroups/arith.hpp"
#include "lcgroups/errors.hpp"

namespace lcg {

namespace {

void check_order(uint64_t order, std::size_t cap, const char* family) {
  if (order > cap)
    throw CapExceededError(std::string(family) + " of order " + std::to_string(order) +
                               " exceeds order cap " + std::to_string(cap),
                           cap);
}

Perm cycle_on(uint32_t degree, uint32_t first, uint32_t length) {
  std::vector<uint32_t> im(degree);
  for (uint32_t i = 0; i < degree; ++i) im[i] = i;
  for (uint32_t j = 0; j < length; ++j) im[first + j] = first + (j + 1) % length;
  return Perm(std::move(im));
}

}  // namespace

FiniteGroup cyclic_group(uint64_t n, std::size_t order_cap) {
  if (n < 1) throw InvalidArgumentError("cyclic group order must be >= 1");
  check_order(n, order_cap, "cyclic group");
  uint32_t deg = static_cast<uint32_t>(n);
  Perm g = (n == 1) ? Perm::identity(1) : cycle_on(deg, 0, deg);
  return FiniteGroup::enumerate({g}, order_cap);
}

FiniteGroup dihedral_group(uint64_t m, std::size_t order_cap) {
  if (m < 2 || m % 2 != 0)
    throw InvalidArgumentError("dihedral group order must be even and >= 2, got " +
                               std::to_string(m));
  check_order(m, order_cap, "dihedral group");
  if (m == 2) return cyclic_group(2, order_cap);
  if (m == 4) {
    // Klein four-group: two independent swaps.
    std::vector<Perm> gens = {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})};
    return FiniteGroup::enumerate(gens, order_cap);
  }
  uint32_t n = static_cast<uint32_t>(m / 2);
  Perm r = cycle_on(n, 0, n);
  std::vector<uint32_t> im(n);
  for (uint32_t i = 0; i < n; ++i) im[i] = (n - i) % n;
  Perm s(std::move(im));
  return FiniteGroup::enumerate({r, s}, order_cap);
}

FiniteGroup dicyclic_group(uint64_t n, std::size_t order_cap) {
  if (n < 2) throw InvalidArgumentError("dicyclic parameter must be >= 2, got " + std::to_string(n));
  check_order(4 * n, order_cap, "dicyclic group");
  // Elements a^i (index i) and a^i b (index 2n + i) for 0 <= i < 2n, with
  // a of order 2n, b^2 = a^n and b a = a^{-1} b.
  uint32_t nn = static_cast<uint32_t>(2 * n);
  std::size_t total = 2 * static_cast<std::size_t>(nn);
  std::vector<std::vector<uint32_t>> t(total, std::vector<uint32_t>(total));
  uint32_t half = static_cast<uint32_t>(n);
  for (uint32_t i = 0; i < nn; ++i) {
    for (uint32_t k = 0; k < nn; ++k) {
      t[i][k] = (i + k) % nn;                            // a^i a^k
      t[i][nn + k] = nn + (i + k) % nn;                  // a^i (a^k b)
      t[nn + i][k] = nn + (i + nn - k) % nn;             // (a^i b) a^k
      t[nn + i][nn + k] = (i + nn - k + half) % nn;      // (a^i b)(a^k b)
    }
  }
  return regular_representation(CayleyTable(std::move(t)), order_cap);
}

FiniteGroup symmetric_group(uint64_t n, std::size_t order_cap) {
  if (n < 1) throw InvalidArgumentError("symmetric group needs n >= 1 letters");
  uint64_t f = 1;
  for (uint64_t i = 2; i <= n; ++i) {
    f *= i;
    check_order(f, order_cap, "symmetric group");
  }
  uint32_t deg = static_cast<uint32_t>(n);
  if (n == 1) return FiniteGroup::enumerate({Perm::identity(1)}, order_cap);
  std::vector<uint32_t> swap01(deg);
  for (uint32_t i = 0; i < deg; ++i) swap01[i] = i;
  swap01[0] = 1;
  swap01[1] = 0;
  std::vector<Perm> gens = {Perm(std::move(swap01))};
  if (n > 2) gens.push_back(cycle_on(deg, 0, deg));
  return FiniteGroup::enumerate(gens, order_cap);
}

FiniteGroup alternating_group(uint64_t n, std::size_t order_cap) {
  if (n < 1) throw InvalidArgumentError("alternating group needs n >= 1 letters");
  uint64_t f = 1;
  for (uint64_t i = 3; i <= n; ++i) {
    f *= i;
    check_order(f, order_cap, "alternating group");
  }
  uint32_t deg = static_cast<uint32_t>(n);
  if (n <= 2) return FiniteGroup::enumerate({Perm::identity(deg)}, order_cap);
  std::vector<Perm> gens;
  for (uint32_t i = 0; i + 2 < deg; ++i) {
    std::vector<uint32_t> im(deg);
    for (uint32_t j = 0; j < deg; ++j) im[j] = j;
    im[i] = i + 1;
    im[i + 1] = i + 2;
    im[i + 2] = i;
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup::enumerate(gens, order_cap);
}

FiniteGroup elementary_abelian(uint64_t p, uint64_t k, std::size_t order_cap) {
  if (!is_prime(p)) throw InvalidArgumentError("elementary abelian base " + std::to_string(p) +
                                               " is not prime");
  if (k < 1) throw InvalidArgumentError("elementary abelian rank must be >= 1");
  check_order(pow_checked(p, static_cast<uint32_t>(k)), order_cap, "elementary abelian group");
  uint32_t deg = static_cast<uint32_t>(p * k);
  std::vector<Perm> gens;
  for (uint32_t block = 0; block < k; ++block)
    gens.push_back(cycle_on(deg, block * static_cast<uint32_t>(p), static_cast<uint32_t>(p)));
  return FiniteGroup::enumerate(gens, order_cap);
}

FiniteGroup heisenberg_group(uint64_t p, std::size_t order_cap) {
  if (!is_prime(p)) throw InvalidArgumentError("Heisenberg modulus " + std::to_string(p) +
                                               " is not prime");
  check_order(pow_checked(p, 3), order_cap, "Heisenberg group");
  // Triples (a, b, c) mod p with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'),
  // i.e. the matrices [[1,a,c],[0,1,b],[0,0,1]].
  uint32_t pp = static_cast<uint32_t>(p);
  std::size_t n = static_cast<std::size_t>(pp) * pp * pp;
  auto idx = [pp](uint32_t a, uint32_t b, uint32_t c) { return (a * pp + b) * pp + c; };
  std::vector<std::vector<uint32_t>> t(n, std::vector<uint32_t>(n));
  for (uint32_t a = 0; a < pp; ++a)
    for (uint32_t b = 0; b < pp; ++b)
      for (uint32_t c = 0; c < pp; ++c)
        for (uint32_t a2 = 0; a2 < pp; ++a2)
          for (uint32_t b2 = 0; b2 < pp; ++b2)
            for (uint32_t c2 = 0; c2 < pp; ++c2)
              t[idx(a, b, c)][idx(a2, b2, c2)] =
                  idx((a + a2) % pp, (b + b2) % pp, (c + c2 + a * b2) % pp);
  return regular_representation(CayleyTable(std::move(t)), order_cap);
}

FiniteGroup wreath_cyclic(uint64_t p, std::size_t order_cap) {
  if (!is_prime(p)) throw InvalidArgumentError("wreath parameter " + std::to_string(p) +
                                               " is not prime");
  check_order(pow_checked(p, static_cast<uint32_t>(p + 1)), order_cap, "wreath product");
  // Points (B, j) = B*p + j for blocks B and offsets j, both mod p.
  uint32_t pp = static_cast<uint32_t>(p);
  uint32_t deg = pp * pp;
  Perm block0 = cycle_on(deg, 0, pp);  // rotate offsets within block 0
  std::vector<uint32_t> im(deg);
  for (uint32_t b = 0; b < pp; ++b)
    for (uint32_t j = 0; j < pp; ++j) im[b * pp + j] = ((b + 1) % pp) * pp + j;
  Perm shift(std::move(im));  // rotate the blocks
  return FiniteGroup::enumerate({block0, shift}, order_cap);
}

Perm DirectProduct::embed_left(const Perm& p) const {
  if (p.degree() != left_degree)
    throw InvalidArgumentError("embed_left: degree mismatch");
  std::vector<uint32_t> im(left_degree + right_degree);
  for (uint32_t i = 0; i < left_degree; ++i) im[i] = p(i);
  for (uint32_t i = 0; i < right_degree; ++i) im[left_degree + i] = left_degree + i;
  return Perm(std::move(im));
}

Perm DirectProduct::embed_right(const Perm& p) const {
  if (p.degree() != right_degree)
    throw InvalidArgumentError("embed_right: degree mismatch");
  std::vector<uint32_t> im(left_degree + right_degree);
  for (uint32_t i = 0; i < left_degree; ++i) im[i] = i;
  for (uint32_t i = 0; i < right_degree; ++i) im[left_degree + i] = left_degree + p(i);
  return Perm(std::move(im));
}

DirectProduct direct_product(const FiniteGroup& A, const FiniteGroup& B, std::size_t order_cap) {
  uint64_t order = static_cast<uint64_t>(A.order()) * B.order();
  check_order(order, order_cap, "direct product");
  DirectProduct dp{A /* placeholder, replaced below */, A.degree(), B.degree()};
  std::vector<Perm> gens;
  for (uint32_t g : A.generator_indices()) gens.push_back(dp.embed_left(A.element(g)));
  for (uint32_t g : B.generator_indices()) gens.push_back(dp.embed_right(B.element(g)));
  dp.group = FiniteGroup::enumerate(gens, order_cap);
  if (dp.group.order() != order)
    throw InvariantViolationError("direct product has wrong order");
  return dp;
}

}  // namespace lcg
