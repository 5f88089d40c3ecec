#include "lcgroups/arith.hpp"

#include <numeric>

#include "lcgroups/errors.hpp"

namespace lcg {

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

uint64_t p_part(uint64_t n, uint64_t p) {
  uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime_power(uint64_t n, uint64_t* p_out) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (p_out) *p_out = f[0].first;
  return true;
}

uint64_t lcm_checked(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) throw InvalidArgumentError("lcm of zero");
  uint64_t g = std::gcd(a, b);
  uint64_t q = a / g;
  if (q > UINT64_MAX / b) throw InvariantViolationError("lcm overflow");
  return q * b;
}

uint64_t pow_checked(uint64_t p, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (p != 0 && r > UINT64_MAX / p) throw InvariantViolationError("power overflow");
    r *= p;
  }
  return r;
}

uint64_t mod_inverse(uint64_t a, uint64_t m) {
  // Extended Euclid on (a mod m, m).
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(m), newr = static_cast<int64_t>(a % m);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw InvalidArgumentError("mod_inverse: arguments are not coprime");
  if (t < 0) t += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t);
}

}  // namespace lcg
