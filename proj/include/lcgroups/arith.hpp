#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lcg {

// Trial-division factorization of n >= 1 as (prime, multiplicity) pairs in
// ascending prime order.  Group orders here are tiny, so this is plenty.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

std::vector<uint64_t> prime_divisors(uint64_t n);

bool is_prime(uint64_t n);

// Largest power of p dividing n.
uint64_t p_part(uint64_t n, uint64_t p);

// True iff n = p^k with k >= 1; stores p when requested.
bool is_prime_power(uint64_t n, uint64_t* p_out = nullptr);

// lcm that throws InvariantViolationError on uint64 overflow.
uint64_t lcm_checked(uint64_t a, uint64_t b);

// p^e with an overflow throw; e small.
uint64_t pow_checked(uint64_t p, uint32_t e);

// Inverse of a modulo m (gcd(a, m) must be 1).
uint64_t mod_inverse(uint64_t a, uint64_t m);

}  // namespace lcg
