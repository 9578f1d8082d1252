#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace vgm {

/// Deterministic primality check by trial division; intended for the
/// desk-scale inputs this library works with (n < 2^62).
bool is_prime(uint64_t n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

/// Distinct prime divisors of n, ascending. Empty for n <= 1.
std::vector<uint64_t> prime_divisors(uint64_t n);

uint64_t euler_phi(uint64_t n);

/// Largest divisor of n coprime to p, i.e. n with every factor of p removed.
uint64_t coprime_part(uint64_t n, uint64_t p);

}  // namespace vgm
