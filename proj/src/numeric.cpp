#include "vgm/numeric.hpp"

namespace vgm {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

uint64_t coprime_part(uint64_t n, uint64_t p) {
  if (p < 2) return n;
  while (n % p == 0) n /= p;
  return n;
}

}  // namespace vgm
