#include "vgm/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "vgm/numeric.hpp"

namespace vgm {

LaurentPoly::LaurentPoly(uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("coefficient characteristic must be prime");
}

LaurentPoly LaurentPoly::monomial(uint64_t p, int64_t exponent, uint64_t coeff) {
  LaurentPoly f(p);
  f.add_term(exponent, coeff);
  return f;
}

uint64_t LaurentPoly::coeff(int64_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::add_term(int64_t exponent, uint64_t c) {
  c %= p_;
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LaurentPoly LaurentPoly::shifted(int64_t delta) const {
  LaurentPoly out(p_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + delta, c);
  return out;
}

void LaurentPoly::check_same(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.p_ != b.p_) {
    throw std::invalid_argument("mixed characteristics: GF(" + std::to_string(a.p_) +
                                ") vs GF(" + std::to_string(b.p_) + ")");
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::check_same(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::check_same(a, b);
  LaurentPoly out(a.p_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea + eb, ca * cb % a.p_);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(uint64_t m) const {
  LaurentPoly result = monomial(p_, 0, 1);
  LaurentPoly base = *this;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += '+';
    if (c != 1 || e == 0) {
      out += std::to_string(c);
      if (e != 0) out += '*';
    }
    if (e != 0) {
      out += "z^";
      out += std::to_string(e);
    }
  }
  return out;
}

LaurentPoly counterexample_poly(uint64_t p) {
  LaurentPoly f(p);
  f.add_term(-1, 1);
  f.add_term(static_cast<int64_t>(p) - 1, 1);
  return f;
}

namespace {

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// C(n, r) mod p for n, r < p, by the multiplicative formula with Fermat
// inverses.
uint64_t small_binomial_mod(uint64_t n, uint64_t r, uint64_t p) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  uint64_t num = 1, den = 1;
  for (uint64_t i = 1; i <= r; ++i) {
    num = num * ((n - i + 1) % p) % p;
    den = den * (i % p) % p;
  }
  return num * pow_mod(den, p - 2, p) % p;
}

uint64_t checked_pow(uint64_t p, uint64_t k, uint64_t limit) {
  uint64_t v = 1;
  for (uint64_t i = 0; i < k; ++i) {
    if (v > limit / p) throw std::invalid_argument("p^k exceeds the supported bound");
    v *= p;
  }
  return v;
}

}  // namespace

uint64_t binomial_mod_p(uint64_t n, uint64_t r, uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  if (r > n) throw std::invalid_argument("binomial requires r <= n");
  uint64_t result = 1;
  while (n > 0 || r > 0) {
    const uint64_t nd = n % p, rd = r % p;
    if (rd > nd) return 0;
    result = result * small_binomial_mod(nd, rd, p) % p;
    n /= p;
    r /= p;
  }
  return result;
}

VerifyReport verify_power_traces_vanish(uint64_t p, uint64_t max_m) {
  if (max_m < 1) throw std::invalid_argument("max_m must be >= 1");
  VerifyReport report;
  const LaurentPoly f = counterexample_poly(p);
  LaurentPoly power = f;
  for (uint64_t m = 1; m <= max_m; ++m) {
    if (m > 1) power = power * f;
    const uint64_t direct = power.constant_term();
    const uint64_t closed = (m % p == 0) ? binomial_mod_p(m, m / p, p) : 0;
    ++report.checks;
    if (direct != 0 || closed != 0) {
      report.ok = false;
      report.failures.push_back("p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                " direct=" + std::to_string(direct) +
                                " closed=" + std::to_string(closed));
    }
  }
  return report;
}

VerifyReport verify_cofactor_traces_nonzero(uint64_t p, uint64_t max_k) {
  if (max_k < 1) throw std::invalid_argument("max_k must be >= 1");
  checked_pow(p, max_k, uint64_t{1} << 21);  // exponent budget
  VerifyReport report;
  const LaurentPoly f = counterexample_poly(p);
  for (uint64_t k = 1; k <= max_k; ++k) {
    uint64_t pk = 1, pk1 = 1;
    for (uint64_t i = 0; i < k; ++i) pk *= p;
    for (uint64_t i = 0; i + 1 < k; ++i) pk1 *= p;
    const LaurentPoly fe = f.pow(pk - 1);
    // tr(z^-1 * f^e) is the coefficient of z^1 in f^e
    const uint64_t direct = fe.coeff(1);
    const uint64_t sign = (pk1 % 2 == 0) ? 1 : (p - 1) % p;  // (-1)^(p^(k-1)) mod p
    const uint64_t via_binomial = binomial_mod_p(pk - 1, pk1, p);
    ++report.checks;
    if (direct != sign || direct != via_binomial) {
      report.ok = false;
      report.failures.push_back("p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                " direct=" + std::to_string(direct) +
                                " expected=" + std::to_string(sign) +
                                " binomial=" + std::to_string(via_binomial));
    }
  }
  return report;
}

VerifyReport verify_binomial_congruences(uint64_t p, uint64_t max_k, uint64_t max_b) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  if (max_k < 1) throw std::invalid_argument("max_k must be >= 1");
  checked_pow(p, max_k, 10000);
  if (max_b > 1000) throw std::invalid_argument("max_b must be <= 1000");
  VerifyReport report;
  auto record = [&](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };

  // Pascal row streamed mod p; row[r] = C(n, r) mod p after step n.
  // Part 1: rows n = p^k - 1 have alternating-sign entries.
  for (uint64_t k = 1; k <= max_k; ++k) {
    uint64_t n = 1;
    for (uint64_t i = 0; i < k; ++i) n *= p;
    n -= 1;
    std::vector<uint64_t> row{1};
    for (uint64_t i = 1; i <= n; ++i) {
      row.push_back(0);
      for (uint64_t r = i; r > 0; --r) row[r] = (row[r] + row[r - 1]) % p;
    }
    for (uint64_t a = 0; a <= n; ++a) {
      const uint64_t expected = (a % 2 == 0) ? 1 : (p - 1) % p;
      ++report.checks;
      if (row[a] != expected || binomial_mod_p(n, a, p) != expected) {
        record("p=" + std::to_string(p) + " k=" + std::to_string(k) + " a=" + std::to_string(a));
      }
    }
  }

  // Part 2: C(bp, b) = 0 mod p for 1 <= b <= max_b, streaming one row.
  std::vector<uint64_t> row{1};
  for (uint64_t n = 1; n <= max_b * p; ++n) {
    row.push_back(0);
    for (uint64_t r = n; r > 0; --r) row[r] = (row[r] + row[r - 1]) % p;
    if (n % p == 0) {
      const uint64_t b = n / p;
      ++report.checks;
      if (row[b] != 0 || binomial_mod_p(n, b, p) != 0) {
        record("p=" + std::to_string(p) + " b=" + std::to_string(b));
      }
    }
  }
  return report;
}

DiagonalReduction diagonal_reduction_note(uint64_t n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  DiagonalReduction out;
  out.n = n;
  if (n == 1) {
    out.embedding = "identity: a -> a";
    out.witness_poly = "z^-1 + z^(p-1)";
    out.witness_cofactor = "z^-1";
  } else {
    out.embedding = "diagonal: a -> (a, a, ..., a) into Z^" + std::to_string(n);
    out.witness_poly = "t^-1 + t^(p-1) with t = z_1*z_2*...*z_" + std::to_string(n);
    out.witness_cofactor = "t^-1";
  }
  out.statement =
      "the zero-constant-term subspace of GF(p)[Z^" + std::to_string(n) +
      "] is not a Mathieu subspace: all powers of the witness polynomial have "
      "zero constant term, but multiplying by the cofactor yields nonzero "
      "constant terms for arbitrarily large powers";
  return out;
}

}  // namespace vgm
