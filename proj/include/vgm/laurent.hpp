#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vgm {

/// Sparse single-variable Laurent polynomial over GF(p): a finite map from
/// signed exponents to nonzero residues mod p. Zero coefficients are never
/// stored, so equality is structural.
class LaurentPoly {
 public:
  /// The zero polynomial over GF(p); p must be prime.
  explicit LaurentPoly(uint64_t p);
  static LaurentPoly monomial(uint64_t p, int64_t exponent, uint64_t coeff = 1);

  uint64_t characteristic() const { return p_; }
  const std::map<int64_t, uint64_t>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  uint64_t coeff(int64_t exponent) const;
  /// The coefficient at exponent 0.
  uint64_t constant_term() const { return coeff(0); }

  /// Adds c * z^exponent and keeps the canonical sparse form.
  LaurentPoly& add_term(int64_t exponent, uint64_t c);

  /// Multiplication by z^delta (exponent shift).
  LaurentPoly shifted(int64_t delta) const;

  LaurentPoly pow(uint64_t m) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "z^-1+2*z^3", terms in ascending exponent order; "0" when zero.
  std::string to_string() const;

 private:
  uint64_t p_ = 2;
  std::map<int64_t, uint64_t> terms_;
  static void check_same(const LaurentPoly& a, const LaurentPoly& b);
};

/// The two-term polynomial z^-1 + z^(p-1) whose powers all have zero
/// constant term while z^-1 times suitable powers does not: the witness
/// that the zero-constant-term subspace of GF(p)[z^-1, z] is not a Mathieu
/// subspace. For p = 2 the exponents are -1 and 1.
LaurentPoly counterexample_poly(uint64_t p);

/// C(n, r) mod p by base-p digit decomposition (each digit pair contributes
/// a small binomial mod p). Independent of any Pascal-triangle path.
/// Requires r <= n.
uint64_t binomial_mod_p(uint64_t n, uint64_t r, uint64_t p);

struct VerifyReport {
  bool ok = true;
  uint64_t checks = 0;
  std::vector<std::string> failures;
};

/// Checks tr(f^m) = 0 for m = 1..max_m with f = counterexample_poly(p),
/// by direct powering and by the closed form: the constant term of f^m is
/// C(bp, b) when m = bp and 0 when p does not divide m. Both routes must
/// give 0 and agree.
VerifyReport verify_power_traces_vanish(uint64_t p, uint64_t max_m);

/// Checks tr(z^-1 f^(p^k - 1)) = (-1)^(p^(k-1)) mod p for k = 1..max_k by
/// direct powering, and that this trace equals C(p^k - 1, p^(k-1)) mod p.
VerifyReport verify_cofactor_traces_nonzero(uint64_t p, uint64_t max_k);

/// Checks C(p^k - 1, a) = (-1)^a mod p for all k <= max_k, 0 <= a <= p^k-1,
/// and C(bp, b) = 0 mod p for 1 <= b <= max_b. Every binomial is computed
/// two ways: digit decomposition and a streamed Pascal row mod p.
/// Requires p^max_k <= 10^4 and max_b <= 10^3.
VerifyReport verify_binomial_congruences(uint64_t p, uint64_t max_k, uint64_t max_b);

/// The reduction of the rank-n free abelian group to rank one: along the
/// diagonal subgroup {(a, ..., a)}, the one-variable counterexample pulls
/// back, so the zero-constant-term subspace of GF(p)[Z^n] is not a Mathieu
/// subspace for any n >= 1.
struct DiagonalReduction {
  uint64_t n = 1;
  std::string embedding;
  std::string witness_poly;
  std::string witness_cofactor;
  std::string statement;
};
DiagonalReduction diagonal_reduction_note(uint64_t n);

}  // namespace vgm
