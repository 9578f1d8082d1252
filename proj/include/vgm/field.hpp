#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vgm {

/// Element of GF(p^k), tagged with the (p, k) of its parent field so that
/// mixed-field operands can be rejected. Since a Field is always built with
/// the canonical modulus for (p, k), the pair identifies the field.
///
/// The index encodes the residue's coefficient vector in base p:
///   index = sum_i coeff[i] * p^i,  coeff[i] = coefficient of x^i.
struct FieldElem {
  uint64_t index = 0;
  uint64_t p = 0;
  uint32_t k = 0;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// GF(p^k) = GF(p)[x] / (m(x)) for the canonical monic irreducible m(x):
/// the first irreducible in the enumeration of monic degree-k polynomials by
/// the base-p integer encoding of their low coefficients. The same (p, k)
/// always produces the same field, so results citing "the first witness in
/// enumeration order" are reproducible across runs and platforms.
///
/// Elements are canonical indices in [0, size()). Elements enumerate in
/// increasing index, which is the order all "first element such that ..."
/// guarantees in this library refer to.
///
/// Fields are immutable after construction and safe to share across threads.
class Field {
 public:
  /// Requires p prime (p < 2^31) and 1 <= k <= 8, with p^k <= 2^48.
  /// Throws std::invalid_argument otherwise.
  explicit Field(uint64_t p, unsigned k = 1);

  uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  uint64_t size() const { return q_; }
  /// Monic modulus, low coefficients first, length degree()+1.
  /// For k = 1 this is x, i.e. {0, 1}.
  const std::vector<uint64_t>& modulus() const { return modulus_; }

  uint64_t zero() const { return 0; }
  uint64_t one() const { return 1; }

  // --- arithmetic on canonical indices (the fast layer) ---
  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  /// Throws std::domain_error for a = 0.
  uint64_t inv(uint64_t a) const;
  uint64_t pow(uint64_t a, uint64_t e) const;

  /// Image of the integer n in the field (n mod p, embedded as a constant).
  uint64_t from_int(long long n) const;

  /// Base-p digits of an index, length degree(), low coefficient first.
  std::vector<uint64_t> coeffs(uint64_t a) const;
  uint64_t from_coeffs(const std::vector<uint64_t>& c) const;

  // --- checked element layer ---
  /// Wraps an index (validated) as a tagged element of this field.
  FieldElem elem(uint64_t index) const;
  bool contains(const FieldElem& a) const { return a.p == p_ && a.k == k_; }
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, uint64_t e) const;

  // --- multiplicative structure ---
  /// Order of a in the multiplicative group; throws std::domain_error on 0.
  uint64_t multiplicative_order(uint64_t a) const;

  /// First element xi (in canonical enumeration order) with xi^d = 1 and
  /// xi^e != 1 for 1 <= e < d, or nullopt when no such element exists
  /// (exactly when gcd(d, p) > 1 or d does not divide p^k - 1).
  /// For fields larger than 2^16 the scan is replaced by a deterministic
  /// generator-power construction; the choice is still reproducible.
  std::optional<FieldElem> primitive_root_of_unity(uint64_t d) const;

  // --- formatting ---
  /// k = 1: decimal value. k > 1: the k base-p digits, highest power of x
  /// first, concatenated for p <= 10 and '.'-separated otherwise.
  std::string to_string(uint64_t a) const;
  /// Inverse of to_string. Throws std::invalid_argument on malformed input.
  uint64_t parse_element(std::string_view s) const;

  /// "p" for prime fields, "p^k" for extensions.
  std::string spec_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  uint64_t p_ = 0;
  unsigned k_ = 0;
  uint64_t q_ = 0;
  std::vector<uint64_t> modulus_;
  std::vector<std::pair<uint64_t, unsigned>> unit_order_factors_;  // of q-1

  // Lookup tables, built when q_ <= kTableLimit.
  static constexpr uint64_t kTableLimit = 256;
  bool tabled_ = false;
  std::vector<uint16_t> add_tab_, mul_tab_;
  std::vector<uint16_t> neg_tab_, inv_tab_;

  uint64_t add_generic(uint64_t a, uint64_t b) const;
  uint64_t neg_generic(uint64_t a) const;
  uint64_t mul_generic(uint64_t a, uint64_t b) const;
  void check_index(uint64_t a) const;
  void check_elem(const FieldElem& a) const;
};

/// Parses the CLI field grammar: "p" or "p^k", e.g. "5" or "2^2".
/// Throws std::invalid_argument naming the offending token.
Field parse_field_spec(std::string_view spec);

}  // namespace vgm
