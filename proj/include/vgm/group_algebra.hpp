#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgm/field.hpp"
#include "vgm/group.hpp"

namespace vgm {

/// Result of following the power sequence u, u^2, u^3, ... to its eventual
/// cycle: u^(preperiod + period) = u^preperiod, with both minimal.
/// in_radical holds exactly when every power from u^preperiod on has zero
/// constant term, i.e. all sufficiently high powers lie in the
/// zero-constant-term subspace.
struct RadicalCertificate {
  uint64_t preperiod = 0;
  uint64_t period = 0;
  bool in_radical = false;
  friend bool operator==(const RadicalCertificate&, const RadicalCertificate&) = default;
};

/// The group algebra K[G]: dense coefficient vectors of length |G| over the
/// field, indexed by group element. Coefficients are canonical field
/// indices. All operations are pure; a GroupAlgebra can be shared freely
/// across threads.
class GroupAlgebra {
 public:
  using Coeffs = std::vector<uint64_t>;

  GroupAlgebra(Field field, Group group);

  const Field& field() const { return field_; }
  const Group& group() const { return group_; }
  uint64_t dim() const { return group_.order(); }

  Coeffs zero() const { return Coeffs(dim(), 0); }
  Coeffs one() const;
  /// coeff * g as an element, defaults to the basis element g itself.
  Coeffs basis(uint32_t g, uint64_t coeff = 1) const;

  bool is_zero(const Coeffs& u) const;
  Coeffs add(const Coeffs& u, const Coeffs& v) const;
  Coeffs sub(const Coeffs& u, const Coeffs& v) const;
  Coeffs neg(const Coeffs& u) const;
  Coeffs scalar_mul(uint64_t c, const Coeffs& u) const;

  /// Convolution product: (uv)_g = sum over ab = g of u_a v_b.
  Coeffs mul(const Coeffs& u, const Coeffs& v) const;
  /// Allocation-free variant; out must not alias u or v.
  void mul_into(Coeffs& out, const Coeffs& u, const Coeffs& v) const;
  /// u^m with u^0 = 1, by binary powering.
  Coeffs pow(const Coeffs& u, uint64_t m) const;

  /// The coefficient of the identity element.
  uint64_t constant_term(const Coeffs& u) const;
  bool has_zero_constant_term(const Coeffs& u) const {
    return constant_term(u) == 0;
  }
  bool is_idempotent(const Coeffs& u) const;

  /// u is nilpotent iff u^|G| = 0: left multiplication by u acts on a
  /// |G|-dimensional space, so a nilpotent action dies by power |G|, and
  /// applying the |G|-th power to 1 recovers u^|G|.
  bool is_nilpotent(const Coeffs& u) const;
  /// Least m >= 1 with u^m = 0, or nullopt when u is not nilpotent.
  std::optional<uint64_t> nilpotency_index(const Coeffs& u) const;

  /// Matrix of v -> u v in the group-element basis, row-major |G| x |G|.
  /// Its trace equals |G| * constant_term(u).
  std::vector<uint64_t> left_mult_matrix(const Coeffs& u) const;

  /// Detects the power-sequence cycle by storing every power seen. The
  /// sequence lives in a finite set so a repeat is guaranteed; max_powers
  /// caps how many powers may be stored before the instance is declared
  /// infeasible (std::length_error).
  RadicalCertificate radical_membership(const Coeffs& u,
                                        uint64_t max_powers = uint64_t{1} << 22) const;

  // --- element literals: "1*g1+1*g2", "0" ---
  std::string format_element(const Coeffs& u) const;
  Coeffs parse_element(std::string_view s) const;

  bool operator==(const GroupAlgebra& o) const {
    return field_ == o.field_ && group_ == o.group_;
  }

 private:
  Field field_;
  Group group_;
  void check(const Coeffs& u) const;
};

// Row-major square matrix helpers over a field, used to cross-check algebra
// facts against their linear-algebra counterparts.
std::vector<uint64_t> mat_mul(const Field& f, const std::vector<uint64_t>& a,
                              const std::vector<uint64_t>& b, size_t n);
std::vector<uint64_t> mat_pow(const Field& f, std::vector<uint64_t> a,
                              uint64_t e, size_t n);
uint64_t mat_trace(const Field& f, const std::vector<uint64_t>& a, size_t n);
bool mat_is_zero(const std::vector<uint64_t>& a);

}  // namespace vgm
