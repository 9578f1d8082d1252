#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgm {

/// A distinct cyclic subgroup, tagged with its lowest-index generator.
/// `elements` lists the subgroup in power order: g^0 = identity, g^1, ...
struct CyclicSubgroup {
  uint32_t generator = 0;
  uint64_t order = 0;
  std::vector<uint32_t> elements;
};

/// Finite group, either a product of cyclic groups Z_{d_1} x ... x Z_{d_n}
/// or a validated Cayley table. Elements are indices in [0, order()).
///
/// Abelian products use mixed-radix indexing with the first factor least
/// significant: index = sum_i beta_i * prod_{j<i} d_j. Group-algebra
/// coefficient vectors index elements directly by this encoding.
///
/// Groups are immutable after construction; all queries are pure.
class Group {
 public:
  /// Product of cyclic groups; every factor must be >= 2 and the total
  /// order at most 10^4. An empty factor list is the trivial group.
  static Group abelian(std::vector<uint64_t> factors);

  /// Z_d for d >= 2; d = 1 gives the trivial group.
  static Group cyclic(uint64_t d);

  static Group trivial() { return abelian({}); }

  /// Builds a group from an order x order multiplication table
  /// (table[a][b] = index of a*b). The table is fully validated: Latin
  /// square, two-sided identity, inverses, and associativity over all
  /// triples. Supported up to order 256.
  static Group from_cayley_table(const std::vector<std::vector<uint32_t>>& table,
                                 std::string name = "");

  /// One of "S3", "D4", "Q8".
  static Group builtin(std::string_view name);

  uint64_t order() const { return order_; }
  bool is_abelian() const { return abelian_; }
  /// Cyclic factors when the group was built as a product; nullopt for
  /// Cayley-backed groups.
  const std::optional<std::vector<uint64_t>>& abelian_factors() const {
    return factors_;
  }

  uint32_t identity() const { return identity_; }
  /// Throws std::out_of_range for invalid indices.
  uint32_t op(uint32_t a, uint32_t b) const;
  uint32_t inverse(uint32_t a) const;
  uint32_t power(uint32_t g, uint64_t e) const;
  /// Least m >= 1 with g^m = identity; divides order().
  uint64_t element_order(uint32_t g) const;

  /// All distinct cyclic subgroups (including the trivial one and, when the
  /// group is cyclic, the group itself), sorted by (order, generator).
  std::vector<CyclicSubgroup> cyclic_subgroups() const;

  /// "Z1", "Z2xZ3", "S3", ...
  std::string spec_string() const;

  bool operator==(const Group& o) const;

 private:
  Group() = default;
  void finish_abelian();
  void finish_cayley(std::string name);

  uint64_t order_ = 1;
  bool abelian_ = true;
  uint32_t identity_ = 0;
  std::optional<std::vector<uint64_t>> factors_;
  std::vector<uint64_t> strides_;
  std::vector<uint32_t> table_;  // row-major; may be empty for large abelian
  std::vector<uint32_t> inverse_;
  std::string name_;

  static constexpr uint64_t kMaxOrder = 10000;
  static constexpr uint64_t kOpTableLimit = 1024;
  static constexpr uint64_t kMaxCayleyOrder = 256;

  uint32_t op_unchecked(uint32_t a, uint32_t b) const;
};

/// Parses the CLI group grammar: "Z<d1>xZ<d2>x..." (e.g. "Z3", "Z2xZ2xZ5"),
/// "Z1" for the trivial group, or a builtin name S3|D4|Q8.
/// Throws std::invalid_argument naming the offending token.
Group parse_group_spec(std::string_view spec);

/// Factor lists of all abelian groups of order m, one per isomorphism
/// class, factors given as prime powers in ascending order. Lists are
/// sorted lexicographically. Order 1 yields the single empty list.
std::vector<std::vector<uint64_t>> abelian_factor_lists_of_order(uint64_t m);

/// Concatenation of abelian_factor_lists_of_order(1..max_order).
std::vector<std::vector<uint64_t>> abelian_factor_lists_up_to(uint64_t max_order);

}  // namespace vgm
