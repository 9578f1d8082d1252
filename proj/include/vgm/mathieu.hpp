#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgm/field.hpp"
#include "vgm/group.hpp"
#include "vgm/group_algebra.hpp"

namespace vgm {

enum class Outcome { Mathieu, NotMathieu, Indeterminate };

enum class WitnessKind {
  /// e != 0, e^2 = e, constant term 0: certifies NotMathieu.
  NonzeroIdempotent,
  /// u in the radical of the zero-constant-term subspace but not nilpotent:
  /// certifies NotMathieu.
  NonNilpotentRadical,
};

struct Witness {
  WitnessKind kind = WitnessKind::NonzeroIdempotent;
  GroupAlgebra::Coeffs element;
  std::optional<RadicalCertificate> certificate;
};

/// Decision outcome. A NotMathieu verdict always carries a witness that
/// re-validates under the group-algebra predicates. `examined` counts the
/// candidates a canonical serial scan would have inspected before reaching
/// the result, so identical inputs report identical costs regardless of
/// scheduling. Indeterminate verdicts carry the reason in `note`.
struct Verdict {
  Outcome outcome = Outcome::Indeterminate;
  std::string method;
  std::optional<Witness> witness;
  uint64_t examined = 0;
  std::string note;
};

struct DecideOptions {
  /// Exhaustive scans refuse to start when the candidate count exceeds
  /// this; the verdict is then Indeterminate, never a partial answer.
  uint64_t budget = uint64_t{1} << 20;
  /// Worker threads for exhaustive scans; 0 picks a hardware default.
  /// Results are identical for every thread count.
  unsigned threads = 0;
};

/// Decides whether the zero-constant-term subspace of K[G] is a Mathieu
/// subspace. Stages, in order:
///   1. characteristic p > |G|: Mathieu ("fast-path-large-char");
///   2. p divides |G| - 1: NotMathieu with the explicit idempotent
///      -(sum of non-identity elements) ("fast-path-nonidentity-sum");
///   3. abelian G with known cyclic factors: drop factors whose order is a
///      power of p (the verdict is unchanged by them); with d the remaining
///      order, a primitive d-th root of unity in K settles the question as
///      p > d, with a character idempotent witness when p < d
///      ("abelian-root-criterion"); without the root, p > d still gives
///      Mathieu ("abelian-reduction");
///   4. some proper cyclic subgroup already fails: NotMathieu with the
///      subgroup witness lifted into K[G] ("subgroup-obstruction");
///   5. exhaustive idempotent search over the zero-constant-term slice
///      within budget ("exhaustive-idempotent"), else Indeterminate.
Verdict decide(const Field& field, const Group& group, const DecideOptions& opts = {});

/// Enumerates every element e with zero constant term in canonical index
/// order; the first nonzero idempotent (smallest index, regardless of
/// scheduling) certifies NotMathieu, and their absence certifies Mathieu.
/// Candidate count |K|^(|G|-1) must be within budget, else Indeterminate.
Verdict decide_exhaustive_idempotent(const GroupAlgebra& algebra, uint64_t budget,
                                     unsigned threads = 0);

/// Enumerates every element of K[G]; a radical member that is not nilpotent
/// certifies NotMathieu (with its power-cycle certificate), and absence of
/// such certifies Mathieu. Candidate count |K|^|G| must be within budget.
Verdict decide_exhaustive_radical(const GroupAlgebra& algebra, uint64_t budget,
                                  unsigned threads = 0);

/// The element u = -(sum of all non-identity elements). When p divides
/// |G| - 1 it is a nonzero idempotent with zero constant term. The algebra
/// identity u^2 = (|G|-1) - (|G|-2) u is asserted on the returned element.
/// Requires |G| >= 2 and p | (|G| - 1).
GroupAlgebra::Coeffs witness_nonidentity_sum(const GroupAlgebra& algebra);

/// Root-of-unity criterion for an abelian group given by cyclic factors.
/// With d the order of the group after dropping characteristic-power
/// factors: if K has no primitive d-th root of unity, returns nullopt (the
/// criterion does not apply and the verdict may go either way); otherwise
/// Mathieu exactly when p > d, with a validated character-sum idempotent
/// witness (lifted into the full group) when p < d.
std::optional<Verdict> decide_abelian_root_criterion(const Field& field,
                                                     const std::vector<uint64_t>& factors);

/// Removes every cyclic factor whose order is a power of p; factors of
/// mixed divisibility are first split into their p-power and coprime parts
/// (coprime cyclic factors recombine freely). The Mathieu verdict of the
/// reduced product equals that of the original.
std::vector<uint64_t> strip_char_power_factors(const std::vector<uint64_t>& factors,
                                               uint64_t p);

/// Necessary condition: when K contains a primitive d-th root of unity for
/// d the p-free part of |G| (`applicable`), a Mathieu verdict forces
/// p >= q for every prime divisor q of |G|. `pass` reports that arithmetic
/// condition with the smallest violating q; a fail with `applicable` set
/// means a sound decider must say NotMathieu.
struct SylowCheck {
  bool applicable = false;
  bool pass = false;
  uint64_t failing_prime = 0;
};
SylowCheck sylow_necessary_condition(const Field& field, const Group& group);

/// Runs decide() on every proper cyclic subgroup in canonical order; the
/// first NotMathieu subgroup forces NotMathieu for the whole group (the
/// witness lies in the subalgebra). `examined` accumulates subgroup costs.
struct SubgroupObstruction {
  CyclicSubgroup subgroup;
  Verdict verdict;
};
struct SubgroupScanResult {
  std::optional<SubgroupObstruction> obstruction;
  uint64_t examined = 0;
};
SubgroupScanResult subgroup_obstruction_scan(const Field& field, const Group& group,
                                             const DecideOptions& opts = {});

/// Evaluation machinery for an abelian group Z_{d_1} x ... x Z_{d_n} over a
/// field containing primitive d_i-th roots of unity: the chosen roots xi_i,
/// and the point set S of all tuples (xi_1^{b_1}, ..., xi_n^{b_n}) indexed
/// mixed-radix exactly like the group elements. |S| = |G|.
struct EvalFrame {
  Field field;
  std::vector<uint64_t> factors;
  std::vector<uint64_t> roots;                 // field indices of the xi_i
  std::vector<std::vector<uint64_t>> points;   // |G| tuples of field indices
  uint64_t group_order = 1;
};

/// Requires gcd(p, d_i) = 1 and a primitive d_i-th root for every factor.
EvalFrame build_eval_frame(const Field& field, const std::vector<uint64_t>& factors);

/// A polynomial in n variables as a list of (exponent tuple, coefficient)
/// terms; exponents are reduced mod d_i before evaluation.
struct PolyTerm {
  std::vector<uint64_t> exponents;
  uint64_t coeff = 1;
};

/// Sum of evaluations of f over the frame's point set. Vanishes on every
/// nonconstant reduced monomial and equals |G| * c_0 in general, which is
/// what ties it to the zero-constant-term subspace.
uint64_t eval_sum(const EvalFrame& frame, const std::vector<PolyTerm>& f);

/// Exhaustively checks eval_sum(z^a) = |G| * [a = 0] over the exponent box,
/// and on monomials plus pseudo-random combinations that eval_sum vanishes
/// exactly on the polynomials whose image in K[G] has zero constant term.
struct KernelCheckReport {
  bool ok = true;
  uint64_t monomials_checked = 0;
  uint64_t samples_checked = 0;
  std::string failure;
};
KernelCheckReport verify_kernel_correspondence(const EvalFrame& frame,
                                               uint64_t samples = 64,
                                               uint64_t seed = 0x5eed5eedULL);

/// The idempotent d^{-1} * sum over the chosen characters chi of
/// sum_g chi(g^{-1}) g, where character beta sends the i-th generator to
/// xi_i^{beta_i}. Its constant term is |J| / d, so |J| = p drops it into
/// the zero-constant-term subspace while keeping it nonzero.
/// `char_indices` are distinct mixed-radix character indices; idempotency
/// of the result is asserted.
GroupAlgebra::Coeffs character_sum_idempotent(const EvalFrame& frame,
                                              const std::vector<uint64_t>& char_indices);

/// Checks that every nonempty subset of the (all nonzero) coefficients sums
/// to something nonzero; returns the lexicographically first failing subset
/// of minimal cardinality otherwise (1-based indices). Length capped at 24.
struct SubsetSumResult {
  bool pass = false;
  std::vector<uint32_t> failing_subset;
};
SubsetSumResult subset_sum_check(const Field& field, const std::vector<uint64_t>& coeffs);

/// Re-checks a witness against the algebra predicates for its kind.
bool validate_witness(const GroupAlgebra& algebra, const Witness& witness);

std::string outcome_string(Outcome o);

/// Stable single-line JSON: {"field": ..., "group": ..., "outcome": ...,
/// "method": ..., "witness": [coeff strings] | null, "examined": n}.
std::string verdict_to_json(const Field& field, const Group& group, const Verdict& v);

}  // namespace vgm
