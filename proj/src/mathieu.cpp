#include "vgm/mathieu.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "vgm/numeric.hpp"

namespace vgm {

namespace {

constexpr uint64_t kNotFound = ~uint64_t{0};

unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return std::min(std::max(hw, 1u), 8u);
}

void atomic_min(std::atomic<uint64_t>& best, uint64_t v) {
  uint64_t cur = best.load(std::memory_order_relaxed);
  while (v < cur && !best.compare_exchange_weak(cur, v)) {
  }
}

/// Smallest index in [0, total) accepted by a tester, or kNotFound. The
/// range is split into ascending chunks claimed by workers; a chunk is
/// skipped only when every index in it exceeds an already-found witness, so
/// the result is the true minimum whatever the scheduling.
template <typename TesterFactory>
uint64_t parallel_min_search(uint64_t total, unsigned threads, TesterFactory make_tester) {
  const unsigned n_threads = threads == 0 ? default_threads() : threads;
  if (n_threads <= 1 || total < 4096) {
    auto test = make_tester();
    for (uint64_t i = 0; i < total; ++i) {
      if (test(i)) return i;
    }
    return kNotFound;
  }
  const uint64_t chunk = std::max<uint64_t>(1024, total / (uint64_t{n_threads} * 32));
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> best{kNotFound};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned w = 0; w < n_threads; ++w) {
    pool.emplace_back([&, test = make_tester()]() mutable {
      try {
        for (;;) {
          const uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
          const uint64_t start = c * chunk;
          if (start >= total || start > best.load(std::memory_order_relaxed)) break;
          const uint64_t end = std::min(total, start + chunk);
          for (uint64_t i = start; i < end; ++i) {
            if ((i & 255) == 0 && i > best.load(std::memory_order_relaxed)) break;
            if (test(i)) {
              atomic_min(best, i);
              break;  // later indices in this chunk are larger
            }
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return best.load();
}

/// q^exponent, or nullopt when it would exceed the budget.
std::optional<uint64_t> pow_within(uint64_t q, uint64_t exponent, uint64_t budget) {
  uint64_t total = 1;
  for (uint64_t i = 0; i < exponent; ++i) {
    if (total > budget / q) return std::nullopt;
    total *= q;
  }
  return total;
}

Verdict budget_exceeded(const GroupAlgebra& algebra, uint64_t exponent, uint64_t budget) {
  Verdict v;
  v.outcome = Outcome::Indeterminate;
  v.method = "budget-exceeded";
  v.note = std::to_string(algebra.field().size()) + "^" + std::to_string(exponent) +
           " candidates exceed the budget of " + std::to_string(budget);
  return v;
}

}  // namespace

Verdict decide_exhaustive_idempotent(const GroupAlgebra& algebra, uint64_t budget,
                                     unsigned threads) {
  const uint64_t n = algebra.dim();
  const uint64_t q = algebra.field().size();
  const auto total = pow_within(q, n - 1, budget);
  if (!total) return budget_exceeded(algebra, n - 1, budget);

  std::vector<uint32_t> positions;
  positions.reserve(n - 1);
  for (uint32_t i = 0; i < n; ++i) {
    if (i != algebra.group().identity()) positions.push_back(i);
  }

  auto make_tester = [&]() {
    return [&algebra, &positions, q, cand = algebra.zero(),
            sq = GroupAlgebra::Coeffs{}](uint64_t t) mutable {
      bool nonzero = false;
      for (uint32_t pos : positions) {
        const uint64_t digit = t % q;
        t /= q;
        cand[pos] = digit;
        nonzero |= digit != 0;
      }
      if (!nonzero) return false;
      algebra.mul_into(sq, cand, cand);
      return sq == cand;
    };
  };

  const uint64_t found = parallel_min_search(*total, threads, make_tester);
  Verdict v;
  if (found == kNotFound) {
    v.outcome = Outcome::Mathieu;
    v.method = "exhaustive-idempotent";
    v.examined = *total;
    return v;
  }
  GroupAlgebra::Coeffs e = algebra.zero();
  uint64_t t = found;
  for (uint32_t pos : positions) {
    e[pos] = t % q;
    t /= q;
  }
  v.outcome = Outcome::NotMathieu;
  v.method = "exhaustive-idempotent";
  v.witness = Witness{WitnessKind::NonzeroIdempotent, std::move(e), std::nullopt};
  v.examined = found + 1;
  return v;
}

Verdict decide_exhaustive_radical(const GroupAlgebra& algebra, uint64_t budget,
                                  unsigned threads) {
  const uint64_t n = algebra.dim();
  const uint64_t q = algebra.field().size();
  const auto total = pow_within(q, n, budget);
  if (!total) return budget_exceeded(algebra, n, budget);

  auto make_tester = [&]() {
    return [&algebra, n, q, cand = algebra.zero()](uint64_t t) mutable {
      for (uint64_t pos = 0; pos < n; ++pos) {
        cand[pos] = t % q;
        t /= q;
      }
      if (!algebra.radical_membership(cand).in_radical) return false;
      return !algebra.is_nilpotent(cand);
    };
  };

  const uint64_t found = parallel_min_search(*total, threads, make_tester);
  Verdict v;
  if (found == kNotFound) {
    v.outcome = Outcome::Mathieu;
    v.method = "exhaustive-radical";
    v.examined = *total;
    return v;
  }
  GroupAlgebra::Coeffs u(n);
  uint64_t t = found;
  for (uint64_t pos = 0; pos < n; ++pos) {
    u[pos] = t % q;
    t /= q;
  }
  v.outcome = Outcome::NotMathieu;
  v.method = "exhaustive-radical";
  v.witness = Witness{WitnessKind::NonNilpotentRadical, u, algebra.radical_membership(u)};
  v.examined = found + 1;
  return v;
}

GroupAlgebra::Coeffs witness_nonidentity_sum(const GroupAlgebra& algebra) {
  const uint64_t n = algebra.dim();
  const uint64_t p = algebra.field().characteristic();
  if (n < 2 || (n - 1) % p != 0) {
    throw std::invalid_argument("requires |G| >= 2 with the characteristic dividing |G| - 1");
  }
  const Field& f = algebra.field();
  GroupAlgebra::Coeffs u(n, f.neg(f.one()));
  u[algebra.group().identity()] = 0;
  // u^2 = (|G|-1) - (|G|-2) u must hold as an algebra identity
  const auto lhs = algebra.mul(u, u);
  const auto rhs = algebra.sub(
      algebra.scalar_mul(f.from_int(static_cast<long long>(n) - 1), algebra.one()),
      algebra.scalar_mul(f.from_int(static_cast<long long>(n) - 2), u));
  if (lhs != rhs) throw std::logic_error("complement-sum identity failed");
  return u;
}

std::vector<uint64_t> strip_char_power_factors(const std::vector<uint64_t>& factors,
                                               uint64_t p) {
  std::vector<uint64_t> kept;
  for (uint64_t d : factors) {
    const uint64_t m = coprime_part(d, p);
    if (m > 1) kept.push_back(m);
  }
  return kept;
}

EvalFrame build_eval_frame(const Field& field, const std::vector<uint64_t>& factors) {
  EvalFrame frame{field, factors, {}, {}, 1};
  for (uint64_t d : factors) {
    if (d < 2) throw std::invalid_argument("cyclic factors must be >= 2");
    if (d % field.characteristic() == 0) {
      throw std::invalid_argument("the characteristic divides the factor " + std::to_string(d));
    }
    if (frame.group_order > 10000 / d) throw std::invalid_argument("group order exceeds 10000");
    frame.group_order *= d;
    const auto root = field.primitive_root_of_unity(d);
    if (!root) {
      throw std::invalid_argument(field.spec_string() + " has no primitive root of unity of order " +
                                  std::to_string(d));
    }
    frame.roots.push_back(root->index);
  }
  frame.points.reserve(frame.group_order);
  for (uint64_t t = 0; t < frame.group_order; ++t) {
    std::vector<uint64_t> point(factors.size());
    uint64_t rest = t;
    for (size_t i = 0; i < factors.size(); ++i) {
      point[i] = field.pow(frame.roots[i], rest % factors[i]);
      rest /= factors[i];
    }
    frame.points.push_back(std::move(point));
  }
  return frame;
}

uint64_t eval_sum(const EvalFrame& frame, const std::vector<PolyTerm>& f) {
  const Field& field = frame.field;
  for (const auto& term : f) {
    if (term.exponents.size() != frame.factors.size()) {
      throw std::invalid_argument("term arity does not match the frame");
    }
    if (term.coeff >= field.size()) throw std::invalid_argument("coefficient out of range");
  }
  uint64_t acc = 0;
  for (const auto& point : frame.points) {
    for (const auto& term : f) {
      uint64_t v = term.coeff;
      for (size_t i = 0; i < point.size(); ++i) {
        v = field.mul(v, field.pow(point[i], term.exponents[i] % frame.factors[i]));
      }
      acc = field.add(acc, v);
    }
  }
  return acc;
}

namespace {

std::vector<uint64_t> mixed_radix_digits(uint64_t t, const std::vector<uint64_t>& radices) {
  std::vector<uint64_t> digits(radices.size());
  for (size_t i = 0; i < radices.size(); ++i) {
    digits[i] = t % radices[i];
    t /= radices[i];
  }
  return digits;
}

}  // namespace

KernelCheckReport verify_kernel_correspondence(const EvalFrame& frame, uint64_t samples,
                                               uint64_t seed) {
  KernelCheckReport report;
  const Field& field = frame.field;
  const uint64_t d = frame.group_order;
  const uint64_t d_in_field = field.from_int(static_cast<long long>(d % field.characteristic()));
  GroupAlgebra algebra(field, Group::abelian(frame.factors));

  auto fail = [&](std::string what) {
    report.ok = false;
    if (report.failure.empty()) report.failure = std::move(what);
  };

  // Monomial sweep: the evaluation sum is d at the zero exponent and 0
  // elsewhere, matching constant-term membership of the monomial's image.
  for (uint64_t t = 0; t < d; ++t) {
    const PolyTerm mono{mixed_radix_digits(t, frame.factors), field.one()};
    const uint64_t L = eval_sum(frame, {mono});
    const uint64_t expected = t == 0 ? d_in_field : 0;
    ++report.monomials_checked;
    if (L != expected) {
      fail("monomial " + std::to_string(t) + ": evaluation sum " + field.to_string(L) +
           " != " + field.to_string(expected));
      continue;
    }
    const bool image_in_subspace = t != 0;  // image is the basis element g_t
    if ((L == 0) != image_in_subspace) {
      fail("monomial " + std::to_string(t) + ": kernel membership mismatch");
    }
  }

  // Random dense combinations; the first two fix the constant coefficient
  // to 0 and 1 so both sides of the correspondence are always exercised.
  std::mt19937_64 rng(seed);
  const uint64_t q = field.size();
  for (uint64_t s = 0; s < samples; ++s) {
    GroupAlgebra::Coeffs image(d);
    std::vector<PolyTerm> terms;
    for (uint64_t t = 0; t < d; ++t) {
      uint64_t c = rng() % q;
      if (s == 0 && t == 0) c = 0;
      if (s == 1 && t == 0) c = field.one();
      image[t] = c;
      if (c != 0) terms.push_back(PolyTerm{mixed_radix_digits(t, frame.factors), c});
    }
    const uint64_t L = eval_sum(frame, terms);
    const uint64_t expected = field.mul(d_in_field, image[0]);
    ++report.samples_checked;
    if (L != expected) {
      fail("sample " + std::to_string(s) + ": evaluation sum mismatch");
      continue;
    }
    if ((L == 0) != algebra.has_zero_constant_term(image)) {
      fail("sample " + std::to_string(s) + ": kernel membership mismatch");
    }
  }
  return report;
}

GroupAlgebra::Coeffs character_sum_idempotent(const EvalFrame& frame,
                                              const std::vector<uint64_t>& char_indices) {
  if (char_indices.empty()) throw std::invalid_argument("need at least one character");
  {
    auto sorted = char_indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("character indices must be distinct");
    }
    if (sorted.back() >= frame.group_order) {
      throw std::invalid_argument("character index out of range");
    }
  }
  const Field& field = frame.field;
  const uint64_t d = frame.group_order;
  const uint64_t d_inv = field.inv(field.from_int(static_cast<long long>(d % field.characteristic())));

  GroupAlgebra algebra(field, Group::abelian(frame.factors));
  GroupAlgebra::Coeffs e(d, 0);
  for (uint64_t g = 0; g < d; ++g) {
    const auto gamma = mixed_radix_digits(g, frame.factors);
    uint64_t acc = 0;
    for (uint64_t chi : char_indices) {
      const auto beta = mixed_radix_digits(chi, frame.factors);
      uint64_t v = field.one();
      for (size_t i = 0; i < frame.factors.size(); ++i) {
        const uint64_t di = frame.factors[i];
        const uint64_t exp = beta[i] * ((di - gamma[i]) % di) % di;
        v = field.mul(v, field.pow(frame.roots[i], exp));
      }
      acc = field.add(acc, v);
    }
    e[g] = field.mul(d_inv, acc);
  }
  if (!algebra.is_idempotent(e)) throw std::logic_error("character sum is not idempotent");
  return e;
}

std::optional<Verdict> decide_abelian_root_criterion(const Field& field,
                                                     const std::vector<uint64_t>& factors) {
  const Group group = Group::abelian(factors);  // validates factors and order
  const uint64_t p = field.characteristic();
  const auto reduced = strip_char_power_factors(factors, p);
  uint64_t d = 1;
  for (uint64_t m : reduced) d *= m;

  if (!field.primitive_root_of_unity(d)) return std::nullopt;

  Verdict v;
  if (p > d) {
    v.outcome = Outcome::Mathieu;
    v.method = "abelian-root-criterion";
    return v;
  }

  // p < d (p never divides d): build the character idempotent on the
  // reduced product and lift it along the subgroup embedding that sends
  // the generator of a reduced factor m to d_i/m times the original one.
  const EvalFrame frame = build_eval_frame(field, reduced);
  std::vector<uint64_t> char_indices(p);
  std::iota(char_indices.begin(), char_indices.end(), 0);
  const auto reduced_elem = character_sum_idempotent(frame, char_indices);

  GroupAlgebra algebra(field, group);
  GroupAlgebra::Coeffs lifted = algebra.zero();
  std::vector<size_t> kept_pos;
  std::vector<uint64_t> multiplier;
  for (size_t i = 0; i < factors.size(); ++i) {
    const uint64_t m = coprime_part(factors[i], p);
    if (m > 1) {
      kept_pos.push_back(i);
      multiplier.push_back(factors[i] / m);
    }
  }
  std::vector<uint64_t> strides(factors.size());
  uint64_t s = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    strides[i] = s;
    s *= factors[i];
  }
  for (uint64_t t = 0; t < d; ++t) {
    const auto beta = mixed_radix_digits(t, reduced);
    uint64_t gidx = 0;
    for (size_t j = 0; j < reduced.size(); ++j) {
      const size_t i = kept_pos[j];
      gidx += (beta[j] * multiplier[j] % factors[i]) * strides[i];
    }
    lifted[gidx] = reduced_elem[t];
  }

  Witness w{WitnessKind::NonzeroIdempotent, std::move(lifted), std::nullopt};
  if (!validate_witness(algebra, w)) throw std::logic_error("lifted character idempotent failed validation");
  v.outcome = Outcome::NotMathieu;
  v.method = "abelian-root-criterion";
  v.witness = std::move(w);
  return v;
}

SylowCheck sylow_necessary_condition(const Field& field, const Group& group) {
  const uint64_t p = field.characteristic();
  const uint64_t d = coprime_part(group.order(), p);
  SylowCheck check;
  // The arithmetic condition is always reportable; the root hypothesis is
  // what makes a failure force NotMathieu.
  check.applicable = field.primitive_root_of_unity(d).has_value();
  check.pass = true;
  for (uint64_t q : prime_divisors(group.order())) {
    if (q > p) {
      check.pass = false;
      check.failing_prime = q;
      break;
    }
  }
  return check;
}

SubgroupScanResult subgroup_obstruction_scan(const Field& field, const Group& group,
                                             const DecideOptions& opts) {
  SubgroupScanResult result;
  std::map<uint64_t, Verdict> by_order;  // cyclic groups of equal order are isomorphic
  for (const auto& sub : group.cyclic_subgroups()) {
    if (sub.order >= group.order()) continue;
    auto it = by_order.find(sub.order);
    if (it == by_order.end()) {
      it = by_order.emplace(sub.order, decide(field, Group::cyclic(sub.order), opts)).first;
      result.examined += it->second.examined;
    }
    if (it->second.outcome == Outcome::NotMathieu) {
      result.obstruction = SubgroupObstruction{sub, it->second};
      return result;
    }
  }
  return result;
}

Verdict decide(const Field& field, const Group& group, const DecideOptions& opts) {
  const uint64_t n = group.order();
  const uint64_t p = field.characteristic();

  if (p > n) {
    Verdict v;
    v.outcome = Outcome::Mathieu;
    v.method = "fast-path-large-char";
    return v;
  }

  if (n >= 2 && (n - 1) % p == 0) {
    GroupAlgebra algebra(field, group);
    Witness w{WitnessKind::NonzeroIdempotent, witness_nonidentity_sum(algebra), std::nullopt};
    if (!validate_witness(algebra, w)) throw std::logic_error("complement-sum witness failed validation");
    Verdict v;
    v.outcome = Outcome::NotMathieu;
    v.method = "fast-path-nonidentity-sum";
    v.witness = std::move(w);
    return v;
  }

  if (group.abelian_factors()) {
    const auto& factors = *group.abelian_factors();
    if (auto v = decide_abelian_root_criterion(field, factors)) return *v;
    // No usable root of unity; dropping characteristic-power factors alone
    // can still leave a product smaller than p.
    uint64_t d = 1;
    for (uint64_t m : strip_char_power_factors(factors, p)) d *= m;
    if (p > d) {
      Verdict v;
      v.outcome = Outcome::Mathieu;
      v.method = "abelian-reduction";
      return v;
    }
  }

  auto scan = subgroup_obstruction_scan(field, group, opts);
  if (scan.obstruction) {
    const auto& sub = scan.obstruction->subgroup;
    const Witness& sub_witness = *scan.obstruction->verdict.witness;
    GroupAlgebra algebra(field, group);
    GroupAlgebra::Coeffs lifted = algebra.zero();
    for (size_t t = 0; t < sub.elements.size(); ++t) {
      lifted[sub.elements[t]] = sub_witness.element[t];
    }
    Witness w{sub_witness.kind, std::move(lifted), std::nullopt};
    if (w.kind == WitnessKind::NonNilpotentRadical) {
      w.certificate = algebra.radical_membership(w.element);
    }
    if (!validate_witness(algebra, w)) throw std::logic_error("lifted subgroup witness failed validation");
    Verdict v;
    v.outcome = Outcome::NotMathieu;
    v.method = "subgroup-obstruction";
    v.witness = std::move(w);
    v.examined = scan.examined;
    return v;
  }

  GroupAlgebra algebra(field, group);
  Verdict v = decide_exhaustive_idempotent(algebra, opts.budget, opts.threads);
  v.examined += scan.examined;
  if (v.outcome == Outcome::NotMathieu && !validate_witness(algebra, *v.witness)) {
    throw std::logic_error("exhaustive witness failed validation");
  }
  return v;
}

SubsetSumResult subset_sum_check(const Field& field, const std::vector<uint64_t>& coeffs) {
  const size_t d = coeffs.size();
  if (d > 24) throw std::invalid_argument("at most 24 coefficients are supported");
  for (size_t i = 0; i < d; ++i) {
    if (coeffs[i] >= field.size()) throw std::invalid_argument("coefficient out of range");
    if (coeffs[i] == 0) {
      throw std::invalid_argument("coefficient " + std::to_string(i + 1) + " is zero");
    }
  }
  // Cardinality 1 first, then 2, ...: the first zero sum found has minimal
  // cardinality and is lexicographically first within it.
  std::vector<uint32_t> idx;
  for (size_t k = 1; k <= d; ++k) {
    idx.resize(k);
    for (size_t i = 0; i < k; ++i) idx[i] = static_cast<uint32_t>(i);
    for (;;) {
      uint64_t sum = 0;
      for (uint32_t i : idx) sum = field.add(sum, coeffs[i]);
      if (sum == 0) {
        SubsetSumResult r;
        r.pass = false;
        for (uint32_t& i : idx) r.failing_subset.push_back(i + 1);
        return r;
      }
      // next k-combination in lexicographic order
      size_t pos = k;
      while (pos > 0 && idx[pos - 1] == d - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return SubsetSumResult{true, {}};
}

bool validate_witness(const GroupAlgebra& algebra, const Witness& witness) {
  switch (witness.kind) {
    case WitnessKind::NonzeroIdempotent:
      return !algebra.is_zero(witness.element) && algebra.is_idempotent(witness.element) &&
             algebra.has_zero_constant_term(witness.element);
    case WitnessKind::NonNilpotentRadical:
      return algebra.radical_membership(witness.element).in_radical &&
             !algebra.is_nilpotent(witness.element);
  }
  return false;
}

std::string outcome_string(Outcome o) {
  switch (o) {
    case Outcome::Mathieu:
      return "mathieu";
    case Outcome::NotMathieu:
      return "not_mathieu";
    case Outcome::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

std::string verdict_to_json(const Field& field, const Group& group, const Verdict& v) {
  nlohmann::ordered_json j;
  j["field"] = field.spec_string();
  j["group"] = group.spec_string();
  j["outcome"] = outcome_string(v.outcome);
  j["method"] = v.method;
  if (v.witness) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (uint64_t c : v.witness->element) coeffs.push_back(field.to_string(c));
    j["witness"] = std::move(coeffs);
  } else {
    j["witness"] = nullptr;
  }
  j["examined"] = v.examined;
  return j.dump();
}

}  // namespace vgm
