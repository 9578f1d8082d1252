#include "vgm/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "vgm/numeric.hpp"

namespace vgm {

Group Group::abelian(std::vector<uint64_t> factors) {
  Group g;
  uint64_t order = 1;
  for (uint64_t d : factors) {
    if (d < 2) throw std::invalid_argument("cyclic factors must be >= 2");
    if (order > kMaxOrder / d) throw std::invalid_argument("group order exceeds 10000");
    order *= d;
  }
  g.order_ = order;
  g.abelian_ = true;
  g.factors_ = std::move(factors);
  g.strides_.resize(g.factors_->size());
  uint64_t s = 1;
  for (size_t i = 0; i < g.factors_->size(); ++i) {
    g.strides_[i] = s;
    s *= (*g.factors_)[i];
  }
  g.finish_abelian();
  return g;
}

Group Group::cyclic(uint64_t d) {
  if (d <= 1) return trivial();
  return abelian({d});
}

void Group::finish_abelian() {
  identity_ = 0;
  inverse_.resize(order_);
  for (uint64_t a = 0; a < order_; ++a) {
    uint64_t inv = 0;
    for (size_t i = 0; i < factors_->size(); ++i) {
      const uint64_t d = (*factors_)[i];
      const uint64_t beta = (a / strides_[i]) % d;
      inv += ((d - beta) % d) * strides_[i];
    }
    inverse_[a] = static_cast<uint32_t>(inv);
  }
  if (order_ <= kOpTableLimit) {
    table_.resize(order_ * order_);
    for (uint64_t a = 0; a < order_; ++a) {
      for (uint64_t b = 0; b < order_; ++b) {
        uint64_t c = 0;
        for (size_t i = 0; i < factors_->size(); ++i) {
          const uint64_t d = (*factors_)[i];
          const uint64_t s = strides_[i];
          c += (((a / s) % d + (b / s) % d) % d) * s;
        }
        table_[a * order_ + b] = static_cast<uint32_t>(c);
      }
    }
  }
}

Group Group::from_cayley_table(const std::vector<std::vector<uint32_t>>& table,
                               std::string name) {
  const uint64_t n = table.size();
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  if (n > kMaxCayleyOrder) {
    throw std::invalid_argument("multiplication tables supported up to order 256");
  }
  Group g;
  g.order_ = n;
  g.factors_ = std::nullopt;
  g.table_.resize(n * n);
  for (uint64_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw std::invalid_argument("multiplication table is not square");
    for (uint64_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw std::invalid_argument("multiplication table entry out of range");
      g.table_[a * n + b] = table[a][b];
    }
  }
  g.finish_cayley(std::move(name));
  return g;
}

void Group::finish_cayley(std::string name) {
  const uint64_t n = order_;
  // Latin square: each row and column is a permutation.
  std::vector<bool> seen(n);
  for (uint64_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (uint64_t b = 0; b < n; ++b) {
      const uint32_t v = table_[a * n + b];
      if (seen[v]) throw std::invalid_argument("multiplication table row is not a permutation");
      seen[v] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (uint64_t b = 0; b < n; ++b) {
      const uint32_t v = table_[b * n + a];
      if (seen[v]) throw std::invalid_argument("multiplication table column is not a permutation");
      seen[v] = true;
    }
  }
  // Two-sided identity.
  bool found = false;
  for (uint64_t e = 0; e < n; ++e) {
    bool ok = true;
    for (uint64_t x = 0; x < n && ok; ++x) {
      ok = table_[e * n + x] == x && table_[x * n + e] == x;
    }
    if (ok) {
      identity_ = static_cast<uint32_t>(e);
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("multiplication table has no identity element");
  // Inverses.
  inverse_.assign(n, 0);
  for (uint64_t a = 0; a < n; ++a) {
    bool has = false;
    for (uint64_t b = 0; b < n; ++b) {
      if (table_[a * n + b] == identity_ && table_[b * n + a] == identity_) {
        inverse_[a] = static_cast<uint32_t>(b);
        has = true;
        break;
      }
    }
    if (!has) throw std::invalid_argument("multiplication table element has no two-sided inverse");
  }
  // Associativity over all triples.
  for (uint64_t a = 0; a < n; ++a) {
    for (uint64_t b = 0; b < n; ++b) {
      const uint32_t ab = table_[a * n + b];
      for (uint64_t c = 0; c < n; ++c) {
        if (table_[ab * n + c] != table_[a * n + table_[b * n + c]]) {
          throw std::invalid_argument("multiplication table is not associative");
        }
      }
    }
  }
  abelian_ = true;
  for (uint64_t a = 0; a < n && abelian_; ++a) {
    for (uint64_t b = a + 1; b < n; ++b) {
      if (table_[a * n + b] != table_[b * n + a]) {
        abelian_ = false;
        break;
      }
    }
  }
  name_ = name.empty() ? "cayley" + std::to_string(n) : std::move(name);
}

namespace {

std::vector<std::vector<uint32_t>> s3_table() {
  // Permutations of {0,1,2} in lexicographic order; product = composition,
  // (a*b)(x) = a(b(x)).
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int* p) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    }
    return -1;
  };
  std::vector<std::vector<uint32_t>> t(6, std::vector<uint32_t>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<uint32_t>(index_of(comp));
    }
  }
  return t;
}

std::vector<std::vector<uint32_t>> d4_table() {
  // Elements r^a s^b with index a + 4b; r^4 = s^2 = 1, s r = r^{-1} s.
  std::vector<std::vector<uint32_t>> t(8, std::vector<uint32_t>(8));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 2; ++d) {
          const int rot = b == 0 ? (a + c) % 4 : ((a - c) % 4 + 4) % 4;
          const int flip = (b + d) % 2;
          t[a + 4 * b][c + 4 * d] = static_cast<uint32_t>(rot + 4 * flip);
        }
      }
    }
  }
  return t;
}

std::vector<std::vector<uint32_t>> q8_table() {
  // Index 2*axis + sign with axis in {1, i, j, k} and sign in {+, -}.
  // axis products with result sign, axis_mul[a][b] = {axis, sign}
  const int axis_mul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<std::vector<uint32_t>> t(8, std::vector<uint32_t>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ax1 = a / 2, s1 = a % 2, ax2 = b / 2, s2 = b % 2;
      const int ax = axis_mul[ax1][ax2][0];
      const int s = (s1 + s2 + axis_mul[ax1][ax2][1]) % 2;
      t[a][b] = static_cast<uint32_t>(2 * ax + s);
    }
  }
  return t;
}

}  // namespace

Group Group::builtin(std::string_view name) {
  if (name == "S3") return from_cayley_table(s3_table(), "S3");
  if (name == "D4") return from_cayley_table(d4_table(), "D4");
  if (name == "Q8") return from_cayley_table(q8_table(), "Q8");
  throw std::invalid_argument("unknown builtin group '" + std::string(name) +
                              "' (expected S3, D4 or Q8)");
}

uint32_t Group::op_unchecked(uint32_t a, uint32_t b) const {
  if (!table_.empty()) return table_[static_cast<uint64_t>(a) * order_ + b];
  uint64_t c = 0;
  for (size_t i = 0; i < factors_->size(); ++i) {
    const uint64_t d = (*factors_)[i];
    const uint64_t s = strides_[i];
    c += (((a / s) % d + (b / s) % d) % d) * s;
  }
  return static_cast<uint32_t>(c);
}

uint32_t Group::op(uint32_t a, uint32_t b) const {
  if (a >= order_ || b >= order_) {
    throw std::out_of_range("group element index out of range");
  }
  return op_unchecked(a, b);
}

uint32_t Group::inverse(uint32_t a) const {
  if (a >= order_) throw std::out_of_range("group element index out of range");
  return inverse_[a];
}

uint32_t Group::power(uint32_t g, uint64_t e) const {
  if (g >= order_) throw std::out_of_range("group element index out of range");
  uint32_t result = identity_;
  uint32_t base = g;
  while (e > 0) {
    if (e & 1) result = op_unchecked(result, base);
    base = op_unchecked(base, base);
    e >>= 1;
  }
  return result;
}

uint64_t Group::element_order(uint32_t g) const {
  if (g >= order_) throw std::out_of_range("group element index out of range");
  if (factors_) {
    uint64_t ord = 1;
    for (size_t i = 0; i < factors_->size(); ++i) {
      const uint64_t d = (*factors_)[i];
      const uint64_t beta = (g / strides_[i]) % d;
      ord = std::lcm(ord, d / std::gcd(d, beta));
    }
    return ord;
  }
  uint64_t m = 1;
  uint32_t cur = g;
  while (cur != identity_) {
    cur = op_unchecked(cur, g);
    ++m;
  }
  return m;
}

std::vector<CyclicSubgroup> Group::cyclic_subgroups() const {
  if (order_ > kMaxOrder) throw std::invalid_argument("group too large for subgroup enumeration");
  std::map<std::vector<uint32_t>, CyclicSubgroup> seen;
  for (uint32_t g = 0; g < order_; ++g) {
    std::vector<uint32_t> powers{identity_};
    uint32_t cur = op_unchecked(identity_, g);
    while (cur != identity_) {
      powers.push_back(cur);
      cur = op_unchecked(cur, g);
    }
    std::vector<uint32_t> key = powers;
    std::sort(key.begin(), key.end());
    // ascending g, so the first generator recorded is the lowest-index one
    seen.emplace(std::move(key),
                 CyclicSubgroup{g, powers.size(), std::move(powers)});
  }
  std::vector<CyclicSubgroup> out;
  out.reserve(seen.size());
  for (auto& [key, sub] : seen) out.push_back(std::move(sub));
  std::sort(out.begin(), out.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
    return a.order != b.order ? a.order < b.order : a.generator < b.generator;
  });
  return out;
}

std::string Group::spec_string() const {
  if (!factors_) return name_;
  if (factors_->empty()) return "Z1";
  std::string out;
  for (uint64_t d : *factors_) {
    if (!out.empty()) out += 'x';
    out += 'Z' + std::to_string(d);
  }
  return out;
}

bool Group::operator==(const Group& o) const {
  if (factors_.has_value() != o.factors_.has_value()) return false;
  if (factors_) return *factors_ == *o.factors_;
  return order_ == o.order_ && table_ == o.table_;
}

Group parse_group_spec(std::string_view spec) {
  if (spec == "S3" || spec == "D4" || spec == "Q8") return Group::builtin(spec);
  if (spec == "Z1") return Group::trivial();
  if (spec.empty()) throw std::invalid_argument("empty group spec");
  std::vector<uint64_t> factors;
  size_t start = 0;
  while (start < spec.size()) {
    size_t sep = spec.find('x', start);
    if (sep == std::string_view::npos) sep = spec.size();
    const std::string_view tok = spec.substr(start, sep - start);
    if (tok.size() < 2 || tok[0] != 'Z') {
      throw std::invalid_argument("bad group token '" + std::string(tok) +
                                  "' in '" + std::string(spec) + "'");
    }
    uint64_t d = 0;
    for (char ch : tok.substr(1)) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("bad group token '" + std::string(tok) +
                                    "' in '" + std::string(spec) + "'");
      }
      d = d * 10 + static_cast<uint64_t>(ch - '0');
      if (d > 100000) throw std::invalid_argument("cyclic factor too large in '" + std::string(spec) + "'");
    }
    if (d < 2) {
      throw std::invalid_argument("bad group token '" + std::string(tok) +
                                  "': cyclic factors must be >= 2");
    }
    factors.push_back(d);
    start = sep + 1;
    if (sep == spec.size()) break;
    if (start == spec.size()) {
      throw std::invalid_argument("trailing 'x' in group spec '" + std::string(spec) + "'");
    }
  }
  return Group::abelian(std::move(factors));
}

namespace {

void partitions_desc(unsigned e, unsigned max_part, std::vector<unsigned>& cur,
                     std::vector<std::vector<unsigned>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_desc(e - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<uint64_t>> abelian_factor_lists_of_order(uint64_t m) {
  if (m == 0) throw std::invalid_argument("group order must be >= 1");
  std::vector<std::vector<uint64_t>> lists{{}};
  for (const auto& [p, e] : factorize(m)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions_desc(e, e, cur, parts);
    std::vector<std::vector<uint64_t>> next;
    for (const auto& base : lists) {
      for (const auto& part : parts) {
        auto ext = base;
        for (unsigned a : part) {
          uint64_t pe = 1;
          for (unsigned i = 0; i < a; ++i) pe *= p;
          ext.push_back(pe);
        }
        next.push_back(std::move(ext));
      }
    }
    lists = std::move(next);
  }
  for (auto& l : lists) std::sort(l.begin(), l.end());
  std::sort(lists.begin(), lists.end());
  return lists;
}

std::vector<std::vector<uint64_t>> abelian_factor_lists_up_to(uint64_t max_order) {
  std::vector<std::vector<uint64_t>> out;
  for (uint64_t m = 1; m <= max_order; ++m) {
    auto lists = abelian_factor_lists_of_order(m);
    out.insert(out.end(), lists.begin(), lists.end());
  }
  return out;
}

}  // namespace vgm
