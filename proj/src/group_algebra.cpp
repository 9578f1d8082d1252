#include "vgm/group_algebra.hpp"

#include <stdexcept>
#include <unordered_map>

namespace vgm {

namespace {

struct CoeffsHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

GroupAlgebra::GroupAlgebra(Field field, Group group)
    : field_(std::move(field)), group_(std::move(group)) {}

void GroupAlgebra::check(const Coeffs& u) const {
  if (u.size() != dim()) {
    throw std::invalid_argument("element has " + std::to_string(u.size()) +
                                " coefficients but the algebra has dimension " +
                                std::to_string(dim()));
  }
  for (uint64_t c : u) {
    if (c >= field_.size()) {
      throw std::invalid_argument("coefficient index out of range for " +
                                  field_.spec_string());
    }
  }
}

GroupAlgebra::Coeffs GroupAlgebra::one() const {
  Coeffs u(dim(), 0);
  u[group_.identity()] = field_.one();
  return u;
}

GroupAlgebra::Coeffs GroupAlgebra::basis(uint32_t g, uint64_t coeff) const {
  if (g >= dim()) throw std::out_of_range("group element index out of range");
  if (coeff >= field_.size()) throw std::invalid_argument("coefficient out of range");
  Coeffs u(dim(), 0);
  u[g] = coeff;
  return u;
}

bool GroupAlgebra::is_zero(const Coeffs& u) const {
  check(u);
  for (uint64_t c : u) {
    if (c != 0) return false;
  }
  return true;
}

GroupAlgebra::Coeffs GroupAlgebra::add(const Coeffs& u, const Coeffs& v) const {
  check(u);
  check(v);
  Coeffs out(dim());
  for (size_t i = 0; i < out.size(); ++i) out[i] = field_.add(u[i], v[i]);
  return out;
}

GroupAlgebra::Coeffs GroupAlgebra::sub(const Coeffs& u, const Coeffs& v) const {
  check(u);
  check(v);
  Coeffs out(dim());
  for (size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(u[i], v[i]);
  return out;
}

GroupAlgebra::Coeffs GroupAlgebra::neg(const Coeffs& u) const {
  check(u);
  Coeffs out(dim());
  for (size_t i = 0; i < out.size(); ++i) out[i] = field_.neg(u[i]);
  return out;
}

GroupAlgebra::Coeffs GroupAlgebra::scalar_mul(uint64_t c, const Coeffs& u) const {
  check(u);
  if (c >= field_.size()) throw std::invalid_argument("scalar out of range");
  Coeffs out(dim());
  for (size_t i = 0; i < out.size(); ++i) out[i] = field_.mul(c, u[i]);
  return out;
}

void GroupAlgebra::mul_into(Coeffs& out, const Coeffs& u, const Coeffs& v) const {
  check(u);
  check(v);
  out.assign(dim(), 0);
  const uint64_t n = dim();
  for (uint64_t a = 0; a < n; ++a) {
    if (u[a] == 0) continue;
    for (uint64_t b = 0; b < n; ++b) {
      if (v[b] == 0) continue;
      const uint32_t g = group_.op(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
      out[g] = field_.add(out[g], field_.mul(u[a], v[b]));
    }
  }
}

GroupAlgebra::Coeffs GroupAlgebra::mul(const Coeffs& u, const Coeffs& v) const {
  Coeffs out;
  mul_into(out, u, v);
  return out;
}

GroupAlgebra::Coeffs GroupAlgebra::pow(const Coeffs& u, uint64_t m) const {
  check(u);
  Coeffs result = one();
  Coeffs base = u;
  Coeffs scratch;
  while (m > 0) {
    if (m & 1) {
      mul_into(scratch, result, base);
      std::swap(result, scratch);
    }
    m >>= 1;
    if (m > 0) {
      mul_into(scratch, base, base);
      std::swap(base, scratch);
    }
  }
  return result;
}

uint64_t GroupAlgebra::constant_term(const Coeffs& u) const {
  check(u);
  return u[group_.identity()];
}

bool GroupAlgebra::is_idempotent(const Coeffs& u) const {
  check(u);
  Coeffs sq;
  mul_into(sq, u, u);
  return sq == u;
}

bool GroupAlgebra::is_nilpotent(const Coeffs& u) const {
  return is_zero(pow(u, dim()));
}

std::optional<uint64_t> GroupAlgebra::nilpotency_index(const Coeffs& u) const {
  check(u);
  Coeffs cur = u;
  Coeffs scratch;
  for (uint64_t m = 1; m <= dim(); ++m) {
    if (is_zero(cur)) return m;
    mul_into(scratch, cur, u);
    std::swap(cur, scratch);
  }
  return std::nullopt;
}

std::vector<uint64_t> GroupAlgebra::left_mult_matrix(const Coeffs& u) const {
  check(u);
  const uint64_t n = dim();
  std::vector<uint64_t> m(n * n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) {
      m[static_cast<uint64_t>(i) * n + j] = u[group_.op(i, group_.inverse(j))];
    }
  }
  return m;
}

RadicalCertificate GroupAlgebra::radical_membership(const Coeffs& u,
                                                    uint64_t max_powers) const {
  check(u);
  std::unordered_map<Coeffs, uint64_t, CoeffsHash> first_seen;
  std::vector<uint64_t> traces;  // traces[m-1] = constant term of u^m
  Coeffs cur = u;
  Coeffs scratch;
  uint64_t m = 1;
  first_seen.emplace(cur, m);
  traces.push_back(cur[group_.identity()]);
  for (;;) {
    mul_into(scratch, cur, u);
    std::swap(cur, scratch);
    ++m;
    const auto it = first_seen.find(cur);
    if (it != first_seen.end()) {
      const uint64_t preperiod = it->second;
      const uint64_t period = m - preperiod;
      bool in_radical = true;
      for (uint64_t j = preperiod; j < preperiod + period; ++j) {
        if (traces[j - 1] != 0) {
          in_radical = false;
          break;
        }
      }
      return RadicalCertificate{preperiod, period, in_radical};
    }
    if (first_seen.size() >= max_powers) {
      throw std::length_error("power sequence exceeded the storage budget");
    }
    first_seen.emplace(cur, m);
    traces.push_back(cur[group_.identity()]);
  }
}

std::string GroupAlgebra::format_element(const Coeffs& u) const {
  check(u);
  std::string out;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '+';
    out += field_.to_string(u[i]);
    out += "*g";
    out += std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

GroupAlgebra::Coeffs GroupAlgebra::parse_element(std::string_view s) const {
  // strip spaces
  std::string compact;
  compact.reserve(s.size());
  for (char ch : s) {
    if (ch != ' ' && ch != '\t') compact += ch;
  }
  if (compact.empty()) throw std::invalid_argument("empty element literal");
  Coeffs u = zero();
  if (compact == "0") return u;
  size_t start = 0;
  while (start < compact.size()) {
    size_t plus = compact.find('+', start);
    if (plus == std::string_view::npos) plus = compact.size();
    const std::string term = compact.substr(start, plus - start);
    const size_t star = term.find('*');
    if (star == std::string::npos || star + 2 >= term.size() || term[star + 1] != 'g') {
      throw std::invalid_argument("bad term '" + term + "': expected coeff*g<index>");
    }
    const uint64_t coeff = field_.parse_element(term.substr(0, star));
    uint64_t idx = 0;
    for (char ch : term.substr(star + 2)) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad group index in term '" + term + "'");
      idx = idx * 10 + static_cast<uint64_t>(ch - '0');
      if (idx > dim()) break;
    }
    if (idx >= dim()) throw std::invalid_argument("group index out of range in term '" + term + "'");
    u[idx] = field_.add(u[idx], coeff);
    start = plus + 1;
    if (plus == compact.size()) break;
    if (start == compact.size()) throw std::invalid_argument("trailing '+' in element literal");
  }
  return u;
}

std::vector<uint64_t> mat_mul(const Field& f, const std::vector<uint64_t>& a,
                              const std::vector<uint64_t>& b, size_t n) {
  std::vector<uint64_t> c(n * n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      const uint64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (size_t j = 0; j < n; ++j) {
        c[i * n + j] = f.add(c[i * n + j], f.mul(aik, b[k * n + j]));
      }
    }
  }
  return c;
}

std::vector<uint64_t> mat_pow(const Field& f, std::vector<uint64_t> a,
                              uint64_t e, size_t n) {
  std::vector<uint64_t> result(n * n, 0);
  for (size_t i = 0; i < n; ++i) result[i * n + i] = f.one();
  while (e > 0) {
    if (e & 1) result = mat_mul(f, result, a, n);
    a = mat_mul(f, a, a, n);
    e >>= 1;
  }
  return result;
}

uint64_t mat_trace(const Field& f, const std::vector<uint64_t>& a, size_t n) {
  uint64_t t = 0;
  for (size_t i = 0; i < n; ++i) t = f.add(t, a[i * n + i]);
  return t;
}

bool mat_is_zero(const std::vector<uint64_t>& a) {
  for (uint64_t x : a) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace vgm
