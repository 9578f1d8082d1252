#include "vgm/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vgm/numeric.hpp"

namespace vgm {

namespace {

// Dense polynomials over GF(p), low coefficients first, used only for the
// modulus search at construction time.
using Poly = std::vector<uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, uint64_t p) {
  trim(a);
  const size_t k = f.size() - 1;  // f monic of degree k
  while (a.size() > k) {
    const uint64_t c = a.back();
    const size_t shift = a.size() - 1 - k;
    if (c != 0) {
      for (size_t j = 0; j <= k; ++j) {
        uint64_t& slot = a[shift + j];
        slot = (slot + (p - c % p) * (f[j] % p)) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
  Poly result{1};
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, with b made monic first
    uint64_t lead = b.back();
    if (lead != 1) {
      // scale b by lead^{-1} (Fermat inverse mod p)
      uint64_t inv = 1, base = lead, e = p - 2;
      while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b) c = c * inv % p;
    }
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's irreducibility test for monic f of degree k over GF(p).
bool is_irreducible(const Poly& f, uint64_t p, unsigned k) {
  if (k == 1) return true;
  const Poly x{0, 1};
  // frob[j] = x^(p^j) mod f, computed by iterated p-th powering
  Poly h = x;
  std::vector<Poly> frob(k + 1);
  frob[0] = x;
  for (unsigned j = 1; j <= k; ++j) {
    h = poly_powmod(h, p, f, p);
    frob[j] = h;
  }
  if (frob[k] != poly_mod(x, f, p)) return false;
  for (uint64_t r : prime_divisors(k)) {
    Poly g = frob[k / r];
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    Poly d = poly_gcd(g, f, p);
    if (d.size() != 1) return false;
  }
  return true;
}

constexpr uint64_t kMaxP = (uint64_t{1} << 31) - 1;
constexpr uint64_t kMaxSize = uint64_t{1} << 48;

}  // namespace

Field::Field(uint64_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p) || p > kMaxP) {
    throw std::invalid_argument("field characteristic must be prime (got " +
                                std::to_string(p) + ")");
  }
  if (k < 1 || k > 8) {
    throw std::invalid_argument("extension degree must be in [1, 8] (got " +
                                std::to_string(k) + ")");
  }
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q_ > kMaxSize / p) throw std::invalid_argument("field size exceeds 2^48");
    q_ *= p;
  }

  if (k_ == 1) {
    modulus_ = {0, 1};  // x
  } else {
    // First irreducible monic polynomial x^k + sum c_i x^i, candidates
    // ordered by the base-p encoding of (c_0, ..., c_{k-1}).
    for (uint64_t cand = 0;; ++cand) {
      Poly f(k_ + 1, 0);
      uint64_t t = cand;
      for (unsigned i = 0; i < k_; ++i) {
        f[i] = t % p_;
        t /= p_;
      }
      f[k_] = 1;
      if (is_irreducible(f, p_, k_)) {
        modulus_ = std::move(f);
        break;
      }
    }
  }

  unit_order_factors_ = factorize(q_ - 1);

  if (q_ <= kTableLimit) {
    tabled_ = true;
    add_tab_.resize(q_ * q_);
    mul_tab_.resize(q_ * q_);
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    for (uint64_t a = 0; a < q_; ++a) {
      neg_tab_[a] = static_cast<uint16_t>(neg_generic(a));
      for (uint64_t b = 0; b < q_; ++b) {
        add_tab_[a * q_ + b] = static_cast<uint16_t>(add_generic(a, b));
        mul_tab_[a * q_ + b] = static_cast<uint16_t>(mul_generic(a, b));
      }
    }
    for (uint64_t a = 1; a < q_; ++a) {
      uint64_t r = 1, base = a, e = q_ - 2;
      while (e > 0) {
        if (e & 1) r = mul_tab_[r * q_ + base];
        base = mul_tab_[base * q_ + base];
        e >>= 1;
      }
      inv_tab_[a] = static_cast<uint16_t>(r);
    }
  }
}

void Field::check_index(uint64_t a) const {
  if (a >= q_) {
    throw std::invalid_argument("field element index " + std::to_string(a) +
                                " out of range for " + spec_string());
  }
}

void Field::check_elem(const FieldElem& a) const {
  if (!contains(a)) {
    throw std::invalid_argument("element of GF(" + std::to_string(a.p) + "^" +
                                std::to_string(a.k) + ") used in GF(" +
                                spec_string() + ") operation");
  }
  check_index(a.index);
}

uint64_t Field::add_generic(uint64_t a, uint64_t b) const {
  uint64_t res = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    res += ((a % p_) + (b % p_)) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return res;
}

uint64_t Field::neg_generic(uint64_t a) const {
  uint64_t res = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    res += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return res;
}

uint64_t Field::mul_generic(uint64_t a, uint64_t b) const {
  if (k_ == 1) return a * b % p_;
  uint64_t da[8], db[8], acc[15] = {0};
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      acc[i + j] = (acc[i + j] + da[i] * db[j]) % p_;
    }
  }
  // reduce degrees >= k against the monic modulus
  for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
    const uint64_t c = acc[i];
    if (c == 0) continue;
    acc[i] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      acc[i - k_ + j] = (acc[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
  }
  uint64_t res = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    res += acc[i] * mult;
    mult *= p_;
  }
  return res;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
  check_index(a);
  check_index(b);
  if (tabled_) return add_tab_[a * q_ + b];
  return add_generic(a, b);
}

uint64_t Field::neg(uint64_t a) const {
  check_index(a);
  if (tabled_) return neg_tab_[a];
  return neg_generic(a);
}

uint64_t Field::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Field::mul(uint64_t a, uint64_t b) const {
  check_index(a);
  check_index(b);
  if (tabled_) return mul_tab_[a * q_ + b];
  return mul_generic(a, b);
}

uint64_t Field::inv(uint64_t a) const {
  check_index(a);
  if (a == 0) throw std::domain_error("inverse of zero in " + spec_string());
  if (tabled_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

uint64_t Field::pow(uint64_t a, uint64_t e) const {
  check_index(a);
  uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

uint64_t Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<uint64_t>(r);
}

std::vector<uint64_t> Field::coeffs(uint64_t a) const {
  check_index(a);
  std::vector<uint64_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

uint64_t Field::from_coeffs(const std::vector<uint64_t>& c) const {
  if (c.size() != k_) {
    throw std::invalid_argument("coefficient vector length must equal the extension degree");
  }
  uint64_t res = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    res += c[i] * mult;
    mult *= p_;
  }
  return res;
}

FieldElem Field::elem(uint64_t index) const {
  check_index(index);
  return FieldElem{index, p_, k_};
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  check_elem(a);
  check_elem(b);
  return FieldElem{add(a.index, b.index), p_, k_};
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  check_elem(a);
  check_elem(b);
  return FieldElem{sub(a.index, b.index), p_, k_};
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  check_elem(a);
  check_elem(b);
  return FieldElem{mul(a.index, b.index), p_, k_};
}

FieldElem Field::inv(const FieldElem& a) const {
  check_elem(a);
  return FieldElem{inv(a.index), p_, k_};
}

FieldElem Field::pow(const FieldElem& a, uint64_t e) const {
  check_elem(a);
  return FieldElem{pow(a.index, e), p_, k_};
}

uint64_t Field::multiplicative_order(uint64_t a) const {
  check_index(a);
  if (a == 0) throw std::domain_error("order of zero is undefined");
  uint64_t m = q_ - 1;
  for (const auto& [r, e] : unit_order_factors_) {
    while (m % r == 0 && pow(a, m / r) == 1) m /= r;
  }
  return m;
}

std::optional<FieldElem> Field::primitive_root_of_unity(uint64_t d) const {
  if (d < 1) throw std::invalid_argument("root-of-unity order must be >= 1");
  if (d % p_ == 0 || (q_ - 1) % d != 0) return std::nullopt;
  const auto d_primes = prime_divisors(d);
  auto has_order_d = [&](uint64_t a) {
    if (pow(a, d) != 1) return false;
    for (uint64_t r : d_primes) {
      if (pow(a, d / r) == 1) return false;
    }
    return true;
  };
  if (q_ <= (uint64_t{1} << 16)) {
    for (uint64_t a = 1; a < q_; ++a) {
      if (has_order_d(a)) return elem(a);
    }
    return std::nullopt;  // unreachable: the unit group is cyclic of order q-1
  }
  // Large field: take the first multiplicative generator in enumeration
  // order and power it down to order d.
  for (uint64_t a = 2; a < q_; ++a) {
    bool gen = true;
    for (const auto& [r, e] : unit_order_factors_) {
      if (pow(a, (q_ - 1) / r) == 1) {
        gen = false;
        break;
      }
    }
    if (gen) return elem(pow(a, (q_ - 1) / d));
  }
  return std::nullopt;
}

std::string Field::to_string(uint64_t a) const {
  check_index(a);
  if (k_ == 1) return std::to_string(a);
  const auto c = coeffs(a);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (p_ <= 10) {
      out += static_cast<char>('0' + c[i]);
    } else {
      if (!out.empty()) out += '.';
      out += std::to_string(c[i]);
    }
  }
  return out;
}

uint64_t Field::parse_element(std::string_view s) const {
  if (s.empty()) throw std::invalid_argument("empty field element");
  auto parse_digits = [&](std::string_view t) -> uint64_t {
    uint64_t v = 0;
    if (t.empty()) throw std::invalid_argument("empty field element digit");
    for (char ch : t) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("bad field element token '" + std::string(s) + "'");
      }
      v = v * 10 + static_cast<uint64_t>(ch - '0');
      if (v >= (uint64_t{1} << 52)) throw std::invalid_argument("field element value too large");
    }
    return v;
  };
  if (k_ == 1) {
    const uint64_t v = parse_digits(s);
    if (v >= q_) throw std::invalid_argument("field element " + std::string(s) + " out of range");
    return v;
  }
  std::vector<uint64_t> digits;  // high power first as written
  if (p_ <= 10) {
    if (s.size() != k_) {
      throw std::invalid_argument("expected " + std::to_string(k_) +
                                  " base-" + std::to_string(p_) + " digits, got '" +
                                  std::string(s) + "'");
    }
    for (char ch : s) digits.push_back(parse_digits(std::string_view(&ch, 1)));
  } else {
    size_t start = 0;
    while (start <= s.size()) {
      size_t dot = s.find('.', start);
      if (dot == std::string_view::npos) dot = s.size();
      digits.push_back(parse_digits(s.substr(start, dot - start)));
      start = dot + 1;
      if (dot == s.size()) break;
    }
    if (digits.size() != k_) {
      throw std::invalid_argument("expected " + std::to_string(k_) +
                                  " '.'-separated digits in '" + std::string(s) + "'");
    }
  }
  std::vector<uint64_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    if (digits[i] >= p_) {
      throw std::invalid_argument("digit out of range in field element '" + std::string(s) + "'");
    }
    c[k_ - 1 - i] = digits[i];
  }
  return from_coeffs(c);
}

std::string Field::spec_string() const {
  if (k_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(k_);
}

Field parse_field_spec(std::string_view spec) {
  auto fail = [&]() -> void {
    throw std::invalid_argument("bad field spec '" + std::string(spec) +
                                "': expected p or p^k");
  };
  if (spec.empty()) fail();
  auto parse_num = [&](std::string_view t) -> uint64_t {
    if (t.empty() || t.size() > 12) fail();
    uint64_t v = 0;
    for (char ch : t) {
      if (ch < '0' || ch > '9') fail();
      v = v * 10 + static_cast<uint64_t>(ch - '0');
    }
    return v;
  };
  const size_t caret = spec.find('^');
  uint64_t p = 0, k = 1;
  if (caret == std::string_view::npos) {
    p = parse_num(spec);
  } else {
    p = parse_num(spec.substr(0, caret));
    k = parse_num(spec.substr(caret + 1));
  }
  if (k < 1 || k > 8) {
    throw std::invalid_argument("bad field spec '" + std::string(spec) +
                                "': extension degree must be in [1, 8]");
  }
  return Field(p, static_cast<unsigned>(k));
}

}  // namespace vgm
