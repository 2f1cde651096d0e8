#pragma once

// Finite fields F_p and F_{p^e}.
//
// An element of F_{p^e} = F_p[x]/(m(x)) is a residue vector (c_0, ..., c_{e-1}) with
// c_i in [0, p). It is stored packed as the base-p number sum c_i p^i, so an element
// of a prime field is just its value. Small extension fields (q <= 1024) use full
// addition/multiplication tables; larger ones fall back to digit arithmetic.

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fibpow/error.hpp"
#include "fibpow/numtheory.hpp"

namespace fibpow {

/// Packed residue vector; meaningful only together with its Field.
struct Element {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Every q = p^e must stay below this bound so packed elements fit a 32-bit word.
inline constexpr std::uint64_t kMaxFieldOrder = 0xFFFFFFFFull;

namespace detail {

// Minimal dense F_p[x] helpers used only to find the extension modulus.
using PrimePoly = std::vector<std::uint64_t>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly prime_poly_rem(PrimePoly a, const PrimePoly& b, std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv_lc = nt::pow_mod(b.back(), p - 2, p);
  trim(a);
  while (a.size() > db) {
    const std::uint64_t c = nt::mul_mod(a.back(), inv_lc, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - nt::mul_mod(c, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

inline PrimePoly prime_poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m,
                                   std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + nt::mul_mod(a[i], b[j], p)) % p;
    }
  }
  return prime_poly_rem(std::move(prod), m, p);
}

inline PrimePoly prime_poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = prime_poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: m (monic, degree e) is irreducible iff x^(p^e) = x mod m and
// gcd(x^(p^(e/r)) - x, m) = 1 for every prime r | e.
inline bool prime_poly_is_irreducible(const PrimePoly& m, std::uint64_t p) {
  const std::size_t e = m.size() - 1;
  if (e == 1) return true;
  if (m[0] == 0) return false;
  std::vector<PrimePoly> frob(e + 1);  // frob[i] = x^(p^i) mod m
  frob[0] = prime_poly_rem(PrimePoly{0, 1}, m, p);
  for (std::size_t i = 1; i <= e; ++i) {
    PrimePoly acc{1};
    PrimePoly base = frob[i - 1];
    for (std::uint64_t k = p; k > 0; k >>= 1) {
      if (k & 1) acc = prime_poly_mulmod(acc, base, m, p);
      base = prime_poly_mulmod(base, base, m, p);
    }
    frob[i] = std::move(acc);
  }
  if (frob[e] != frob[0]) return false;
  for (std::uint64_t r : nt::prime_divisors(e)) {
    PrimePoly h = frob[e / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    PrimePoly g = prime_poly_gcd(h, m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class Field {
 public:
  /// Builds F_{p^e}; for e > 1 the modulus is the lexicographically smallest monic
  /// irreducible of degree e, comparing (c_0, c_1, ..., c_{e-1}) from the constant term.
  static FieldPtr make(std::uint64_t p, unsigned e = 1) {
    if (!nt::is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (e == 0) throw Error(ErrorKind::Overflow, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      if (q > kMaxFieldOrder / p) {
        throw Error(ErrorKind::Overflow,
                    std::to_string(p) + "^" + std::to_string(e) + " does not fit the word size");
      }
      q *= p;
    }
    std::vector<std::uint32_t> modulus;
    if (e > 1) modulus = smallest_irreducible(p, e);
    return FieldPtr(new Field(p, e, q, std::move(modulus)));
  }

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint64_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return e_ == 1; }

  /// Coefficients c_0..c_e of the monic modulus (empty for a prime field).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// Fields are equal when (p, e) agree; the modulus is a deterministic function of both.
  bool same_as(const Field& other) const noexcept { return p_ == other.p_ && e_ == other.e_; }

  Element zero() const noexcept { return {0}; }
  Element one() const noexcept { return {1}; }

  /// The class of x in F_p[x]/(m) for e > 1; 1 in a prime field.
  Element generator() const noexcept { return e_ > 1 ? Element{static_cast<std::uint32_t>(p_)} : one(); }

  /// Element with packed index i in [0, q); used to enumerate the field.
  Element element_at(std::uint64_t i) const noexcept { return {static_cast<std::uint32_t>(i)}; }

  Element from_int(std::int64_t value) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r)};
  }

  /// Builds (c_0, ..., c_{k-1}) with k <= e; entries are reduced mod p.
  Element from_coeffs(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > e_) throw Error(ErrorKind::PreconditionViolated, "too many coordinates for field");
    std::uint64_t packed = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      packed = packed * p_ + from_int(coeffs[i]).v;
    }
    return {static_cast<std::uint32_t>(packed)};
  }

  /// (c_0, ..., c_{e-1}) of a packed element.
  std::vector<std::uint32_t> coeffs(Element a) const {
    std::vector<std::uint32_t> out(e_);
    std::uint64_t v = a.v;
    for (unsigned i = 0; i < e_; ++i) {
      out[i] = static_cast<std::uint32_t>(v % p_);
      v /= p_;
    }
    return out;
  }

  bool in_prime_subfield(Element a) const noexcept { return a.v < p_; }

  Element add(Element a, Element b) const noexcept {
    if (kind_ == Kind::Prime) {
      std::uint64_t s = std::uint64_t{a.v} + b.v;
      if (s >= p_) s -= p_;
      return {static_cast<std::uint32_t>(s)};
    }
    if (kind_ == Kind::Table) return {add_tab_[a.v * q_ + b.v]};
    Digits x, y;
    unpack(a, x);
    unpack(b, y);
    for (unsigned i = 0; i < e_; ++i) {
      std::uint64_t s = std::uint64_t{x[i]} + y[i];
      x[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return pack(x);
  }

  Element neg(Element a) const noexcept {
    if (kind_ == Kind::Prime) return {a.v == 0 ? 0u : static_cast<std::uint32_t>(p_ - a.v)};
    if (kind_ == Kind::Table) return {neg_tab_[a.v]};
    Digits x;
    unpack(a, x);
    for (unsigned i = 0; i < e_; ++i) x[i] = x[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - x[i]);
    return pack(x);
  }

  Element sub(Element a, Element b) const noexcept {
    if (kind_ == Kind::Prime) {
      return {a.v >= b.v ? a.v - b.v : static_cast<std::uint32_t>(a.v + p_ - b.v)};
    }
    return add(a, neg(b));
  }

  Element mul(Element a, Element b) const noexcept {
    if (kind_ == Kind::Prime) return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
    if (kind_ == Kind::Table) return {mul_tab_[a.v * q_ + b.v]};
    return mul_digits(a, b);
  }

  Element pow(Element a, std::uint64_t k) const noexcept {
    Element result = one();
    while (k > 0) {
      if (k & 1) result = mul(result, a);
      a = mul(a, a);
      k >>= 1;
    }
    return result;
  }

  Element inv(Element a) const {
    if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (kind_ == Kind::Prime) {
      // extended Euclid on (a, p)
      std::int64_t t = 0, new_t = 1;
      std::int64_t r = static_cast<std::int64_t>(p_), new_r = a.v;
      while (new_r != 0) {
        const std::int64_t quo = r / new_r;
        t = std::exchange(new_t, t - quo * new_t);
        r = std::exchange(new_r, r - quo * new_r);
      }
      return from_int(t);
    }
    if (kind_ == Kind::Table) return {inv_tab_[a.v]};
    return pow(a, q_ - 2);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Inverse of the Frobenius map: the unique b with b^p = a, namely a^(p^(e-1)).
  Element pth_root(Element a) const noexcept {
    for (unsigned i = 1; i < e_; ++i) a = pow(a, p_);
    return a;
  }

  /// True iff u = v^j for some v in F_q^x; decided by u^((q-1)/gcd(j, q-1)) = 1.
  bool is_jth_power(Element u, std::uint64_t j) const {
    if (u.v == 0) throw Error(ErrorKind::ZeroUnit, "power test on zero");
    if (j == 0) return u == one();
    const std::uint64_t g = std::gcd(j, q_ - 1);
    return pow(u, (q_ - 1) / g) == one();
  }

 private:
  enum class Kind { Prime, Table, Digit };
  static constexpr std::uint64_t kTableLimit = 1024;
  using Digits = std::array<std::uint32_t, 32>;

  Field(std::uint64_t p, unsigned e, std::uint64_t q, std::vector<std::uint32_t> modulus)
      : p_(p), e_(e), q_(q), modulus_(std::move(modulus)) {
    if (e_ == 1) {
      kind_ = Kind::Prime;
      return;
    }
    kind_ = Kind::Digit;
    if (q_ <= kTableLimit) build_tables();
  }

  static std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, unsigned e) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    detail::PrimePoly m(e + 1, 0);
    m[e] = 1;
    // c_0 is the most significant digit of t, so t ascending is lexicographic order;
    // start at c_0 = 1 since x divides every candidate with c_0 = 0.
    for (std::uint64_t t = count / p; t < count; ++t) {
      std::uint64_t rest = t;
      for (unsigned i = e; i-- > 0;) {
        m[i] = rest % p;
        rest /= p;
      }
      if (detail::prime_poly_is_irreducible(m, p)) {
        return std::vector<std::uint32_t>(m.begin(), m.end());
      }
    }
    throw Error(ErrorKind::PreconditionViolated, "no irreducible polynomial found");
  }

  void unpack(Element a, Digits& d) const noexcept {
    std::uint64_t v = a.v;
    for (unsigned i = 0; i < e_; ++i) {
      d[i] = static_cast<std::uint32_t>(v % p_);
      v /= p_;
    }
  }

  Element pack(const Digits& d) const noexcept {
    std::uint64_t v = 0;
    for (unsigned i = e_; i-- > 0;) v = v * p_ + d[i];
    return {static_cast<std::uint32_t>(v)};
  }

  Element mul_digits(Element a, Element b) const noexcept {
    Digits x, y;
    unpack(a, x);
    unpack(b, y);
    std::array<std::uint64_t, 64> prod{};
    for (unsigned i = 0; i < e_; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < e_; ++j) {
        prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
      }
    }
    for (unsigned k = 2 * e_ - 2; k >= e_; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      // x^k = -sum m_i x^(k-e+i)
      for (unsigned i = 0; i < e_; ++i) {
        prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
      prod[k] = 0;
    }
    Digits out;
    for (unsigned i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }

  void build_tables() {
    const std::size_t q = q_;
    add_tab_.resize(q * q);
    mul_tab_.resize(q * q);
    neg_tab_.resize(q);
    inv_tab_.resize(q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        const Element x{static_cast<std::uint32_t>(a)}, y{static_cast<std::uint32_t>(b)};
        add_tab_[a * q + b] = add(x, y).v;
        mul_tab_[a * q + b] = mul_digits(x, y).v;
      }
    }
    for (std::size_t a = 0; a < q; ++a) {
      neg_tab_[a] = neg(Element{static_cast<std::uint32_t>(a)}).v;
      for (std::size_t b = 1; b < q && a != 0; ++b) {
        if (mul_tab_[a * q + b] == 1) {
          inv_tab_[a] = static_cast<std::uint32_t>(b);
          break;
        }
      }
    }
    kind_ = Kind::Table;
  }

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Kind kind_ = Kind::Prime;
  std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

inline FieldPtr make_field(std::uint64_t p, unsigned e = 1) { return Field::make(p, e); }

/// An element bound to its field; arithmetic across different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Element value) : field_(std::move(field)), value_(value) {}

  static FieldElement from_int(const FieldPtr& field, std::int64_t value) {
    return {field, field->from_int(value)};
  }
  static FieldElement from_coeffs(const FieldPtr& field, std::span<const std::int64_t> coeffs) {
    return {field, field->from_coeffs(coeffs)};
  }

  const FieldPtr& field() const noexcept { return field_; }
  Element raw() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.v == 0; }
  bool is_one() const noexcept { return value_.v == 1; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }

  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->div(a.value_, b.value_)};
  }
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
  }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (!a.field_->same_as(*b.field_)) throw Error(ErrorKind::FieldMismatch, "operands from different fields");
  }

  FieldPtr field_;
  Element value_;
};

/// True iff u is a j-th power in F_q^x.
inline bool unit_is_jth_power(const FieldElement& u, std::uint64_t j) {
  return u.field()->is_jth_power(u.raw(), j);
}

}  // namespace fibpow
