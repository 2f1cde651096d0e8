#pragma once

// Dense univariate polynomials over a finite field.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "fibpow/error.hpp"
#include "fibpow/ff.hpp"

namespace fibpow {

/// Degree of the zero polynomial.
inline constexpr long kZeroDegree = std::numeric_limits<long>::min();

/// Dense polynomial; coefficient i is the coefficient of T^i. Always trimmed, so the
/// zero polynomial has no coefficients and every other one has a nonzero top entry.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}

  Polynomial(FieldPtr field, std::vector<Element> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  /// Integer coefficients, constant term first, reduced into the prime subfield.
  static Polynomial from_ints(const FieldPtr& field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Element> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.push_back(field->from_int(v));
    return {field, std::move(c)};
  }

  static Polynomial constant(const FieldPtr& field, Element c) { return {field, {c}}; }
  static Polynomial constant(const FieldElement& c) { return constant(c.field(), c.raw()); }
  static Polynomial one(const FieldPtr& field) { return constant(field, field->one()); }

  /// c * T^k
  static Polynomial monomial(const FieldPtr& field, Element c, std::size_t k) {
    std::vector<Element> v(k + 1, field->zero());
    v[k] = c;
    return {field, std::move(v)};
  }
  static Polynomial x(const FieldPtr& field) { return monomial(field, field->one(), 1); }

  const FieldPtr& field() const noexcept { return field_; }
  const Field& f() const noexcept { return *field_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

  std::span<const Element> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Element raw(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
  Element lc_raw() const noexcept { return coeffs_.empty() ? Element{} : coeffs_.back(); }

  FieldElement coeff(std::size_t i) const { return {field_, raw(i)}; }
  FieldElement lc() const { return {field_, lc_raw()}; }

  Polynomial monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(field_->inv(lc_raw()));
  }

  Polynomial scaled(Element c) const {
    if (c.v == 0) return Polynomial(field_);
    std::vector<Element> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
    return {field_, std::move(out)};
  }

  /// this * T^k
  Polynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Element> out(coeffs_.size() + k, field_->zero());
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return {field_, std::move(out)};
  }

  FieldElement evaluate(const FieldElement& at) const {
    check_field(*at.field());
    Element acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, at.raw()), coeffs_[i]);
    return {field_, acc};
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_field(o.f());
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_field(o.f());
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    std::vector<Element> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->neg(coeffs_[i]);
    return {field_, std::move(out)};
  }

  /// Schoolbook product.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_field(b.f());
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const Field& F = a.f();
    std::vector<Element> out(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Element ai = a.coeffs_[i];
      if (ai.v == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] = F.add(out[i + j], F.mul(ai, b.coeffs_[j]));
      }
    }
    return {a.field_, std::move(out)};
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
  }

  void check_field(const Field& other) const {
    if (!field_->same_as(other)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  }

 private:
  void trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
  }

  FieldPtr field_;
  std::vector<Element> coeffs_;
};

/// f^k by repeated squaring.
inline Polynomial pow(const Polynomial& f, std::uint64_t k) {
  Polynomial result = Polynomial::one(f.field());
  Polynomial base = f;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = q*g + r with deg r < deg g.
inline DivRem divrem(const Polynomial& f, const Polynomial& g) {
  f.check_field(g.f());
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  const Field& F = f.f();
  if (f.size() < g.size()) return {Polynomial(f.field()), f};
  std::vector<Element> r(f.coeffs().begin(), f.coeffs().end());
  const std::size_t dg = g.size() - 1;
  std::vector<Element> q(f.size() - dg, F.zero());
  const auto gc = g.coeffs();
  const bool monic = g.is_monic();
  const Element inv_lc = monic ? F.one() : F.inv(g.lc_raw());
  for (std::size_t top = r.size(); top-- > dg;) {
    Element c = r[top];
    if (c.v == 0) continue;
    if (!monic) c = F.mul(c, inv_lc);
    const std::size_t shift = top - dg;
    q[shift] = c;
    const Element neg_c = F.neg(c);
    for (std::size_t i = 0; i < dg; ++i) {
      if (gc[i].v != 0) r[shift + i] = F.add(r[shift + i], F.mul(neg_c, gc[i]));
    }
    r[top] = F.zero();
  }
  r.resize(dg);
  return {Polynomial(f.field(), std::move(q)), Polynomial(f.field(), std::move(r))};
}

inline Polynomial rem(const Polynomial& f, const Polynomial& g) { return divrem(f, g).remainder; }

/// Exact quotient; throws PreconditionViolated when g does not divide f.
inline Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  DivRem qr = divrem(f, g);
  if (!qr.remainder.is_zero()) throw Error(ErrorKind::PreconditionViolated, "inexact polynomial division");
  return std::move(qr.quotient);
}

inline bool divides(const Polynomial& g, const Polynomial& f) { return rem(f, g).is_zero(); }

/// Monic gcd by Euclid.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  a.check_field(b.f());
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0)");
  while (!b.is_zero()) {
    Polynomial r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return rem(a * b, m); }

/// f^k mod m by binary exponentiation.
inline Polynomial powmod(const Polynomial& f, std::uint64_t k, const Polynomial& m) {
  f.check_field(m.f());
  if (m.is_zero()) throw Error(ErrorKind::DivisionByZero, "powmod by the zero polynomial");
  Polynomial result = rem(Polynomial::one(f.field()), m);
  Polynomial base = rem(f, m);
  while (k > 0) {
    if (k & 1) result = mulmod(result, base, m);
    k >>= 1;
    if (k > 0) base = mulmod(base, base, m);
  }
  return result;
}

inline Polynomial derivative(const Polynomial& f) {
  if (f.size() <= 1) return Polynomial(f.field());
  const Field& F = f.f();
  std::vector<Element> out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.characteristic())), f.raw(i));
  }
  return {f.field(), std::move(out)};
}

/// Res(f, g) = lc(f)^deg g * prod_{f(a) = 0} g(a), via the Euclidean remainder sequence.
inline FieldElement resultant(Polynomial f, Polynomial g) {
  f.check_field(g.f());
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroArgument, "resultant with the zero polynomial");
  const Field& F = f.f();
  Element acc = F.one();
  // Invariant: Res(original) = acc * Res(f, g).
  while (true) {
    const long m = f.degree();
    const long n = g.degree();
    if (n == 0) return {f.field(), F.mul(acc, F.pow(g.lc_raw(), static_cast<std::uint64_t>(m)))};
    if (m == 0) return {f.field(), F.mul(acc, F.pow(f.lc_raw(), static_cast<std::uint64_t>(n)))};
    // Res(f, g) = (-1)^(mn) Res(g, f) and Res(g, f) = lc(g)^(m - k) Res(g, f mod g).
    Polynomial r = rem(f, g);
    if (r.is_zero()) return {f.field(), F.zero()};
    const long k = r.degree();
    if ((m * n) % 2 != 0) acc = F.neg(acc);
    acc = F.mul(acc, F.pow(g.lc_raw(), static_cast<std::uint64_t>(m - k)));
    f = std::move(g);
    g = std::move(r);
  }
}

/// Disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), with f' taken at formal degree d - 1
/// (Sylvester convention); zero when f' = 0.
inline FieldElement discriminant(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorKind::ConstantInput, "discriminant of a constant");
  const Field& F = f.f();
  const Polynomial df = derivative(f);
  if (df.is_zero()) return {f.field(), F.zero()};
  const auto d = static_cast<std::uint64_t>(f.degree());
  const auto k = static_cast<std::uint64_t>(df.degree());
  Element res = resultant(f, df).raw();
  res = F.mul(res, F.pow(f.lc_raw(), d - 1 - k));
  if ((d * (d - 1) / 2) % 2 != 0) res = F.neg(res);
  return {f.field(), F.div(res, f.lc_raw())};
}

/// g with g^p = f; requires every exponent with a nonzero coefficient to be a multiple of p.
inline Polynomial pth_root(const Polynomial& f) {
  const Field& F = f.f();
  const std::uint64_t p = F.characteristic();
  if (f.is_zero()) return f;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % p != 0 && f.raw(i).v != 0) throw Error(ErrorKind::NotAPthPower, "polynomial is not a p-th power");
  }
  std::vector<Element> out((f.size() - 1) / p + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.pth_root(f.raw(i * p));
  return {f.field(), std::move(out)};
}

}  // namespace fibpow
