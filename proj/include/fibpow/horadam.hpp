#pragma once

// Horadam sequences over F_q:
//   W_0 = 0, W_1 = 1,  W_n = f W_{n-1} + g W_{n-2}
//   w_0 = 2, w_1 = f,  w_n = f w_{n-1} + g w_{n-2}
// with f, g nonzero monomials of degree 0 or 1, and the named specializations.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "fibpow/error.hpp"
#include "fibpow/ff.hpp"
#include "fibpow/poly.hpp"
#include "fibpow/poly_io.hpp"

namespace fibpow {

struct Monomial {
  FieldElement coeff;
  unsigned degree;

  Polynomial poly() const { return Polynomial::monomial(coeff.field(), coeff.raw(), degree); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class HoradamParams {
 public:
  HoradamParams(Monomial f, Monomial g) : f_(std::move(f)), g_(std::move(g)) {
    if (!f_.coeff.field()->same_as(*g_.coeff.field())) throw Error(ErrorKind::FieldMismatch, "f and g over different fields");
    check(f_, "f");
    check(g_, "g");
  }

  /// Integer coefficients are reduced to residues, so g = -1 becomes p - 1.
  static HoradamParams make(const FieldPtr& field, std::int64_t af, unsigned df, std::int64_t ag, unsigned dg) {
    return {{FieldElement::from_int(field, af), df}, {FieldElement::from_int(field, ag), dg}};
  }

  const FieldPtr& field() const { return f_.coeff.field(); }
  const Monomial& f() const { return f_; }
  const Monomial& g() const { return g_; }
  const FieldElement& lc_f() const { return f_.coeff; }
  Polynomial f_poly() const { return f_.poly(); }
  Polynomial g_poly() const { return g_.poly(); }

  friend bool operator==(const HoradamParams&, const HoradamParams&) = default;

 private:
  static void check(const Monomial& m, const char* name) {
    if (m.coeff.is_zero()) throw Error(ErrorKind::InvalidParams, std::string(name) + " has a zero coefficient");
    if (m.degree > 1) throw Error(ErrorKind::InvalidParams, std::string(name) + " must have degree 0 or 1");
  }

  Monomial f_;
  Monomial g_;
};

inline std::string render(const Monomial& m) { return render(m.poly()); }

enum class SequenceKind { W, w };

/// Steps through a W- or w-sequence one index at a time; each step costs O(degree).
class HoradamSequence {
 public:
  HoradamSequence(HoradamParams params, SequenceKind kind)
      : params_(std::move(params)), kind_(kind), prev_(params_.field()), cur_(params_.field()) {
    reset();
  }

  const HoradamParams& params() const noexcept { return params_; }
  SequenceKind kind() const noexcept { return kind_; }
  std::uint64_t index() const noexcept { return n_; }
  const Polynomial& current() const noexcept { return cur_; }

  void advance() {
    Polynomial next = n_ == 0 ? second() : step(cur_, params_.f()) + step(prev_, params_.g());
    prev_ = std::move(cur_);
    cur_ = std::move(next);
    ++n_;
  }

  /// Member n; restarts from index 0 when n is behind the current index.
  const Polynomial& at(std::uint64_t n) {
    if (n < n_) reset();
    while (n_ < n) advance();
    return cur_;
  }

 private:
  static Polynomial step(const Polynomial& a, const Monomial& m) { return a.scaled(m.coeff.raw()).shifted(m.degree); }

  Polynomial second() const {
    return kind_ == SequenceKind::W ? Polynomial::one(params_.field()) : params_.f_poly();
  }

  void reset() {
    const FieldPtr& F = params_.field();
    n_ = 0;
    prev_ = Polynomial(F);
    cur_ = kind_ == SequenceKind::W ? Polynomial(F) : Polynomial::constant(F, F->from_int(2));
  }

  HoradamParams params_;
  SequenceKind kind_;
  Polynomial prev_;
  Polynomial cur_;
  std::uint64_t n_ = 0;
};

inline Polynomial horadam_W(const HoradamParams& params, std::uint64_t n) {
  return HoradamSequence(params, SequenceKind::W).at(n);
}

inline Polynomial horadam_w(const HoradamParams& params, std::uint64_t n) {
  return HoradamSequence(params, SequenceKind::w).at(n);
}

/// f^2 + 4g
inline Polynomial delta_sq(const HoradamParams& params) {
  const Polynomial f = params.f_poly();
  return f * f + params.g_poly().scaled(params.field()->from_int(4));
}

enum class Family { Fibonacci, Lucas, ChebyshevU, ChebyshevT, Jacobsthal };

inline std::string_view family_name(Family fam) {
  switch (fam) {
    case Family::Fibonacci: return "fibonacci";
    case Family::Lucas: return "lucas";
    case Family::ChebyshevU: return "chebyshev_u";
    case Family::ChebyshevT: return "chebyshev_t";
    case Family::Jacobsthal: return "jacobsthal";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  std::string s(name);
  for (char& c : s) c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Family fam : {Family::Fibonacci, Family::Lucas, Family::ChebyshevU, Family::ChebyshevT, Family::Jacobsthal}) {
    if (s == family_name(fam)) return fam;
  }
  throw Error(ErrorKind::Usage, "unknown family '" + std::string(name) + "'");
}

inline HoradamParams family_params(Family fam, const FieldPtr& field) {
  switch (fam) {
    case Family::Fibonacci:
    case Family::Lucas: return HoradamParams::make(field, 1, 1, 1, 0);
    case Family::ChebyshevU:
    case Family::ChebyshevT:
      if (field->characteristic() == 2) {
        throw Error(ErrorKind::InvalidParams, "Chebyshev parameters f = 2T vanish in characteristic 2");
      }
      return HoradamParams::make(field, 2, 1, -1, 0);
    case Family::Jacobsthal:
      if (field->characteristic() == 2) {
        throw Error(ErrorKind::InvalidParams, "Jacobsthal parameter g = 2T vanishes in characteristic 2");
      }
      return HoradamParams::make(field, 1, 0, 2, 1);
  }
  throw Error(ErrorKind::InvalidParams, "unknown family");
}

inline SequenceKind family_kind(Family fam) {
  return fam == Family::Lucas || fam == Family::ChebyshevT ? SequenceKind::w : SequenceKind::W;
}

/// Members of a named family in increasing n: U_n = W_{n+1}, T_n = w_n / 2, the
/// rest are W_n or w_n directly.
class FamilySequence {
 public:
  FamilySequence(Family fam, const FieldPtr& field) : family_(fam), seq_(checked_params(fam, field), family_kind(fam)) {
    if (fam == Family::ChebyshevT) half_ = field->inv(field->from_int(2));
  }

  Polynomial at(std::uint64_t n) {
    const std::uint64_t idx = family_ == Family::ChebyshevU ? n + 1 : n;
    const Polynomial& raw = seq_.at(idx);
    return family_ == Family::ChebyshevT ? raw.scaled(half_) : raw;
  }

 private:
  static HoradamParams checked_params(Family fam, const FieldPtr& field) {
    if (fam == Family::ChebyshevT && field->characteristic() == 2) {
      throw Error(ErrorKind::CharTwoChebyshevT, "Chebyshev T_n = w_n / 2 needs odd characteristic");
    }
    return family_params(fam, field);
  }

  Family family_;
  HoradamSequence seq_;
  Element half_{};
};

inline Polynomial family_poly(Family fam, std::uint64_t n, const FieldPtr& field) {
  return FamilySequence(fam, field).at(n);
}

/// W_{p^k} or w_{p^k} in closed form, p the characteristic:
/// W: (f^2 + 4g)^((p^k - 1)/2) for odd p, f^(2^k - 1) for p = 2;  w: f^(p^k).
inline Polynomial closed_form_prime_power(const HoradamParams& params, SequenceKind kind, unsigned k) {
  const std::uint64_t p = params.field()->characteristic();
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  if (kind == SequenceKind::w) return pow(params.f_poly(), pk);
  if (p == 2) return pow(params.f_poly(), pk - 1);
  return pow(delta_sq(params), (pk - 1) / 2);
}

/// Closed form of family member at the index p^k of its underlying sequence
/// (for Chebyshev U that is U_{p^k - 1}; for Chebyshev T it is T_{p^k} = w_{p^k} / 2).
inline Polynomial closed_form_prime_power(Family fam, unsigned k, const FieldPtr& field) {
  if (fam == Family::ChebyshevT && field->characteristic() == 2) {
    throw Error(ErrorKind::CharTwoChebyshevT, "Chebyshev T_n = w_n / 2 needs odd characteristic");
  }
  Polynomial out = closed_form_prime_power(family_params(fam, field), family_kind(fam), k);
  if (fam == Family::ChebyshevT) out = out.scaled(field->inv(field->from_int(2)));
  return out;
}

/// W_n mod (f^2 + 4g) from the closed form:
///   odd n:  n (-g)^((n-1)/2)
///   even n: (-1)^((n+2)/2) n f g^((n-2)/2) / 2
inline Polynomial wn_mod_delta(const HoradamParams& params, std::uint64_t n) {
  const FieldPtr& F = params.field();
  if (F->characteristic() == 2) throw Error(ErrorKind::CharTwo, "closed form divides by 2");
  const Polynomial d = delta_sq(params);
  if (d.is_zero()) throw Error(ErrorKind::PreconditionViolated, "f^2 + 4g is zero");
  if (n == 0) return Polynomial(F);
  const Element nn = F->from_int(static_cast<std::int64_t>(n % F->characteristic()));
  Polynomial value(F);
  if (n % 2 == 1) {
    value = pow(-params.g_poly(), (n - 1) / 2).scaled(nn);
  } else {
    Element c = F->div(nn, F->from_int(2));
    if (((n + 2) / 2) % 2 == 1) c = F->neg(c);
    value = (params.f_poly() * pow(params.g_poly(), (n - 2) / 2)).scaled(c);
  }
  return rem(value, d);
}

}  // namespace fibpow
