#pragma once

// Factorization over F_q: squarefree decomposition (characteristic-p aware),
// distinct-degree factorization, equal-degree splitting, and the predicates built on
// multiplicities (squarefree, perfect j-th power, powerful).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fibpow/error.hpp"
#include "fibpow/ff.hpp"
#include "fibpow/numtheory.hpp"
#include "fibpow/poly.hpp"
#include "fibpow/poly_io.hpp"

namespace fibpow {

/// Canonical order: ascending degree, then coefficient vectors compared from the
/// constant term upward.
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

struct FactorPower {
  Polynomial base;
  std::uint64_t multiplicity;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

struct Factorization {
  FieldElement unit;
  std::vector<FactorPower> factors;  // canonical order, bases monic irreducible

  Polynomial expand() const {
    Polynomial out = Polynomial::constant(unit);
    for (const FactorPower& fp : factors) out *= pow(fp.base, fp.multiplicity);
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct SquarefreePart {
  Polynomial part;  // monic, squarefree
  std::uint64_t exponent;
};

struct SquarefreeDecomposition {
  FieldElement unit;
  std::vector<SquarefreePart> parts;  // ascending exponent, parts pairwise coprime
};

struct DegreeBlock {
  Polynomial product;  // product of all monic irreducible factors of this degree
  long degree;
};

namespace detail {

inline std::vector<SquarefreePart> squarefree_monic(const Polynomial& f) {
  std::vector<SquarefreePart> out;
  if (f.degree() <= 0) return out;
  const std::uint64_t p = f.f().characteristic();
  const Polynomial df = derivative(f);
  if (df.is_zero()) {
    for (SquarefreePart& sp : squarefree_monic(pth_root(f))) out.push_back({std::move(sp.part), sp.exponent * p});
    return out;
  }
  Polynomial c = gcd(f, df);
  Polynomial w = exact_div(f, c);
  std::uint64_t i = 1;
  // w holds the factors whose multiplicity is prime to p and at least i.
  while (!w.is_constant()) {
    Polynomial y = gcd(w, c);
    Polynomial fac = exact_div(w, y);
    if (!fac.is_constant()) out.push_back({std::move(fac), i});
    c = exact_div(c, y);
    w = std::move(y);
    ++i;
  }
  // What is left has every multiplicity divisible by p.
  if (!c.is_constant()) {
    for (SquarefreePart& sp : squarefree_monic(pth_root(c))) out.push_back({std::move(sp.part), sp.exponent * p});
  }
  std::sort(out.begin(), out.end(), [](const SquarefreePart& a, const SquarefreePart& b) { return a.exponent < b.exponent; });
  return out;
}

inline bool squarefree_fast(const Polynomial& f) {
  const Polynomial df = derivative(f);
  return !df.is_zero() && gcd(f, df).is_constant();
}

inline std::vector<DegreeBlock> ddf_unchecked(const Polynomial& f) {
  std::vector<DegreeBlock> out;
  const FieldPtr& field = f.field();
  const std::uint64_t q = field->order();
  const Polynomial t = Polynomial::x(field);
  Polynomial rest = f;
  Polynomial h = rem(t, rest);
  for (long d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, q, rest);
    Polynomial g = gcd(h - t, rest);
    if (!g.is_one()) {
      rest = exact_div(rest, g);
      h = rem(h, rest);
      out.push_back({std::move(g), d});
    }
  }
  if (rest.degree() > 0) {
    const long d = rest.degree();
    out.push_back({std::move(rest), d});
  }
  return out;
}

// A polynomial whose gcd with g is, with probability about 1/2, a proper factor
// when every irreducible factor of g has degree d.
inline Polynomial splitting_poly(const Polynomial& h, const Polynomial& g, long d) {
  const Field& F = g.f();
  const std::uint64_t q = F.order();
  if (F.characteristic() == 2) {
    // Trace to F_2: h + h^2 + ... + h^(2^(e*d - 1)).
    const std::uint64_t terms = static_cast<std::uint64_t>(F.degree()) * static_cast<std::uint64_t>(d);
    Polynomial acc = rem(h, g);
    Polynomial cur = acc;
    for (std::uint64_t i = 1; i < terms; ++i) {
      cur = mulmod(cur, cur, g);
      acc += cur;
    }
    return acc;
  }
  // h^((q^d - 1)/2) = (h * h^q * ... * h^(q^(d-1)))^((q - 1)/2)
  Polynomial cur = rem(h, g);
  Polynomial norm = cur;
  for (long i = 1; i < d; ++i) {
    cur = powmod(cur, q, g);
    norm = mulmod(norm, cur, g);
  }
  return powmod(norm, (q - 1) / 2, g) - Polynomial::one(g.field());
}

inline std::optional<Polynomial> try_split(const Polynomial& g, const Polynomial& h, long d) {
  if (h.is_constant()) return std::nullopt;
  Polynomial c = gcd(h, g);
  if (c.degree() > 0 && c.degree() < g.degree()) return c;
  c = gcd(splitting_poly(h, g, d), g);
  if (c.degree() > 0 && c.degree() < g.degree()) return c;
  return std::nullopt;
}

inline Polynomial find_split(const Polynomial& g, long d, std::mt19937_64& rng) {
  const FieldPtr& field = g.field();
  const std::uint64_t q = field->order();
  std::uniform_int_distribution<std::uint64_t> coeff(0, q - 1);
  constexpr int kRandomAttempts = 64;
  for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
    std::vector<Element> c(static_cast<std::size_t>(g.degree()));
    for (Element& e : c) e = field->element_at(coeff(rng));
    if (auto split = try_split(g, Polynomial(field, std::move(c)), d)) return *std::move(split);
  }
  const Polynomial t = Polynomial::x(field);
  for (std::uint64_t i = 0; i < q; ++i) {
    if (auto split = try_split(g, t + Polynomial::constant(field, field->element_at(i)), d)) return *std::move(split);
  }
  throw Error(ErrorKind::PreconditionViolated, "equal-degree splitting failed; input is not an equal-degree product");
}

inline std::vector<Polynomial> edf_unchecked(const Polynomial& f, long d, std::uint64_t seed) {
  std::vector<Polynomial> result;
  std::vector<Polynomial> todo{f};
  std::mt19937_64 rng(seed);
  while (!todo.empty()) {
    Polynomial g = std::move(todo.back());
    todo.pop_back();
    if (g.degree() == d) {
      result.push_back(std::move(g));
      continue;
    }
    Polynomial a = find_split(g, d, rng);
    Polynomial b = exact_div(g, a);
    todo.push_back(std::move(a));
    todo.push_back(std::move(b));
  }
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

}  // namespace detail

/// f = unit * prod g_i^i with the g_i monic, squarefree and pairwise coprime.
inline SquarefreeDecomposition squarefree_decompose(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "squarefree decomposition of zero");
  return {f.lc(), detail::squarefree_monic(f.monic())};
}

/// Groups the irreducible factors of a monic squarefree f by degree.
inline std::vector<DegreeBlock> ddf(const Polynomial& f) {
  if (f.degree() < 1 || !f.is_monic()) throw Error(ErrorKind::PreconditionViolated, "ddf needs a monic nonconstant input");
  if (!detail::squarefree_fast(f)) throw Error(ErrorKind::NotSquarefree, "ddf input is not squarefree");
  return detail::ddf_unchecked(f);
}

/// Splits f, a product of distinct monic irreducibles of degree d, into those factors.
/// The random stream is fully determined by seed; the sorted result does not depend on it.
inline std::vector<Polynomial> edf(const Polynomial& f, long d, std::uint64_t seed) {
  if (d < 1 || f.degree() < 1 || !f.is_monic() || f.degree() % d != 0) {
    throw Error(ErrorKind::PreconditionViolated, "edf needs a monic input whose degree is a multiple of d");
  }
  if (!detail::squarefree_fast(f)) throw Error(ErrorKind::PreconditionViolated, "edf input is not squarefree");
  const std::vector<DegreeBlock> blocks = detail::ddf_unchecked(f);
  if (blocks.size() != 1 || blocks[0].degree != d) {
    throw Error(ErrorKind::PreconditionViolated, "edf input has irreducible factors of degree other than d");
  }
  return detail::edf_unchecked(f, d, seed);
}

inline Factorization factor(const Polynomial& f, std::uint64_t seed = 0) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  Factorization out{f.lc(), {}};
  if (f.is_constant()) return out;
  std::uint64_t stream = seed;
  for (const SquarefreePart& sp : detail::squarefree_monic(f.monic())) {
    for (DegreeBlock& block : detail::ddf_unchecked(sp.part)) {
      if (block.product.degree() == block.degree) {
        out.factors.push_back({std::move(block.product), sp.exponent});
        continue;
      }
      for (Polynomial& base : detail::edf_unchecked(block.product, block.degree, stream++)) {
        out.factors.push_back({std::move(base), sp.exponent});
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.base, b.base); });
  return out;
}

inline bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) return false;
  const Polynomial m = f.monic();
  if (!detail::squarefree_fast(m)) return false;
  const std::vector<DegreeBlock> blocks = detail::ddf_unchecked(m);
  return blocks.size() == 1 && blocks[0].degree == m.degree();
}

/// Unit, degree and the set of multiplicities of the irreducible factors: everything
/// the power predicates depend on, obtained without splitting into irreducibles.
struct MultiplicityProfile {
  FieldElement unit;
  long degree;
  std::vector<std::uint64_t> multiplicities;  // distinct, ascending
};

inline MultiplicityProfile multiplicity_profile(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "profile of zero");
  MultiplicityProfile out{f.lc(), f.degree(), {}};
  for (const SquarefreePart& sp : detail::squarefree_monic(f.monic())) out.multiplicities.push_back(sp.exponent);
  return out;
}

inline bool is_squarefree(const MultiplicityProfile& prof) {
  return std::all_of(prof.multiplicities.begin(), prof.multiplicities.end(), [](std::uint64_t m) { return m == 1; });
}

inline bool is_powerful(const MultiplicityProfile& prof) {
  return std::all_of(prof.multiplicities.begin(), prof.multiplicities.end(), [](std::uint64_t m) { return m >= 2; });
}

inline bool is_perfect_jth_power(const MultiplicityProfile& prof, std::uint64_t j) {
  if (j == 0) throw Error(ErrorKind::PreconditionViolated, "exponent j must be >= 1");
  const bool exps = std::all_of(prof.multiplicities.begin(), prof.multiplicities.end(),
                                [j](std::uint64_t m) { return m % j == 0; });
  return exps && unit_is_jth_power(prof.unit, j);
}

struct PowerWitness {
  bool is_power = false;
  std::optional<std::uint64_t> exponent;  // smallest j >= 2 when is_power
};

inline PowerWitness perfect_power_witness(const MultiplicityProfile& prof) {
  if (prof.multiplicities.empty()) {
    // A constant is a j-th power for every prime j not dividing q - 1, so this terminates.
    for (std::uint64_t r = 2;; ++r) {
      if (nt::is_prime(r) && unit_is_jth_power(prof.unit, r)) return {true, r};
    }
  }
  std::uint64_t g = 0;
  for (std::uint64_t m : prof.multiplicities) g = std::gcd(g, m);
  // The smallest witness is prime: a j-th power is an r-th power for each prime r | j.
  for (std::uint64_t r : nt::prime_divisors(g)) {
    if (unit_is_jth_power(prof.unit, r)) return {true, r};
  }
  return {};
}

inline bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "is_squarefree of zero");
  if (f.is_constant()) return true;
  if (detail::squarefree_fast(f)) return true;
  return is_squarefree(multiplicity_profile(f));
}

inline bool is_powerful(const Polynomial& f) { return is_powerful(multiplicity_profile(f)); }

inline bool is_perfect_jth_power(const Polynomial& f, std::uint64_t j) {
  return is_perfect_jth_power(multiplicity_profile(f), j);
}

inline PowerWitness is_perfect_power_any(const Polynomial& f) { return perfect_power_witness(multiplicity_profile(f)); }

/// `u * (g1)^e1 * (g2) * ...`; the unit is omitted when it is 1 and factors exist.
inline std::string render(const Factorization& fac) {
  std::string out;
  if (!fac.unit.is_one() || fac.factors.empty()) out = render(fac.unit);
  for (const FactorPower& fp : fac.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + render(fp.base) + ")";
    if (fp.multiplicity != 1) out += "^" + std::to_string(fp.multiplicity);
  }
  return out;
}

}  // namespace fibpow
