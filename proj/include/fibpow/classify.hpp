#pragma once

// Theorem sweeps: each theorem's characterization as a predicate on n, checked
// against the factor engine on the generated sequence members.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "fibpow/error.hpp"
#include "fibpow/factor.hpp"
#include "fibpow/ff.hpp"
#include "fibpow/horadam.hpp"
#include "fibpow/numtheory.hpp"

namespace fibpow {

enum class TheoremId {
  FibJpow,
  FibJpowP2,
  FibSqP2,
  FibNopow,
  FibPowerful,
  FibPowerfulP3,
  FibPowerfulP2,
  WJpow,
  WNopow,
  WPowerful,
  WJpowP2,
  WPowerfulP2,
  WPowerfulP3,
  WlowPow,
  JacJpow,
  JacPowerful,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::FibJpow,     TheoremId::FibJpowP2, TheoremId::FibSqP2,     TheoremId::FibNopow,
    TheoremId::FibPowerful, TheoremId::FibPowerfulP3, TheoremId::FibPowerfulP2, TheoremId::WJpow,
    TheoremId::WNopow,      TheoremId::WPowerful, TheoremId::WJpowP2,     TheoremId::WPowerfulP2,
    TheoremId::WPowerfulP3, TheoremId::WlowPow,   TheoremId::JacJpow,     TheoremId::JacPowerful,
};

inline std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::FibJpow: return "fib-jpow";
    case TheoremId::FibJpowP2: return "fib-jpow-p2";
    case TheoremId::FibSqP2: return "fib-sq-p2";
    case TheoremId::FibNopow: return "fib-nopow";
    case TheoremId::FibPowerful: return "fib-powerful";
    case TheoremId::FibPowerfulP3: return "fib-powerful-p3";
    case TheoremId::FibPowerfulP2: return "fib-powerful-p2";
    case TheoremId::WJpow: return "w-jpow";
    case TheoremId::WNopow: return "w-nopow";
    case TheoremId::WPowerful: return "w-powerful";
    case TheoremId::WJpowP2: return "w-jpow-p2";
    case TheoremId::WPowerfulP2: return "w-powerful-p2";
    case TheoremId::WPowerfulP3: return "w-powerful-p3";
    case TheoremId::WlowPow: return "wlow-pow";
    case TheoremId::JacJpow: return "jac-jpow";
    case TheoremId::JacPowerful: return "jac-powerful";
  }
  return "?";
}

inline TheoremId parse_theorem(std::string_view name) {
  std::string s(name);
  for (char& c : s) c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (TheoremId id : kAllTheorems) {
    if (s == theorem_name(id)) return id;
  }
  throw Error(ErrorKind::Usage, "unknown theorem '" + std::string(name) + "'");
}

enum class Predicate { JthPower, Powerful, AnyPower };

/// Which sequence a theorem is about and which predicate it characterizes.
struct TheoremShape {
  enum class Subject { Fibonacci, Horadam, Jacobsthal } subject;
  SequenceKind kind;
  Predicate predicate;
  bool needs_j;
};

inline TheoremShape theorem_shape(TheoremId id) {
  using S = TheoremShape::Subject;
  switch (id) {
    case TheoremId::FibJpow:
    case TheoremId::FibJpowP2:
    case TheoremId::FibNopow: return {S::Fibonacci, SequenceKind::W, Predicate::JthPower, true};
    case TheoremId::FibSqP2: return {S::Fibonacci, SequenceKind::W, Predicate::JthPower, false};
    case TheoremId::FibPowerful:
    case TheoremId::FibPowerfulP3:
    case TheoremId::FibPowerfulP2: return {S::Fibonacci, SequenceKind::W, Predicate::Powerful, false};
    case TheoremId::WJpow:
    case TheoremId::WNopow:
    case TheoremId::WJpowP2: return {S::Horadam, SequenceKind::W, Predicate::JthPower, true};
    case TheoremId::WPowerful:
    case TheoremId::WPowerfulP2:
    case TheoremId::WPowerfulP3: return {S::Horadam, SequenceKind::W, Predicate::Powerful, false};
    case TheoremId::WlowPow: return {S::Horadam, SequenceKind::w, Predicate::AnyPower, false};
    case TheoremId::JacJpow: return {S::Jacobsthal, SequenceKind::W, Predicate::JthPower, true};
    case TheoremId::JacPowerful: return {S::Jacobsthal, SequenceKind::W, Predicate::Powerful, false};
  }
  throw Error(ErrorKind::Usage, "unknown theorem");
}

inline constexpr std::uint64_t kDefaultDegreeCap = 3000;

struct TheoremCase {
  TheoremId theorem;
  FieldPtr field;
  std::optional<std::uint64_t> j;
  HoradamParams params;  // ignored for the Fibonacci and Jacobsthal theorems
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 1;
  std::uint64_t degree_cap = kDefaultDegreeCap;
  bool exploratory = false;  // report observations for params outside the hypotheses
};

/// Builds a case; the sequence parameters default to the subject's family
/// (Fibonacci, Jacobsthal) or to f = T, g = 1 for the W/w theorems.
inline TheoremCase make_case(TheoremId id, const FieldPtr& field, std::optional<std::uint64_t> j,
                             std::uint64_t n_min, std::uint64_t n_max,
                             std::optional<HoradamParams> params = std::nullopt) {
  const TheoremShape shape = theorem_shape(id);
  HoradamParams prm = shape.subject == TheoremShape::Subject::Jacobsthal && field->characteristic() != 2
                          ? family_params(Family::Jacobsthal, field)
                          : family_params(Family::Fibonacci, field);
  if (shape.subject == TheoremShape::Subject::Horadam && params) prm = *params;
  if (id == TheoremId::FibSqP2 && !j) j = 2;
  return {id, field, j, prm, n_min, n_max};
}

/// Least a >= 1 with p^a = 1 (mod m).
inline std::uint64_t mult_order(std::uint64_t p, std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::PreconditionViolated, "modulus must be >= 1");
  if (m == 1) return 1;
  if (std::gcd(p, m) != 1) throw Error(ErrorKind::NotCoprime, std::to_string(p) + " is not coprime to " + std::to_string(m));
  std::uint64_t x = p % m;
  for (std::uint64_t a = 1;; ++a) {
    if (x == 1) return a;
    x = nt::mul_mod(x, p, m);
  }
}

namespace detail {

[[noreturn]] inline void violated(const std::string& what) { throw Error(ErrorKind::HypothesisViolated, what); }

inline std::uint64_t need_j(const TheoremCase& c) {
  if (!c.j) violated(std::string(theorem_name(c.theorem)) + " needs --j");
  return *c.j;
}

}  // namespace detail

/// Throws HypothesisViolated when the case is outside the theorem's hypotheses.
inline void validate(const TheoremCase& c) {
  using detail::violated;
  const std::uint64_t p = c.field->characteristic();
  const std::string name(theorem_name(c.theorem));
  if (c.n_min < 1 || c.n_min > c.n_max) violated("range must satisfy 1 <= nmin <= nmax");
  if (!c.params.field()->same_as(*c.field)) throw Error(ErrorKind::FieldMismatch, "params over a different field");
  const TheoremShape shape = theorem_shape(c.theorem);
  if (!shape.needs_j && c.j && !(c.theorem == TheoremId::FibSqP2 && *c.j == 2)) {
    violated(name + " does not take j");
  }

  auto odd_p = [&] {
    if (p == 2) violated(name + " needs an odd prime p");
  };
  auto coprime_2j = [&](std::uint64_t j) {
    if (j < 2) violated(name + " needs j > 1");
    if (std::gcd(p, 2 * j) != 1) violated(name + ": p = " + std::to_string(p) + " must be coprime to 2j = " + std::to_string(2 * j));
  };
  auto odd_j_p2 = [&](std::uint64_t j) {
    if (p != 2) violated(name + " needs p = 2");
    if (j < 3 || j % 2 == 0) violated(name + " needs an odd j > 2");
  };
  auto p_divides_j = [&](std::uint64_t j) {
    if (j < 2 || j % p != 0) violated(name + " needs j > 1 with p | j");
  };
  // Theorems on W_n, w_n with deg f = 1 and deg g = 0. Nonzero coefficients are
  // guaranteed by HoradamParams, which is the p-does-not-divide-lc(f)*g condition.
  auto linear_f_constant_g = [&] {
    if (c.exploratory) return;
    if (c.params.f().degree != 1 || c.params.g().degree != 0) violated(name + " needs deg f = 1 and deg g = 0");
  };

  switch (c.theorem) {
    case TheoremId::FibJpow:
      odd_p();
      coprime_2j(detail::need_j(c));
      break;
    case TheoremId::FibJpowP2:
      odd_j_p2(detail::need_j(c));
      break;
    case TheoremId::FibSqP2:
    case TheoremId::FibPowerfulP2:
      if (p != 2) violated(name + " needs p = 2");
      break;
    case TheoremId::FibNopow:
      odd_p();
      p_divides_j(detail::need_j(c));
      break;
    case TheoremId::FibPowerful:
      if (p <= 3) violated(name + " needs p > 3");
      break;
    case TheoremId::FibPowerfulP3:
      if (p != 3) violated(name + " needs p = 3");
      break;
    case TheoremId::WJpow:
      odd_p();
      coprime_2j(detail::need_j(c));
      linear_f_constant_g();
      break;
    case TheoremId::WNopow:
      odd_p();
      p_divides_j(detail::need_j(c));
      linear_f_constant_g();
      break;
    case TheoremId::WPowerful:
      if (p <= 3) violated(name + " needs p > 3");
      linear_f_constant_g();
      break;
    case TheoremId::WJpowP2:
    case TheoremId::WPowerfulP2:
      if (c.theorem == TheoremId::WJpowP2) {
        odd_j_p2(detail::need_j(c));
      } else if (p != 2) {
        violated(name + " needs p = 2");
      }
      linear_f_constant_g();
      if (!c.exploratory && !c.field->in_prime_subfield(c.params.g().coeff.raw())) violated(name + " needs g in the prime field");
      break;
    case TheoremId::WPowerfulP3:
      if (p != 3) violated(name + " needs p = 3");
      linear_f_constant_g();
      break;
    case TheoremId::WlowPow:
      odd_p();
      linear_f_constant_g();
      break;
    case TheoremId::JacJpow:
      odd_p();
      coprime_2j(detail::need_j(c));
      break;
    case TheoremId::JacPowerful:
      odd_p();
      break;
  }
}

/// Exponent a with positives at p^(ak): ord_2j(p) for odd p, ord_j(2) for p = 2.
inline std::uint64_t theorem_order(const TheoremCase& c) {
  const std::uint64_t p = c.field->characteristic();
  switch (c.theorem) {
    case TheoremId::FibJpow:
    case TheoremId::WJpow:
    case TheoremId::JacJpow: return mult_order(p, 2 * *c.j);
    case TheoremId::FibJpowP2:
    case TheoremId::WJpowP2: return mult_order(2, *c.j);
    default: return 0;
  }
}

namespace detail {

inline bool is_p_power_multiple_of(std::uint64_t n, std::uint64_t p, std::uint64_t a, bool allow_zero) {
  unsigned k = 0;
  if (!nt::is_power_of(n, p, &k)) return false;
  if (k == 0) return allow_zero;
  return k % a == 0;
}

}  // namespace detail

/// The theorem's right-hand side at n. Members that are the constant 1 (n = 1, and
/// n <= 2 for Jacobsthal) count as trivial powers and as powerful.
inline bool predict(const TheoremCase& c, std::uint64_t n) {
  validate(c);
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "n must be >= 1");
  const std::uint64_t p = c.field->characteristic();
  switch (c.theorem) {
    case TheoremId::FibJpow:
    case TheoremId::WJpow:
    case TheoremId::FibJpowP2:
    case TheoremId::WJpowP2: return detail::is_p_power_multiple_of(n, p, theorem_order(c), true);
    case TheoremId::FibSqP2: return n % 2 == 1;
    case TheoremId::FibNopow:
    case TheoremId::WNopow: return n == 1;
    case TheoremId::FibPowerful:
    case TheoremId::WPowerful: return n == 1 || n % p == 0;
    case TheoremId::FibPowerfulP3:
    case TheoremId::WPowerfulP3: return n == 1 || n % 9 == 0;
    case TheoremId::FibPowerfulP2:
    case TheoremId::WPowerfulP2: return n == 1 || (n >= 3 && n % 2 == 1) || n % 4 == 0;
    case TheoremId::WlowPow: return n % p == 0;
    case TheoremId::JacJpow: {
      if (n <= 2) return true;
      const std::uint64_t a = theorem_order(c);
      return detail::is_p_power_multiple_of(n, p, a, false) ||
             (n % 2 == 0 && detail::is_p_power_multiple_of(n / 2, p, a, false));
    }
    case TheoremId::JacPowerful:
      if (n <= 2) return true;
      return p == 3 ? n % 9 == 0 : n % p == 0;
  }
  return false;
}

/// Upper bound on the degree of the sequence member at n.
inline std::uint64_t member_degree_bound(const HoradamParams& params, SequenceKind kind, std::uint64_t n) {
  if (params.f().degree == 1) return kind == SequenceKind::W ? (n == 0 ? 0 : n - 1) : n;
  if (params.g().degree == 1) return kind == SequenceKind::W ? (n == 0 ? 0 : (n - 1) / 2) : n / 2;
  return 0;
}

/// Smallest positive beyond the constant members, for theorems that have one.
inline std::optional<std::uint64_t> first_nontrivial_positive(const TheoremCase& c) {
  const std::uint64_t p = c.field->characteristic();
  const std::uint64_t base = (c.theorem == TheoremId::FibJpowP2 || c.theorem == TheoremId::WJpowP2) ? 2 : p;
  switch (c.theorem) {
    case TheoremId::FibJpow:
    case TheoremId::WJpow:
    case TheoremId::FibJpowP2:
    case TheoremId::WJpowP2:
    case TheoremId::JacJpow: {
      const std::uint64_t a = theorem_order(c);
      std::uint64_t n = 1;
      for (std::uint64_t i = 0; i < a; ++i) {
        if (n > (UINT64_MAX / base)) return std::nullopt;
        n *= base;
      }
      return n;
    }
    default: return std::nullopt;
  }
}

/// Memoized multiplicity profiles of sequence members, keyed by field, parameters,
/// kind and n, so that sweeps sharing a sequence factor each member once.
class ProfileCache {
 public:
  const MultiplicityProfile& get(const HoradamParams& params, SequenceKind kind, std::uint64_t n) {
    Entry& e = entry(params, kind);
    auto it = e.profiles.find(n);
    if (it != e.profiles.end()) return it->second;
    return e.profiles.emplace(n, multiplicity_profile_or_zero(e.seq.at(n))).first->second;
  }

 private:
  struct Entry {
    HoradamSequence seq;
    std::map<std::uint64_t, MultiplicityProfile> profiles;
  };

  static MultiplicityProfile multiplicity_profile_or_zero(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "sequence member is zero");
    return multiplicity_profile(f);
  }

  Entry& entry(const HoradamParams& params, SequenceKind kind) {
    const Field& F = *params.field();
    auto key = std::make_tuple(F.characteristic(), F.degree(), params.f().coeff.raw().v, params.f().degree,
                               params.g().coeff.raw().v, params.g().degree, kind == SequenceKind::W);
    auto it = entries_.find(key);
    if (it == entries_.end()) it = entries_.emplace(key, Entry{HoradamSequence(params, kind), {}}).first;
    return it->second;
  }

  std::map<std::tuple<std::uint64_t, unsigned, std::uint32_t, unsigned, std::uint32_t, unsigned, bool>, Entry> entries_;
};

struct ReportRow {
  std::uint64_t n;
  bool predicted;
  bool computed;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

enum class ReportStatus { Pass, Fail, Exploratory };

inline std::string_view status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::Exploratory: return "exploratory";
  }
  return "?";
}

struct VerificationReport {
  TheoremCase theorem_case;
  std::vector<ReportRow> rows;        // every n in range not skipped, ascending
  std::vector<ReportRow> witnesses;   // first nontrivial positive when it lies past the range
  std::vector<ReportRow> mismatches;  // rows and witnesses with predicted != computed
  std::vector<std::uint64_t> skipped; // members over the degree cap
  ReportStatus status = ReportStatus::Pass;

  /// n with computed = true, from rows and witnesses.
  std::vector<std::uint64_t> positives() const {
    std::vector<std::uint64_t> out;
    for (const auto* list : {&rows, &witnesses}) {
      for (const ReportRow& r : *list) {
        if (r.computed) out.push_back(r.n);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline bool compute_predicate(const TheoremCase& c, const MultiplicityProfile& prof) {
  switch (theorem_shape(c.theorem).predicate) {
    case Predicate::JthPower: return is_perfect_jth_power(prof, c.j.value_or(2));
    case Predicate::Powerful: return is_powerful(prof);
    case Predicate::AnyPower: return perfect_power_witness(prof).is_power;
  }
  return false;
}

inline VerificationReport verify(const TheoremCase& c, ProfileCache& cache) {
  validate(c);
  const SequenceKind kind = theorem_shape(c.theorem).kind;
  VerificationReport report{c, {}, {}, {}, {}, ReportStatus::Pass};
  auto row = [&](std::uint64_t n) {
    return ReportRow{n, predict(c, n), compute_predicate(c, cache.get(c.params, kind, n))};
  };
  for (std::uint64_t n = c.n_min; n <= c.n_max; ++n) {
    if (member_degree_bound(c.params, kind, n) > c.degree_cap) {
      report.skipped.push_back(n);
      continue;
    }
    report.rows.push_back(row(n));
  }
  if (const auto first = first_nontrivial_positive(c); first && *first > c.n_max) {
    if (member_degree_bound(c.params, kind, *first) <= c.degree_cap) {
      report.witnesses.push_back(row(*first));
    } else {
      report.skipped.push_back(*first);
    }
  }
  for (const auto* list : {&report.rows, &report.witnesses}) {
    for (const ReportRow& r : *list) {
      if (r.predicted != r.computed) report.mismatches.push_back(r);
    }
  }
  if (c.exploratory) {
    report.status = ReportStatus::Exploratory;
  } else {
    report.status = report.mismatches.empty() ? ReportStatus::Pass : ReportStatus::Fail;
  }
  return report;
}

inline VerificationReport verify(const TheoremCase& c) {
  ProfileCache cache;
  return verify(c, cache);
}

/// Parameter grid for the W/w sweeps: f = a_f T, g = a_g with a_f, a_g in
/// {1, ..., min(p - 1, 4)}.
inline std::vector<HoradamParams> w_param_grid(const FieldPtr& field) {
  const std::uint64_t top = std::min<std::uint64_t>(field->characteristic() - 1, 4);
  std::vector<HoradamParams> out;
  for (std::uint64_t af = 1; af <= top; ++af) {
    for (std::uint64_t ag = 1; ag <= top; ++ag) {
      out.push_back(HoradamParams::make(field, static_cast<std::int64_t>(af), 1, static_cast<std::int64_t>(ag), 0));
    }
  }
  return out;
}

}  // namespace fibpow
