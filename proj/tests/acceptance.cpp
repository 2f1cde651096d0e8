// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero when any
// criterion fails. Pass criterion numbers as arguments to run a subset.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fibpow/fibpow.hpp"
#include "golden.hpp"
#include "oracle.hpp"

using namespace fibpow;

namespace {

struct Outcome {
  bool pass = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      if (failures.size() < 10) failures.push_back(what);
    }
  }
};

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

std::string describe(const TheoremCase& c) {
  std::ostringstream out;
  out << theorem_name(c.theorem) << " over " << field_label(*c.field);
  if (c.j) out << " j=" << *c.j;
  if (theorem_shape(c.theorem).subject == TheoremShape::Subject::Horadam) {
    out << " f=" << render(c.params.f()) << " g=" << render(c.params.g());
  }
  return out.str();
}

void expect_report(Outcome& out, const VerificationReport& r) {
  std::string what = describe(r.theorem_case) + ": " + std::string(status_name(r.status));
  for (const ReportRow& m : r.mismatches) what += " n=" + std::to_string(m.n);
  out.expect(r.status == ReportStatus::Pass && r.mismatches.empty(), what);
}

// h^(p^k) via Frobenius: raise each coefficient and spread the exponents.
Polynomial frobenius_power(const Polynomial& h, std::uint64_t pk) {
  const Field& F = h.f();
  std::vector<Element> c(h.is_zero() ? 0 : (h.size() - 1) * pk + 1, F.zero());
  for (std::size_t i = 0; i < h.size(); ++i) c[i * pk] = F.pow(h.raw(i), pk);
  return {h.field(), std::move(c)};
}

// Every parameter pair with nonzero coefficients in 1..min(p-1, 4) and degrees in {0, 1}.
std::vector<HoradamParams> all_shapes(const FieldPtr& F) {
  std::vector<HoradamParams> out;
  const std::uint64_t top = std::min<std::uint64_t>(F->order() - 1, 4);
  for (std::uint64_t af = 1; af <= top; ++af) {
    for (std::uint64_t ag = 1; ag <= top; ++ag) {
      for (unsigned df : {0u, 1u}) {
        for (unsigned dg : {0u, 1u}) {
          out.push_back({{FieldElement(F, F->element_at(af)), df}, {FieldElement(F, F->element_at(ag)), dg}});
        }
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> coprime_js(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 2; j <= 6; ++j) {
    if (std::gcd(p, 2 * j) == 1) out.push_back(j);
  }
  return out;
}

// 1. Golden tables as unit + factor multisets.
Outcome tables() {
  Outcome out;
  for (const golden::GoldenCase& c : golden::all_cases()) {
    const golden::GoldenTable g = golden::load(c.family, c.p);
    const std::vector<std::string> diffs = golden::compare(g);
    out.checks += g.rows.size();
    for (const std::string& d : diffs) out.expect(false, d);
  }
  return out;
}

// 2. j-th powers of F_n for odd p coprime to 2j, over F_p and F_{p^2}.
Outcome fib_jpow_sweep() {
  Outcome out;
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned e : {1u, 2u}) {
      const FieldPtr F = make_field(p, e);
      ProfileCache cache;
      for (std::uint64_t j : coprime_js(p)) {
        const TheoremCase c = make_case(TheoremId::FibJpow, F, j, 1, 400);
        const VerificationReport r = verify(c, cache);
        expect_report(out, r);
        const std::uint64_t first = *first_nontrivial_positive(c);
        const std::vector<std::uint64_t> pos = r.positives();
        const bool has_witness = std::find(pos.begin(), pos.end(), first) != pos.end();
        if (first <= c.degree_cap) {
          out.expect(has_witness, describe(c) + ": no positive witness at n=" + std::to_string(first));
        } else {
          out.expect(!has_witness && r.skipped.back() == first,
                     describe(c) + ": witness " + std::to_string(first) + " beyond the cap not recorded as skipped");
        }
      }
    }
  }
  return out;
}

// 3. Powerful and square characterizations for F_n.
Outcome powerful_sweeps() {
  Outcome out;
  for (std::uint64_t p : {5u, 7u, 11u}) expect_report(out, verify(make_case(TheoremId::FibPowerful, make_field(p), {}, 1, 300)));
  expect_report(out, verify(make_case(TheoremId::FibPowerfulP3, make_field(3), {}, 1, 300)));
  expect_report(out, verify(make_case(TheoremId::FibPowerfulP2, make_field(2), {}, 1, 300)));
  expect_report(out, verify(make_case(TheoremId::FibPowerfulP2, make_field(2, 2), {}, 1, 300)));
  expect_report(out, verify(make_case(TheoremId::FibSqP2, make_field(2), 2, 1, 300)));
  return out;
}

// 4. No perfect p-th powers: F_n and W_n with j = p are never p-th powers beyond the
// constant member n = 1.
Outcome negative_sweeps() {
  Outcome out;
  for (std::uint64_t p : {3u, 5u}) {
    const FieldPtr F = make_field(p);
    std::vector<TheoremCase> cases{make_case(TheoremId::FibNopow, F, p, 1, 200)};
    for (const HoradamParams& h : w_param_grid(F)) cases.push_back(make_case(TheoremId::WNopow, F, p, 1, 200, h));
    for (const TheoremCase& c : cases) {
      const VerificationReport r = verify(c);
      expect_report(out, r);
      for (const ReportRow& row : r.rows) {
        if (row.n >= 2) out.expect(!row.computed, describe(c) + ": p-th power at n=" + std::to_string(row.n));
      }
      out.expect(horadam_W(c.params, 1).is_one(), describe(c) + ": n = 1 member is not the constant 1");
    }
  }
  return out;
}

// 5. W/w theorems over the parameter grid.
Outcome w_sweeps() {
  Outcome out;
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    ProfileCache cache;
    for (const HoradamParams& h : w_param_grid(F)) {
      std::vector<TheoremCase> cases;
      if (p == 2) {
        for (std::uint64_t j : {3u, 5u}) cases.push_back(make_case(TheoremId::WJpowP2, F, j, 1, 200, h));
        cases.push_back(make_case(TheoremId::WPowerfulP2, F, {}, 1, 200, h));
      } else {
        for (std::uint64_t j : coprime_js(p)) cases.push_back(make_case(TheoremId::WJpow, F, j, 1, 200, h));
        for (std::uint64_t j = p; j <= 6; j += p) cases.push_back(make_case(TheoremId::WNopow, F, j, 1, 200, h));
        cases.push_back(make_case(p == 3 ? TheoremId::WPowerfulP3 : TheoremId::WPowerful, F, {}, 1, 200, h));
        cases.push_back(make_case(TheoremId::WlowPow, F, {}, 1, 200, h));
      }
      for (const TheoremCase& c : cases) expect_report(out, verify(c, cache));
    }
  }
  return out;
}

// 6. Jacobsthal j-th powers and powerful members, plus the tabulated positives.
Outcome jacobsthal_sweep() {
  Outcome out;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint64_t>> positives;
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    ProfileCache cache;
    for (std::uint64_t j : {2u, 3u}) {
      if (std::gcd(p, 2 * j) != 1) continue;
      const VerificationReport r = verify(make_case(TheoremId::JacJpow, F, j, 3, 300), cache);
      expect_report(out, r);
      positives[{p, j}] = r.positives();
    }
    expect_report(out, verify(make_case(TheoremId::JacPowerful, F, {}, 3, 300), cache));
  }
  auto has = [&](std::uint64_t p, std::uint64_t j, std::uint64_t n) {
    const std::vector<std::uint64_t>& v = positives[{p, j}];
    return std::find(v.begin(), v.end(), n) != v.end();
  };
  out.expect(has(3, 2, 9) && has(3, 2, 18), "J_9, J_18 over F_3 not squares");
  out.expect(has(5, 2, 25) && has(5, 3, 25), "J_25 over F_5 not a square and a cube");
  // The same members taken from the transcribed tables.
  const golden::GoldenTable g3 = golden::load(Family::Jacobsthal, 3), g5 = golden::load(Family::Jacobsthal, 5);
  out.expect(is_perfect_jth_power(g3.rows.at(8).factorization.expand(), 2), "tabulated J_9 over F_3 not a square");
  out.expect(is_perfect_jth_power(g3.rows.at(17).factorization.expand(), 2), "tabulated J_18 over F_3 not a square");
  out.expect(is_perfect_jth_power(g5.rows.at(24).factorization.expand(), 2), "tabulated J_25 over F_5 not a square");
  return out;
}

// 7. Sequence identities.
Outcome identities() {
  Outcome out;
  // F_{p^k m} = F_{p^k} F_m^{p^k} for p not dividing m.
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    FamilySequence fib(Family::Fibonacci, F);
    for (unsigned k = 0; k <= 2; ++k) {
      const std::uint64_t pk = ipow(p, k);
      const Polynomial fpk = family_poly(Family::Fibonacci, pk, F);
      for (std::uint64_t m = 1; m <= 30; ++m) {
        if (m % p == 0) continue;
        const Polynomial fm = family_poly(Family::Fibonacci, m, F);
        out.expect(fib.at(pk * m) == fpk * frobenius_power(fm, pk),
                   "F_{p^k m} identity p=" + std::to_string(p) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
      }
    }
  }
  // W_{p^k m} = W_{p^k} W_m^{p^k} and w_{p^k m} = w_m^{p^k}, every parameter shape.
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    for (const HoradamParams& h : all_shapes(F)) {
      HoradamSequence W(h, SequenceKind::W), w(h, SequenceKind::w);
      std::vector<Polynomial> Wm{Polynomial(F)}, wm{horadam_w(h, 0)};
      for (std::uint64_t m = 1; m <= 30; ++m) {
        Wm.push_back(W.at(m));
        wm.push_back(w.at(m));
      }
      for (unsigned k = 0; k <= 2; ++k) {
        const std::uint64_t pk = ipow(p, k);
        const Polynomial cW = closed_form_prime_power(h, SequenceKind::W, k);
        out.expect(cW == horadam_W(h, pk) && closed_form_prime_power(h, SequenceKind::w, k) == horadam_w(h, pk),
                   "closed form at p^k, p=" + std::to_string(p) + " k=" + std::to_string(k));
        for (std::uint64_t m = 1; m <= 30; ++m) {
          if (m % p == 0) continue;
          const std::string where = " p=" + std::to_string(p) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                    " f=" + render(h.f()) + " g=" + render(h.g());
          out.expect(W.at(pk * m) == cW * frobenius_power(Wm[m], pk), "W_{p^k m} identity" + where);
          out.expect(w.at(pk * m) == frobenius_power(wm[m], pk), "w_{p^k m} identity" + where);
        }
      }
    }
  }
  // Constant g: f | W_n for even n, gcd(W_n, f) = 1 for odd n.
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    for (const HoradamParams& h : all_shapes(F)) {
      if (h.g().degree != 0) continue;
      HoradamSequence W(h, SequenceKind::W);
      for (std::uint64_t n = 1; n <= 200; ++n) {
        const Polynomial& x = W.at(n);
        const bool ok = n % 2 == 0 ? divides(h.f_poly(), x) : gcd(x, h.f_poly()).is_one();
        out.expect(ok, "parity divisibility p=" + std::to_string(p) + " n=" + std::to_string(n) + " f=" + render(h.f()));
      }
    }
  }
  // Characteristic 2, constant g: W_{2n} = f W_n^2, W_{2n+1} = W_{n+1}^2 + g W_n^2 = (W_{n+1} + sqrt(g) W_n)^2.
  for (const FieldPtr& F : {make_field(2), make_field(2, 2)}) {
    for (const HoradamParams& h : all_shapes(F)) {
      if (h.g().degree != 0) continue;
      const Polynomial f = h.f_poly(), g = h.g_poly();
      const Polynomial root_g = Polynomial::constant(F, F->pth_root(h.g().coeff.raw()));
      HoradamSequence W(h, SequenceKind::W);
      std::vector<Polynomial> v;
      for (std::uint64_t n = 0; n <= 129; ++n) v.push_back(W.at(n));
      for (std::uint64_t n = 1; n <= 64; ++n) {
        const std::string where = " q=" + std::to_string(F->order()) + " n=" + std::to_string(n);
        out.expect(v[2 * n] == f * v[n] * v[n], "W_2n square" + where);
        out.expect(v[2 * n + 1] == v[n + 1] * v[n + 1] + g * v[n] * v[n], "W_2n+1 sum of squares" + where);
        out.expect(v[2 * n + 1] == pow(v[n + 1] + root_g * v[n], 2), "W_2n+1 square" + where);
      }
    }
  }
  // Closed form of W_n modulo f^2 + 4g against the division remainder.
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    for (const HoradamParams& h : all_shapes(F)) {
      const Polynomial d = delta_sq(h);
      if (d.is_constant()) continue;
      HoradamSequence W(h, SequenceKind::W);
      for (std::uint64_t n = 0; n <= 100; ++n) {
        out.expect(wn_mod_delta(h, n) == rem(W.at(n), d),
                   "W_n mod delta p=" + std::to_string(p) + " n=" + std::to_string(n) + " f=" + render(h.f()) +
                       " g=" + render(h.g()));
      }
    }
  }
  // Coprimality with f^2 + 4g and squarefreeness when p does not divide m.
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    for (const HoradamParams& h : w_param_grid(F)) {
      const Polynomial d = delta_sq(h);
      HoradamSequence W(h, SequenceKind::W), w(h, SequenceKind::w);
      for (std::uint64_t m = 1; m <= 60; ++m) {
        if (m % p == 0) continue;
        const std::string where = " p=" + std::to_string(p) + " m=" + std::to_string(m) + " f=" + render(h.f());
        out.expect(gcd(d, W.at(m)).is_one(), "gcd(delta^2, W_m)" + where);
        out.expect(is_squarefree(W.at(m)) && is_squarefree(w.at(m)), "squarefree W_m, w_m" + where);
      }
    }
    FamilySequence J(Family::Jacobsthal, F);
    for (std::uint64_t m = 1; m <= 60; ++m) {
      if (m % p != 0) out.expect(is_squarefree(J.at(m)), "squarefree J_m p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  }
  return out;
}

// 8. Discriminants of F_m, W_m, w_m against the closed formulas.
Outcome discriminants() {
  Outcome out;
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    const FieldElement two = FieldElement::from_int(F, 2), minus_one = FieldElement::from_int(F, -1);
    FamilySequence fib(Family::Fibonacci, F);
    for (std::uint64_t m = 3; m <= 40; ++m) {
      const FieldElement mm = FieldElement::from_int(F, static_cast<std::int64_t>(m));
      out.expect(discriminant(fib.at(m)) == minus_one.pow((m - 2) * (m - 1) / 2) * two.pow(m - 1) * mm.pow(m - 3),
                 "disc F_m p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
    for (const HoradamParams& h : w_param_grid(F)) {
      const FieldElement neg_g = -h.g().coeff, lc = h.lc_f();
      HoradamSequence W(h, SequenceKind::W), w(h, SequenceKind::w);
      for (std::uint64_t m = 3; m <= 40; ++m) {
        const FieldElement mm = FieldElement::from_int(F, static_cast<std::int64_t>(m));
        const std::string where = " p=" + std::to_string(p) + " m=" + std::to_string(m) + " f=" + render(h.f()) +
                                  " g=" + render(h.g());
        out.expect(discriminant(W.at(m)) ==
                       neg_g.pow((m - 1) * (m - 2) / 2) * two.pow(m - 1) * mm.pow(m - 3) * lc.pow((m - 1) * (m - 2)),
                   "disc W_m" + where);
        out.expect(discriminant(w.at(m)) == neg_g.pow(m * (m - 1) / 2) * two.pow(m - 1) * mm.pow(m) * lc.pow(m * (m - 1)),
                   "disc w_m" + where);
      }
    }
  }
  return out;
}

// 9. factor() against trial division by enumerated irreducibles.
Outcome factor_oracle() {
  Outcome out;
  for (std::uint64_t p : {2u, 3u}) {
    const FieldPtr F = make_field(p);
    const oracle::IrreducibleSieve sieve(F, 4);
    Polynomial f = Polynomial::x(F);
    // Every monic polynomial of degree 1..8, enumerated as base-p counters.
    for (unsigned d = 1; d <= 8; ++d) {
      std::vector<Element> c(d + 1, F->zero());
      c[d] = F->one();
      for (std::uint64_t i = 0; i < ipow(p, d); ++i) {
        std::uint64_t v = i;
        for (unsigned t = 0; t < d; ++t, v /= p) c[t] = F->element_at(v % p);
        const Polynomial g(F, c);
        out.expect(factor(g, i) == sieve.trial_divide(g), "F_" + std::to_string(p) + ": " + render(g));
      }
    }
  }
  std::mt19937_64 rng(20240601);
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {3, 2}}) {
    const FieldPtr F = make_field(p, e);
    const oracle::IrreducibleSieve sieve(F, 6);
    std::uniform_int_distribution<long> deg(1, 12);
    std::uniform_int_distribution<std::uint64_t> coeff(0, F->order() - 1);
    for (int it = 0; it < 10000; ++it) {
      const long d = deg(rng);
      std::vector<Element> c(static_cast<std::size_t>(d + 1));
      for (Element& x : c) x = F->element_at(coeff(rng));
      c.back() = F->one();
      const Polynomial g(F, c);
      out.expect(factor(g, rng()) == sieve.trial_divide(g), field_label(*F) + ": " + render(g));
    }
  }
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "table reproduction", tables},
      {2, "Fibonacci j-th power sweep", fib_jpow_sweep},
      {3, "Fibonacci powerful and square sweeps", powerful_sweeps},
      {4, "no p-th powers for j = p", negative_sweeps},
      {5, "W/w parameter-grid sweeps", w_sweeps},
      {6, "Jacobsthal sweep", jacobsthal_sweep},
      {7, "sequence identities", identities},
      {8, "discriminant formulas", discriminants},
      {9, "factorization oracle", factor_oracle},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_pass = all_pass && o.pass;
    std::printf("%s criterion %d: %s (%llu checks, %.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                static_cast<unsigned long long>(o.checks), secs);
    for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
