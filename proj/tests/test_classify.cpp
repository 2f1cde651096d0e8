#include <cstdint>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace fibpow;

namespace {

std::vector<std::uint64_t> positives_of(const VerificationReport& r) { return r.positives(); }

std::vector<std::uint64_t> predicted_in(const TheoremCase& c) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = c.n_min; n <= c.n_max; ++n) {
    if (predict(c, n)) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(3, 4), 2u);
  EXPECT_EQ(mult_order(2, 3), 2u);
  EXPECT_EQ(mult_order(7, 1), 1u);
  EXPECT_EQ(mult_order(3, 10), 4u);
  EXPECT_EQ(mult_order(2, 7), 3u);
  EXPECT_ERROR_KIND(mult_order(3, 6), ErrorKind::NotCoprime);
  EXPECT_ERROR_KIND(mult_order(2, 4), ErrorKind::NotCoprime);
}

TEST(MultOrder, MatchesBruteForce) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t m = 2; m <= 60; ++m) {
      if (std::gcd(p, m) != 1) continue;
      std::uint64_t a = 1, x = p % m;
      while (x != 1) {
        x = x * p % m;
        ++a;
      }
      EXPECT_EQ(mult_order(p, m), a) << p << " mod " << m;
    }
  }
}

TEST(TheoremNames, RoundTrip) {
  for (TheoremId id : kAllTheorems) EXPECT_EQ(parse_theorem(theorem_name(id)), id);
  EXPECT_EQ(parse_theorem("FIB_JPOW"), TheoremId::FibJpow);
  EXPECT_ERROR_KIND(parse_theorem("fib-cube"), ErrorKind::Usage);
}

TEST(Predict, WorkedExamples) {
  const FieldPtr F2 = make_field(2), F3 = make_field(3);
  const TheoremCase c = make_case(TheoremId::FibJpow, F3, 2, 1, 100);
  EXPECT_TRUE(predict(c, 9));
  EXPECT_FALSE(predict(c, 3));
  EXPECT_TRUE(predict(c, 1));
  EXPECT_TRUE(predict(c, 81));
  EXPECT_FALSE(predict(c, 27));
  const TheoremCase p2 = make_case(TheoremId::FibPowerfulP2, F2, std::nullopt, 1, 20);
  EXPECT_FALSE(predict(p2, 6));
  EXPECT_FALSE(predict(p2, 2));
  EXPECT_TRUE(predict(p2, 8));
  EXPECT_TRUE(predict(p2, 3));
  const TheoremCase jac = make_case(TheoremId::JacJpow, F3, 2, 3, 30);
  EXPECT_EQ(predicted_in(jac), (std::vector<std::uint64_t>{9, 18}));
  EXPECT_TRUE(predict(make_case(TheoremId::FibNopow, F3, 3, 1, 10), 1));
  EXPECT_FALSE(predict(make_case(TheoremId::FibNopow, F3, 3, 1, 10), 9));
}

TEST(Predict, HypothesisViolations) {
  const FieldPtr F2 = make_field(2), F3 = make_field(3), F5 = make_field(5);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibJpow, F3, 3, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibJpow, F5, 5, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibJpow, F2, 3, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibJpow, F5, std::nullopt, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibJpowP2, F2, 4, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibNopow, F5, 2, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibPowerful, F3, std::nullopt, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibPowerfulP3, F5, std::nullopt, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibSqP2, F3, std::nullopt, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibPowerful, F5, 2, 1, 10), 1), ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::FibPowerful, F5, std::nullopt, 5, 4), 5), ErrorKind::HypothesisViolated);
  // W theorems are stated for deg f = 1, deg g = 0 with g in the prime field in characteristic 2.
  const TheoremCase jac_like = make_case(TheoremId::WJpow, F5, 2, 1, 10, HoradamParams::make(F5, 1, 0, 2, 1));
  EXPECT_ERROR_KIND(predict(jac_like, 1), ErrorKind::HypothesisViolated);
  const FieldPtr F4 = make_field(2, 2);
  const HoradamParams g_outside{Monomial{FieldElement::from_int(F4, 1), 1}, Monomial{FieldElement(F4, F4->generator()), 0}};
  EXPECT_ERROR_KIND(predict(make_case(TheoremId::WPowerfulP2, F4, std::nullopt, 1, 10, g_outside), 1),
                    ErrorKind::HypothesisViolated);
  EXPECT_ERROR_KIND(verify(make_case(TheoremId::FibJpow, F3, 3, 1, 10)), ErrorKind::HypothesisViolated);
}

TEST(Verify, WorkedExamples) {
  const FieldPtr F2 = make_field(2), F3 = make_field(3);
  const VerificationReport a = verify(make_case(TheoremId::FibJpow, F3, 2, 1, 100));
  EXPECT_EQ(a.status, ReportStatus::Pass);
  EXPECT_EQ(positives_of(a), (std::vector<std::uint64_t>{1, 9, 81}));
  EXPECT_EQ(a.rows.size(), 100u);
  EXPECT_TRUE(a.mismatches.empty());
  EXPECT_TRUE(a.witnesses.empty());

  const VerificationReport b = verify(make_case(TheoremId::FibSqP2, F2, std::nullopt, 1, 20));
  EXPECT_EQ(b.status, ReportStatus::Pass);
  EXPECT_EQ(positives_of(b), (std::vector<std::uint64_t>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19}));

  const VerificationReport c = verify(make_case(TheoremId::JacJpow, F3, 2, 3, 30));
  EXPECT_EQ(c.status, ReportStatus::Pass);
  EXPECT_EQ(positives_of(c), (std::vector<std::uint64_t>{9, 18}));

  const VerificationReport d = verify(make_case(TheoremId::FibPowerful, make_field(5), std::nullopt, 1, 50));
  EXPECT_EQ(d.status, ReportStatus::Pass);
  std::vector<std::uint64_t> mult5{1};
  for (std::uint64_t n = 5; n <= 50; n += 5) mult5.push_back(n);
  EXPECT_EQ(positives_of(d), mult5);
}

TEST(Verify, WitnessBeyondRange) {
  // p = 3, j = 5: a = ord_10(3) = 4, so the first nontrivial positive is 81.
  const VerificationReport r = verify(make_case(TheoremId::FibJpow, make_field(3), 5, 1, 60));
  EXPECT_EQ(r.status, ReportStatus::Pass);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], (ReportRow{81, true, true}));
  EXPECT_EQ(positives_of(r), (std::vector<std::uint64_t>{1, 81}));

  // A witness over the degree cap is recorded as skipped instead.
  TheoremCase capped = make_case(TheoremId::FibJpow, make_field(3), 5, 1, 60);
  capped.degree_cap = 50;
  const VerificationReport s = verify(capped);
  EXPECT_TRUE(s.witnesses.empty());
  EXPECT_EQ(s.rows.size(), 51u);
  EXPECT_EQ(s.skipped.front(), 52u);
  EXPECT_EQ(s.skipped.back(), 81u);
}

TEST(Verify, FibonacciTheoremsSmallRanges) {
  struct Row {
    TheoremId id;
    std::uint64_t p;
    unsigned e;
    std::optional<std::uint64_t> j;
  };
  for (const Row& s : std::vector<Row>{{TheoremId::FibJpow, 5, 1, 2},        {TheoremId::FibJpow, 7, 1, 3},
                                         {TheoremId::FibJpow, 5, 2, 3},        {TheoremId::FibJpowP2, 2, 1, 3},
                                         {TheoremId::FibJpowP2, 2, 2, 5},      {TheoremId::FibSqP2, 2, 2, std::nullopt},
                                         {TheoremId::FibNopow, 3, 1, 3},       {TheoremId::FibNopow, 5, 1, 5},
                                         {TheoremId::FibPowerful, 7, 1, {}},   {TheoremId::FibPowerfulP3, 3, 1, {}},
                                         {TheoremId::FibPowerfulP2, 2, 1, {}}, {TheoremId::FibPowerfulP2, 2, 2, {}},
                                         {TheoremId::JacPowerful, 3, 1, {}},   {TheoremId::JacPowerful, 5, 1, {}},
                                         {TheoremId::JacJpow, 5, 1, 3}}) {
    const VerificationReport r = verify(make_case(s.id, make_field(s.p, s.e), s.j, 1, 80));
    EXPECT_EQ(r.status, ReportStatus::Pass) << theorem_name(s.id) << " p=" << s.p << " e=" << s.e;
    EXPECT_TRUE(r.mismatches.empty());
  }
}

TEST(Verify, WTheoremsOverGrid) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const FieldPtr F = make_field(p);
    ProfileCache cache;
    std::vector<std::pair<TheoremId, std::optional<std::uint64_t>>> cases;
    if (p == 2) {
      cases = {{TheoremId::WJpowP2, 3}, {TheoremId::WPowerfulP2, {}}};
    } else {
      cases = {{TheoremId::WJpow, p == 3 ? 2 : 3}, {TheoremId::WNopow, p}, {TheoremId::WlowPow, {}}};
      cases.push_back(p == 3 ? std::make_pair(TheoremId::WPowerfulP3, std::optional<std::uint64_t>{})
                             : std::make_pair(TheoremId::WPowerful, std::optional<std::uint64_t>{}));
    }
    for (const HoradamParams& h : w_param_grid(F)) {
      for (auto [id, j] : cases) {
        const VerificationReport r = verify(make_case(id, F, j, 1, 60, h), cache);
        EXPECT_EQ(r.status, ReportStatus::Pass) << theorem_name(id) << " p=" << p << " f=" << render(h.f());
      }
    }
  }
}

TEST(Verify, GridShape) {
  EXPECT_EQ(w_param_grid(make_field(2)).size(), 1u);
  EXPECT_EQ(w_param_grid(make_field(3)).size(), 4u);
  EXPECT_EQ(w_param_grid(make_field(7)).size(), 16u);
  for (const HoradamParams& h : w_param_grid(make_field(5))) {
    EXPECT_EQ(h.f().degree, 1u);
    EXPECT_EQ(h.g().degree, 0u);
  }
}

// The characterization depends only on p, so F_p and F_{p^2} must agree.
TEST(Verify, PrimeFieldAndQuadraticExtensionAgree) {
  for (auto [p, j] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 2}, {5, 2}, {5, 3}, {7, 2}, {7, 4}}) {
    const TheoremCase cp = make_case(TheoremId::FibJpow, make_field(p), j, 1, 60);
    const TheoremCase cq = make_case(TheoremId::FibJpow, make_field(p, 2), j, 1, 60);
    EXPECT_EQ(predicted_in(cp), predicted_in(cq));
    const VerificationReport rp = verify(cp), rq = verify(cq);
    std::vector<bool> computed_p, computed_q;
    for (const ReportRow& r : rp.rows) computed_p.push_back(r.computed);
    for (const ReportRow& r : rq.rows) computed_q.push_back(r.computed);
    EXPECT_EQ(computed_p, computed_q) << "p=" << p << " j=" << j;
  }
}

TEST(Verify, ExploratoryModeReportsWithoutVerdict) {
  const FieldPtr F5 = make_field(5);
  TheoremCase c = make_case(TheoremId::WJpow, F5, 2, 1, 40, HoradamParams::make(F5, 1, 0, 2, 1));
  EXPECT_ERROR_KIND(verify(c), ErrorKind::HypothesisViolated);
  c.exploratory = true;
  const VerificationReport r = verify(c);
  EXPECT_EQ(r.status, ReportStatus::Exploratory);
  EXPECT_EQ(r.rows.size(), 40u);
  EXPECT_EQ(status_name(r.status), "exploratory");
}

TEST(Verify, DeterministicAndJsonStable) {
  const TheoremCase c = make_case(TheoremId::FibPowerful, make_field(5), std::nullopt, 1, 30);
  const std::string a = to_json(verify(c)).dump(), b = to_json(verify(c)).dump();
  EXPECT_EQ(a, b);
  const Json doc = Json::parse(a);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"theorem", "p", "e", "j", "params", "range", "degree_cap", "rows",
                                            "witnesses", "mismatches", "skipped", "status", "positives"}));
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["rows"].size(), 30u);
  EXPECT_EQ(doc["rows"][4]["n"], 5);
  EXPECT_EQ(doc["rows"][4]["predicted"], true);
  EXPECT_TRUE(doc["j"].is_null());
}

TEST(Verify, DegreeBound) {
  const FieldPtr F5 = make_field(5);
  for (const HoradamParams& h : {family_params(Family::Fibonacci, F5), family_params(Family::Jacobsthal, F5),
                                 HoradamParams::make(F5, 3, 0, 2, 0)}) {
    for (SequenceKind kind : {SequenceKind::W, SequenceKind::w}) {
      HoradamSequence seq(h, kind);
      for (std::uint64_t n = 0; n <= 60; ++n) {
        const Polynomial& x = seq.at(n);
        if (!x.is_zero()) {
          EXPECT_LE(static_cast<std::uint64_t>(x.degree()), member_degree_bound(h, kind, n));
        }
      }
    }
  }
}
