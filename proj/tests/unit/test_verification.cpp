#include <gtest/gtest.h>

#include "json.hpp"
#include "schreier/verification.hpp"

using namespace schreier;

namespace {

VerifyOptions with_fault(Fault fault) {
  VerifyOptions options;
  options.predicate = fault_predicate(fault);
  return options;
}

}  // namespace

TEST(VerifyTheorem1, Examples) {
  const auto r = verify_theorem1(20);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_run, 20U);
  EXPECT_FALSE(r.first_counterexample.has_value());
  EXPECT_TRUE(verify_theorem1(1).passed());
}

TEST(VerifyTheorem1, BrokenPredicateFailsAtSmallestN) {
  const auto r = verify_theorem1(12, with_fault(Fault::StrictSchreier));
  ASSERT_FALSE(r.passed());
  ASSERT_TRUE(r.first_counterexample);
  const auto& cx = *r.first_counterexample;
  // {2,3} is the first set that needs min A == |A|.
  EXPECT_EQ(cx.n, 3U);
  EXPECT_EQ(cx.expected, "2");
  EXPECT_EQ(cx.actual, "1");
  ASSERT_TRUE(cx.witness);
  EXPECT_EQ(*cx.witness, FinSet({2, 3}));
  EXPECT_EQ(r.cases_run, 3U);
}

TEST(VerifyTheorem1, Errors) {
  EXPECT_THROW((void)verify_theorem1(0), Error);
  try {
    (void)verify_theorem1(31);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LimitExceeded);
  }
}

TEST(VerifyCorollary, Examples) {
  EXPECT_TRUE(verify_corollary(15).passed());
  const auto one = verify_corollary(1);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.cases_run, 1U);
}

TEST(VerifyCorollary, DroppedSingletonsFailAtOne) {
  const auto r = verify_corollary(10, with_fault(Fault::DropSingletons));
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_counterexample->n, 1U);
  EXPECT_EQ(r.first_counterexample->expected, "2");
  EXPECT_EQ(r.first_counterexample->actual, "1");
  EXPECT_EQ(r.first_counterexample->witness, FinSet({1}));
}

TEST(VerifyTheorem2, Examples) {
  EXPECT_TRUE(verify_theorem2(1, 2, 16).passed());
  EXPECT_TRUE(verify_theorem2(2, 3, 14).passed());
  const auto r = verify_theorem2(3, 4, 12);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_run, 12U);
  EXPECT_NE(r.parameter_ranges.find("base=1..8"), std::string::npos);
}

TEST(VerifyTheorem2, InvalidParameters) {
  try {
    (void)verify_theorem2(0, 3, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  EXPECT_THROW((void)verify_theorem2(1, 1, 10), Error);
}

TEST(VerifyTheorem2, GapFaultFailsWithWitness) {
  const auto r = verify_theorem2(1, 3, 12, with_fault(Fault::GapOffByOne));
  ASSERT_FALSE(r.passed());
  const auto& cx = *r.first_counterexample;
  // With gap 2 the first nonempty member is {3,4,6}; the true first new
  // member is {3,4,5} at n = 5.
  EXPECT_EQ(cx.n, 5U);
  ASSERT_TRUE(cx.witness);
  EXPECT_EQ(*cx.witness, FinSet({3, 4, 5}));
}

TEST(VerifyTheorem2, LowerBoundFaultFails) {
  const auto r = verify_theorem2(2, 3, 12, with_fault(Fault::IgnoreLowerBound));
  ASSERT_FALSE(r.passed());
  const auto& cx = *r.first_counterexample;
  // {2,4} is the first size-2 set with gap 2.
  EXPECT_EQ(cx.n, 4U);
  EXPECT_EQ(cx.witness, FinSet({2, 4}));
}

TEST(VerifyBijections, Examples) {
  const auto r = verify_bijections(1, 2, 14);
  EXPECT_TRUE(r.passed()) << to_text(r);
  // thm1 n = 2..14 and thm2 n = 3..14.
  EXPECT_EQ(r.cases_run, 13U + 12U);
  EXPECT_TRUE(verify_bijections(1, 3, 12).passed());
  EXPECT_TRUE(verify_bijections(2, 2, 12).passed());
}

TEST(VerifyBijections, TruncatesThm1AtCap) {
  VerifyOptions options;
  options.cap = 10;
  const auto r = verify_bijections(1, 2, 10, options);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(r.parameter_ranges.find("thm1 n=2..9"), std::string::npos) << r.parameter_ranges;
  EXPECT_THROW((void)verify_bijections(1, 2, 1), Error);
}

TEST(VerifyBijections, BrokenPredicateIsCaught) {
  const auto r = verify_bijections(1, 3, 10, with_fault(Fault::StrictSchreier));
  ASSERT_FALSE(r.passed());
  ASSERT_TRUE(r.first_counterexample);
  EXPECT_TRUE(r.first_counterexample->witness.has_value());
  const auto g = verify_bijections(2, 3, 12, with_fault(Fault::IgnoreLowerBound));
  ASSERT_FALSE(g.passed());
  EXPECT_TRUE(g.first_counterexample->witness.has_value());
}

TEST(Reports, DeterministicAndReproducible) {
  const auto a = verify_theorem2(1, 3, 12, with_fault(Fault::GapOffByOne));
  const auto b = verify_theorem2(1, 3, 12, with_fault(Fault::GapOffByOne));
  EXPECT_EQ(to_text(a), to_text(b));
  EXPECT_EQ(to_json(a), to_json(b));
  // Rerunning at exactly the reported instance reproduces the failure.
  const auto& cx = *a.first_counterexample;
  const auto again = verify_theorem2(cx.p, cx.q, cx.n, with_fault(Fault::GapOffByOne));
  EXPECT_FALSE(again.passed());
  EXPECT_EQ(again.first_counterexample->n, cx.n);
  EXPECT_EQ(again.first_counterexample->witness, cx.witness);
}

TEST(Reports, TextForm) {
  EXPECT_EQ(to_text(verify_theorem1(3)),
            "check: theorem1\nranges: n=1..3\ncases: 3\nstatus: PASS\n\n");
  const std::string fail = to_text(verify_theorem1(5, with_fault(Fault::StrictSchreier)));
  EXPECT_NE(fail.find("status: FAIL\n"), std::string::npos);
  EXPECT_NE(fail.find("counterexample: n=3\n"), std::string::npos);
  EXPECT_NE(fail.find("witness: {2,3}\n"), std::string::npos);
  EXPECT_NE(fail.find("expected: 2\nactual: 1\n"), std::string::npos);
}

TEST(Reports, JsonForm) {
  const auto j = nlohmann::json::parse(
      to_json(verify_theorem2(1, 3, 12, with_fault(Fault::GapOffByOne))));
  EXPECT_EQ(j["check"], "theorem2");
  EXPECT_EQ(j["status"], "FAIL");
  EXPECT_EQ(j["counterexample"]["n"], 5);
  EXPECT_EQ(j["counterexample"]["p"], 1);
  EXPECT_EQ(j["counterexample"]["witness"], (std::vector<int>{3, 4, 5}));
  const auto ok = nlohmann::json::parse(to_json(verify_corollary(4)));
  EXPECT_EQ(ok["status"], "PASS");
  EXPECT_EQ(ok["cases"], 4);
  EXPECT_FALSE(ok.contains("counterexample"));
}

TEST(Faults, ParseNames) {
  EXPECT_EQ(parse_fault("strict-schreier"), Fault::StrictSchreier);
  EXPECT_EQ(parse_fault("none"), Fault::None);
  EXPECT_FALSE(fault_predicate(Fault::None));
  EXPECT_THROW((void)parse_fault("bogus"), Error);
}
