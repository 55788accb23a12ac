#include <gtest/gtest.h>

#include "cyclokit/verify.hpp"

using namespace cyclokit;

namespace {

std::vector<std::string> collect(Suite s, std::int64_t max_n, unsigned jobs, SweepSummary* out = nullptr) {
  std::vector<std::string> lines;
  const auto sum = run_suite(s, max_n, jobs, [&](const IdentityReport& r) {
    lines.push_back(std::string(to_string(r.identity)) + "/" + r.variant + "/" + std::to_string(r.n) + "/" +
                    r.lhs.str() + "/" + r.rhs.str() + "/" + (r.pass ? "1" : "0"));
  });
  if (out) *out = sum;
  return lines;
}

}  // namespace

TEST(Suites, ParseNames) {
  EXPECT_EQ(parse_suite("ramanujan"), Suite::Ramanujan);
  EXPECT_EQ(parse_suite("all"), Suite::All);
  EXPECT_FALSE(parse_suite("everything").has_value());
}

TEST(Suites, AllPassToSixty) {
  for (Suite s : {Suite::Ramanujan, Suite::Symmetric, Suite::Coefficients}) {
    SweepSummary sum;
    const auto lines = collect(s, 60, 1, &sum);
    EXPECT_GT(sum.reports, 0) << to_string(s);
    EXPECT_EQ(sum.failures, 0) << to_string(s);
    EXPECT_EQ(static_cast<std::int64_t>(lines.size()), sum.reports);
  }
}

TEST(Suites, OutputIndependentOfJobs) {
  const auto one = collect(Suite::All, 70, 1);
  const auto four = collect(Suite::All, 70, 4);
  EXPECT_EQ(one, four);
}

TEST(Suites, ReportsOrderedByN) {
  std::int64_t last = 0;
  run_suite(Suite::Ramanujan, 100, 3, [&](const IdentityReport& r) {
    ASSERT_GE(r.n, last);
    last = r.n;
  });
  EXPECT_EQ(last, 100);
}

TEST(Suites, RejectsTinyRange) { EXPECT_THROW(run_suite(Suite::All, 1, 1, [](const IdentityReport&) {}), PreconditionError); }

TEST(Reports, ClosedFormSplitsAtN) {
  for (std::int64_t n = 2; n <= 12; ++n) EXPECT_TRUE(closed_form_range(n, 30, 0, n - 1).pass) << n;
  int red = 0;
  for (std::int64_t n = 2; n <= 12; ++n) red += !closed_form_range(n, 30, n, 3 * n).pass;
  EXPECT_GT(red, 0);
}

TEST(Reports, BinaryAndCross) {
  EXPECT_TRUE(binary_coefficients(3, 5, true).pass);
  EXPECT_TRUE(binary_coefficients(11, 13, true).pass);
  EXPECT_TRUE(binary_coefficients(101, 103, false).pass);
  for (std::int64_t n : {1, 2, 12, 30, 105, 210, 360}) EXPECT_TRUE(cross_algorithm(n).pass) << n;
}

TEST(Reports, CoefficientFormulas) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    EXPECT_TRUE(coefficient_bridge(n).pass) << n;
    EXPECT_TRUE(root_formula(n).pass) << n;
    EXPECT_TRUE(full_root_sum(n).pass) << n;
  }
}
