#include <gtest/gtest.h>

#include <sstream>

#include "cyclokit/bench.hpp"

using namespace cyclokit;

TEST(Bench, RecordShape) {
  BenchConfig cfg;
  cfg.degrees = {64};
  cfg.moduli = {6};
  cfg.trials = 10;
  const auto recs = run_bench(cfg);
  ASSERT_EQ(recs.size(), 20u);
  int coeff = 0;
  for (const auto& r : recs) {
    EXPECT_EQ(r.N, 6);
    EXPECT_EQ(r.degree, 64);
    EXPECT_GT(r.op_count, 0u);
    coeff += r.method == BenchMethod::CoeffSum;
  }
  EXPECT_EQ(coeff, 10);
  EXPECT_DOUBLE_EQ(verdict_agreement(recs), 1.0);
}

TEST(Bench, PlantedTrialsDivisible) {
  BenchConfig cfg;
  cfg.degrees = {40, 100};
  cfg.moduli = {12, 30};
  cfg.trials = 6;
  for (const auto& r : run_bench(cfg))
    if (r.trial % 2 == 0) EXPECT_TRUE(r.verdict) << r.N << " " << r.degree << " " << r.trial;
}

TEST(Bench, SkipsModuliAboveDegree) {
  BenchConfig cfg;
  cfg.degrees = {4};
  cfg.moduli = {6, 7};
  cfg.trials = 2;
  for (const auto& r : run_bench(cfg)) EXPECT_EQ(r.N, 6);
}

TEST(Bench, InputsReproducibleFromSeed) {
  BenchConfig a, b, c;
  b.seed = a.seed;
  c.seed = a.seed + 1;
  EXPECT_EQ(bench_input(a, 30, 200, 3), bench_input(b, 30, 200, 3));
  EXPECT_NE(bench_input(a, 30, 200, 3), bench_input(c, 30, 200, 3));
  EXPECT_NE(bench_input(a, 30, 200, 3), bench_input(a, 30, 200, 5));
  EXPECT_EQ(bench_input(a, 30, 200, 3).degree(), 200);
}

TEST(Bench, CsvHeaderAndRows) {
  BenchConfig cfg;
  cfg.degrees = {16};
  cfg.moduli = {6};
  cfg.trials = 2;
  std::ostringstream os;
  write_csv(os, run_bench(cfg));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "method,N,degree,trial,ns_elapsed,op_count,verdict");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

TEST(Bench, DegreeGrid) {
  const auto g = degree_grid(512, 16);
  EXPECT_EQ(g.back(), 512);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_LE(g.size(), 16u);
}

TEST(Bench, LinearFitExact) {
  const auto f = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.intercept, 1.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
}

TEST(Bench, OpCountLinearInDegree) {
  BenchConfig cfg;
  cfg.degrees = degree_grid(600, 10);
  cfg.moduli = {30};
  cfg.trials = 2;
  const auto fit = op_count_fit(run_bench(cfg), 30);
  EXPECT_GT(fit.r_squared, 0.999);
  EXPECT_GT(fit.slope, 0.0);
}
