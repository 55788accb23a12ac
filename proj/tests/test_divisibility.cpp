#include <gtest/gtest.h>

#include <random>

#include "cyclokit/cyclotomic.hpp"
#include "cyclokit/divisibility.hpp"

using namespace cyclokit;

namespace {

IntPoly random_poly(std::mt19937_64& rng, std::int64_t degree) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<BigInt> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

bool divides_by_division(const IntPoly& P, const IntPoly& D) { return divmod(P, D).remainder.is_zero(); }

}  // namespace

TEST(Cyclotomic, Examples) {
  const auto r = divides_cyclotomic(IntPoly{-1, 0, 0, 0, 0, 0, 1}, 6);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.h_range_used(), (std::vector<std::int64_t>{0, 1, 2}));

  const auto f = divides_cyclotomic(IntPoly{1, 0, 1}, 2);
  EXPECT_FALSE(f.verdict);
  ASSERT_EQ(f.witnesses.size(), 1u);
  EXPECT_EQ(f.witnesses[0].sum, 2);

  EXPECT_TRUE(divides_cyclotomic(IntPoly{1, 0, 1}, 4).verdict);
  EXPECT_THROW(divides_cyclotomic(IntPoly{1, 1}, 5), PreconditionError);
  EXPECT_THROW(divides_cyclotomic(IntPoly{1, 1}, 0), PreconditionError);
}

TEST(Cyclotomic, SelfDivisibility) {
  for (std::int64_t N = 1; N <= 1000; ++N) {
    const auto phi = phi_mobius(N).poly;
    ASSERT_TRUE(divides_cyclotomic(phi, N).verdict) << N;
    ASSERT_TRUE(divides_cyclotomic(phi * IntPoly{2, -3, 1}, N).verdict) << N;
    ASSERT_FALSE(divides_cyclotomic(phi + IntPoly{1}, N).verdict) << N;
  }
}

TEST(Cyclotomic, RandomAgreesWithDivision) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 3000; ++t) {
    const std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 60);
    const auto phi = phi_mobius(N).poly;
    const std::int64_t deg = totient(N) + static_cast<std::int64_t>(rng() % 80);
    IntPoly P = t % 2 ? random_poly(rng, deg)
                      : phi * random_poly(rng, deg - totient(N));
    const bool expect = divides_by_division(P, phi);
    for (bool fast : {true, false})
      for (bool full : {true, false}) {
        const auto r = divides_cyclotomic(P, N, {fast, full});
        ASSERT_EQ(r.verdict, expect) << N << " " << deg;
        ASSERT_EQ(r.path, fast && deg < N ? SumPath::SingleRepresentative : SumPath::ResidueClasses);
        ASSERT_EQ(static_cast<std::int64_t>(r.witnesses.size()), N % 2 == 0 && !full ? N / 2 : N);
      }
  }
}

TEST(Cyclotomic, HalfRangeSufficesForEvenN) {
  // witnesses past N/2 are negatives of earlier ones when N is even
  std::mt19937_64 rng(29);
  for (int t = 0; t < 300; ++t) {
    const std::int64_t N = 2 * (1 + static_cast<std::int64_t>(rng() % 30));
    const auto P = random_poly(rng, totient(N) + static_cast<std::int64_t>(rng() % 50));
    const auto full = divides_cyclotomic(P, N, {true, true});
    for (std::int64_t h = 0; h < N / 2; ++h)
      ASSERT_EQ(full.witnesses[static_cast<std::size_t>(h + N / 2)].sum, -full.witnesses[static_cast<std::size_t>(h)].sum);
  }
}

TEST(ZnMinus1, Examples) {
  EXPECT_TRUE(divides_zn_minus_1(IntPoly{-1, 0, 0, 1}, 3).verdict);
  EXPECT_TRUE(divides_zn_minus_1(IntPoly{-1, 0, 0, 1}, 1).verdict);
  EXPECT_FALSE(divides_zn_minus_1(IntPoly{-1, 0, 0, 1}, 2).verdict);
  EXPECT_THROW(divides_zn_minus_1(IntPoly{-1, 1}, 2), PreconditionError);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 20);
    IntPoly P = random_poly(rng, n + static_cast<std::int64_t>(rng() % 40));
    if (t % 2) P = zn_minus_one(static_cast<std::size_t>(n)) * random_poly(rng, static_cast<std::int64_t>(rng() % 30));
    ASSERT_EQ(divides_zn_minus_1(P, n).verdict, divides_by_division(P, zn_minus_one(static_cast<std::size_t>(n))));
  }
}

TEST(PhiPZs, Examples) {
  EXPECT_TRUE(divides_phi_p_zs(IntPoly{1, 1}, 2, 1).verdict);
  EXPECT_FALSE(divides_phi_p_zs(IntPoly{1, 0, 1}, 2, 1).verdict);
  EXPECT_THROW(divides_phi_p_zs(IntPoly{1, 1}, 4, 1), PreconditionError);
  EXPECT_THROW(divides_phi_p_zs(IntPoly{1, 1}, 2, 0), PreconditionError);
}

TEST(PhiPZs, RandomAgreesWithDivision) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 2000; ++t) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[rng() % 4];
    const std::int64_t s = 1 + static_cast<std::int64_t>(rng() % 6);
    const auto D = substitute_power(phi_mobius(p).poly, static_cast<std::size_t>(s));
    const std::int64_t deg = D.degree() + static_cast<std::int64_t>(rng() % 40);
    IntPoly P = t % 2 ? random_poly(rng, deg) : D * random_poly(rng, deg - D.degree());
    ASSERT_EQ(divides_phi_p_zs(P, p, s).verdict, divides_by_division(P, D)) << p << " " << s;
  }
}

TEST(ZnMinusEta, NumericExamples) {
  // (z^2 - i)(z + 3) = z^3 + 3z^2 - iz - 3i
  const ComplexPoly P{Complex(0, -3), Complex(0, -1), 3.0, 1.0};
  EXPECT_TRUE(divides_zn_minus_eta(P, 2, Complex(0, 1)).verdict);
  EXPECT_FALSE(divides_zn_minus_eta(P, 2, Complex(0, -1)).verdict);
  EXPECT_THROW(divides_zn_minus_eta(P, 2, Complex{}), PreconditionError);
  // z^4 - 16 = (z^2 - 4)(z^2 + 4)
  const IntPoly Q{-16, 0, 0, 0, 1};
  EXPECT_TRUE(divides_zn_minus_eta(Q, 2, Complex(4, 0)).verdict);
  EXPECT_TRUE(divides_zn_minus_eta(Q, 2, Complex(-4, 0)).verdict);
  EXPECT_FALSE(divides_zn_minus_eta(Q, 2, Complex(3, 0)).verdict);
  EXPECT_TRUE(divides_zn_minus_eta(Q, 4, Complex(16, 0)).verdict);
}

TEST(ZnMinusEta, ExactAgreesWithNumeric) {
  std::mt19937_64 rng(41);
  int divisible = 0;
  for (int t = 0; t < 600; ++t) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 4);
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 6);
    const std::int64_t j = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k));
    // z^{nk} - 1 = prod over eta of (z^n - eta) as eta runs over k-th roots
    IntPoly P = random_poly(rng, n + static_cast<std::int64_t>(rng() % 20));
    if (t % 2) P = zn_minus_one(static_cast<std::size_t>(n * k)) * random_poly(rng, static_cast<std::int64_t>(rng() % 10));
    const auto exact = divides_zn_minus_eta(P, n, RootOfUnity{k, j});
    const auto numeric = divides_zn_minus_eta(P, n, root_of_unity(k, j));
    ASSERT_TRUE(exact.exact);
    ASSERT_FALSE(numeric.exact);
    ASSERT_EQ(exact.verdict, numeric.verdict) << n << " " << k << " " << j;
    divisible += exact.verdict;
  }
  EXPECT_GT(divisible, 250);
}

TEST(ZnMinusEta, ExactRecognizesCyclotomicFactor) {
  // z^4 - z^2 + 1 = (z^2 - zeta_6)(z^2 - zeta_6^5)
  const IntPoly phi12 = phi_mobius(12).poly;
  EXPECT_TRUE(divides_zn_minus_eta(phi12, 2, RootOfUnity{6, 1}).verdict);
  EXPECT_TRUE(divides_zn_minus_eta(phi12, 2, RootOfUnity{6, 5}).verdict);
  EXPECT_FALSE(divides_zn_minus_eta(phi12, 2, RootOfUnity{3, 1}).verdict);
  EXPECT_FALSE(divides_zn_minus_eta(phi12, 2, RootOfUnity{6, 3}).verdict);
}
