#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "cyclokit/cyclotomic.hpp"
#include "cyclokit/symmetric.hpp"

using namespace cyclokit;

namespace {

/// Sums every monomial of degree r in v; exponential, tiny inputs only.
Complex h_by_monomials(const std::vector<Complex>& v, std::size_t r) {
  Complex total{};
  std::function<void(std::size_t, std::size_t, Complex)> rec = [&](std::size_t i, std::size_t left, Complex acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    if (i == v.size()) return;
    rec(i, left - 1, acc * v[i]);
    rec(i + 1, left, acc);
  };
  rec(0, r, 1.0);
  return total;
}

Complex e_by_subsets(const std::vector<Complex>& v, std::size_t k) {
  Complex total{};
  for (std::uint32_t mask = 0; mask < (1u << v.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Complex acc = 1.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask >> i & 1u) acc *= v[i];
    total += acc;
  }
  return total;
}

std::vector<Complex> random_unit_vector(std::mt19937_64& rng, std::size_t len) {
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  std::vector<Complex> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(rng() % 5 == 0 ? Complex{} : std::polar(1.0, ang(rng)));
  return v;
}

RootVector prefix(std::int64_t n, std::int64_t k) {
  std::vector<Complex> v;
  for (std::int64_t j = 0; j <= k; ++j) v.push_back(root_of_unity(n, j));
  return RootVector(std::move(v));
}

}  // namespace

TEST(Tables, MatchMonomialEnumeration) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto v = random_unit_vector(rng, 1 + rng() % 7);
    const auto h = h_table(v, 6);
    const auto e = e_table(v, v.size());
    for (std::size_t r = 0; r <= 6; ++r) ASSERT_LT(std::abs(h[r] - h_by_monomials(v, r)), 1e-10);
    for (std::size_t k = 0; k <= v.size(); ++k) ASSERT_LT(std::abs(e[k] - e_by_subsets(v, k)), 1e-10);
  }
}

TEST(Tables, GeneratingFunctionsAreInverse) {
  // sum_i (-1)^i E_i H_{k-i} = 0 for k >= 1
  std::mt19937_64 rng(19);
  for (int t = 0; t < 40; ++t) {
    const RootVector v(random_unit_vector(rng, 2 + rng() % 20));
    const std::size_t K = 30;
    const auto h = h_table(v, K);
    const auto e = e_table(v, K);
    for (std::size_t k = 1; k <= K; ++k) {
      Complex acc{};
      for (std::size_t i = 0; i <= k; ++i) acc += (i % 2 ? -1.0 : 1.0) * e[i] * h[k - i];
      ASSERT_LT(std::abs(acc), 1e-9) << k;
    }
  }
}

TEST(Tables, FullRootVectors) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    const auto v = RootVector::all(n);
    const auto h = h_table(v, static_cast<std::size_t>(3 * n));
    const auto e = e_table(v, static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k <= 3 * n; ++k)
      ASSERT_LT(std::abs(h[static_cast<std::size_t>(k)] - (k % n == 0 ? 1.0 : 0.0)), 1e-9) << n << " " << k;
    for (std::int64_t k = 1; k < n; ++k) ASSERT_LT(std::abs(e[static_cast<std::size_t>(k)]), 1e-9);
    ASSERT_LT(std::abs(e[static_cast<std::size_t>(n)] - (n % 2 ? 1.0 : -1.0)), 1e-9);
  }
}

TEST(Tables, PrimitiveAndNonprimitiveSplit) {
  // H over the concatenation is the convolution of the parts
  for (std::int64_t n = 2; n <= 30; ++n) {
    const auto p = h_table(RootVector::primitive(n), 20);
    const auto q = h_table(RootVector::nonprimitive(n), 20);
    const auto all = h_table(RootVector::concat(RootVector::primitive(n), RootVector::nonprimitive(n)), 20);
    for (std::size_t k = 0; k <= 20; ++k) {
      Complex conv{};
      for (std::size_t i = 0; i <= k; ++i) conv += p[i] * q[k - i];
      ASSERT_LT(std::abs(conv - all[k]), 1e-9);
      ASSERT_LT(std::abs(all[k] - (k % static_cast<std::size_t>(n) == 0 ? 1.0 : 0.0)), 1e-9);
    }
    // E over primitive roots are Phi_n's coefficients up to sign
    const auto e = e_table(RootVector::primitive(n), static_cast<std::size_t>(totient(n)));
    const auto phi_n = phi_mobius(n);
    for (std::int64_t k = 0; k <= totient(n); ++k) {
      const double expect = (k % 2 ? -1.0 : 1.0) * detail::to_double(phi_n.a(k));
      ASSERT_LT(std::abs(e[static_cast<std::size_t>(k)] - expect), 1e-9) << n << " " << k;
    }
  }
}

TEST(Tables, PaddingDoesNotContribute) {
  const std::vector<Complex> v{root_of_unity(5, 1), root_of_unity(5, 3)};
  auto padded = v;
  padded.insert(padded.begin() + 1, Complex{});
  padded.push_back(Complex{});
  const auto a = h_table(v, 10), b = h_table(padded, 10);
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_LT(std::abs(a[k] - b[k]), 1e-12);
  EXPECT_THROW(RootVector({Complex(2.0, 0.0)}), PreconditionError);
}

TEST(ClosedForm, AgreesBelowN) {
  for (std::int64_t n = 2; n <= 16; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      const auto h = h_table(prefix(n, k), 40);
      for (std::int64_t m = 0; m <= 40; ++m)
        ASSERT_LT(std::abs(h_closed_form(n, k, m) - h[static_cast<std::size_t>(m)]), 1e-8) << n << " " << k << " " << m;
    }
  }
}

TEST(ClosedForm, FailsSomewhereAtOrAboveN) {
  // the product formula is not valid once the vector wraps past a full period
  int mismatches = 0;
  for (std::int64_t n = 2; n <= 8; ++n)
    for (std::int64_t k = n; k <= 2 * n; ++k) {
      const auto h = h_table(prefix(n, k), 12);
      for (std::int64_t m = 0; m <= 12; ++m)
        mismatches += std::abs(h_closed_form(n, k, m) - h[static_cast<std::size_t>(m)]) > 1e-6;
    }
  EXPECT_GT(mismatches, 0);
  EXPECT_THROW(h_closed_form(1, 0, 0), PreconditionError);
}

TEST(VietaTail, Examples) {
  const IntPoly p{-1, 0, 1};  // z^2 - 1
  const std::vector<Complex> one{1.0};
  const auto c = vieta_tail_coeffs(p, one);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_LT(std::abs(c[0] - 1.0), 1e-12);
  EXPECT_LT(std::abs(c[1] - 1.0), 1e-12);

  const std::vector<Complex> two{2.0};
  EXPECT_THROW(vieta_tail_coeffs(p, two), NotARoot);

  // z^6 - 1 over its primitive sixth roots leaves Psi_6
  const auto prim = RootVector::primitive(6);
  std::vector<Complex> roots;
  for (auto z : prim.entries())
    if (z != Complex{}) roots.push_back(z);
  const auto tail = vieta_tail_coeffs(zn_minus_one(6), roots);
  const auto psi6 = psi(6).poly.descending();
  ASSERT_EQ(tail.size(), psi6.size());
  for (std::size_t i = 0; i < tail.size(); ++i) EXPECT_LT(std::abs(tail[i] - detail::to_double(psi6[i])), 1e-9);
}

TEST(VietaTail, ReproducesCyclotomicQuotients) {
  for (std::int64_t n = 2; n <= 40; ++n) {
    std::vector<Complex> roots;
    for (std::int64_t j = 1; j < n; ++j) roots.push_back(root_of_unity(n, j));
    // (z^n - 1) / prod over j != 0 of (z - zeta^j) = z - 1
    const auto c = vieta_tail_coeffs(zn_minus_one(static_cast<std::size_t>(n)), roots);
    ASSERT_EQ(c.size(), 2u);
    ASSERT_LT(std::abs(c[0] - 1.0), 1e-8);
    ASSERT_LT(std::abs(c[1] + 1.0), 1e-8);
  }
}

TEST(Binary, Examples) {
  // Phi_15 = z^8 - z^7 + z^5 - z^4 + z^3 - z + 1
  const std::vector<int> phi15{1, -1, 0, 1, -1, 1, 0, -1, 1};
  for (std::int64_t k = 0; k <= 8; ++k) EXPECT_EQ(binary_coeff(3, 5, k), phi15[static_cast<std::size_t>(k)]) << k;
  EXPECT_THROW(binary_coeff(3, 3, 0), PreconditionError);
  EXPECT_THROW(binary_coeff(4, 5, 0), PreconditionError);
  EXPECT_THROW(binary_coeff(3, 5, 9), PreconditionError);
  EXPECT_EQ(binary_h(3, 5, -1), 0);
  EXPECT_THROW(binary_h(10, 5, 1), PreconditionError);
}

TEST(Binary, AgreesWithMobiusProduct) {
  const std::vector<std::int64_t> ps{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (auto p : ps)
    for (auto q : ps) {
      if (p == q) continue;
      const auto phi = phi_mobius(p * q);
      for (std::int64_t k = 0; k <= (p - 1) * (q - 1); ++k) ASSERT_EQ(binary_coeff(p, q, k), phi.a(k)) << p << " " << q;
    }
}

TEST(Binary, CountingMatchesRootVector) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}, {5, 7}, {3, 7}, {7, 11}}) {
    const auto v = RootVector::concat(RootVector::all(p), RootVector::all(q));
    const auto h = h_table(v, static_cast<std::size_t>(p * q - 1));
    for (std::int64_t k = 0; k < p * q; ++k) ASSERT_EQ(round_to_integer(h[static_cast<std::size_t>(k)]), binary_h(p, q, k));
  }
}

TEST(RoundToInteger, Tolerance) {
  EXPECT_EQ(round_to_integer({3.0000001, 1e-12}), 3);
  EXPECT_EQ(round_to_integer({-2.0, 0.0}), -2);
  EXPECT_THROW(round_to_integer({2.5, 0.0}), std::domain_error);
  EXPECT_THROW(round_to_integer({2.0, 1e-3}), std::domain_error);
}
