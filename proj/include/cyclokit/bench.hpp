#pragma once

// Timing and operation counts for the coefficient-sum test against exact
// division by Phi_N, over a grid of (N, degree) points with seeded inputs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <string_view>
#include <vector>

#include "cyclotomic.hpp"
#include "divisibility.hpp"
#include "poly.hpp"

namespace cyclokit {

enum class BenchMethod { CoeffSum, ExactDivision };

inline std::string_view to_string(BenchMethod m) { return m == BenchMethod::CoeffSum ? "coeff_sum" : "exact_division"; }

struct BenchRecord {
  BenchMethod method = BenchMethod::CoeffSum;
  std::int64_t N = 0;
  std::int64_t degree = 0;
  std::int64_t trial = 0;
  std::int64_t ns_elapsed = 0;
  std::size_t op_count = 0;
  bool verdict = false;
};

struct BenchConfig {
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> moduli;
  std::int64_t trials = 10;
  std::uint64_t seed = 1;
};

/// `points` degrees spread evenly over [step, max_degree].
inline std::vector<std::int64_t> degree_grid(std::int64_t max_degree, std::int64_t points) {
  if (max_degree < 1 || points < 1) throw PreconditionError("degree_grid: max_degree and points must be positive");
  points = std::min(points, max_degree);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i <= points; ++i) out.push_back(max_degree * i / points);
  return out;
}

/// Random integer polynomial of exact degree `degree` (coefficients in [-9, 9],
/// nonzero leading). Even trials are Phi_N times such a polynomial.
inline IntPoly bench_input(const BenchConfig& cfg, std::int64_t N, std::int64_t degree, std::int64_t trial) {
  std::seed_seq seq{static_cast<std::uint64_t>(cfg.seed), static_cast<std::uint64_t>(N),
                    static_cast<std::uint64_t>(degree), static_cast<std::uint64_t>(trial)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> lead(1, 9);
  auto random_poly = [&](std::int64_t d) {
    std::vector<BigInt> c(static_cast<std::size_t>(d + 1));
    for (auto& x : c) x = coef(rng);
    c.back() = lead(rng) * (rng() % 2 ? 1 : -1);
    return IntPoly(std::move(c));
  };
  if (trial % 2 == 0) return phi_mobius(N).poly * random_poly(degree - totient(N));
  return random_poly(degree);
}

/// Two records per trial (coefficient sums, then division) at every grid point
/// with phi(N) <= degree, ordered by (N, degree, trial).
inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRecord> out;
  using clock = std::chrono::steady_clock;
  for (auto N : cfg.moduli) {
    detail::require_positive(N, "run_bench");
    const auto phi_n = phi_mobius(N).poly;
    for (auto degree : cfg.degrees) {
      if (totient(N) > degree) continue;
      for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
        const auto P = bench_input(cfg, N, degree, trial);

        auto t0 = clock::now();
        const auto rep = divides_cyclotomic(P, N);
        auto t1 = clock::now();
        out.push_back({BenchMethod::CoeffSum, N, degree, trial,
                       std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(), rep.op_count, rep.verdict});

        t0 = clock::now();
        const auto div = divmod(P, phi_n);
        t1 = clock::now();
        out.push_back({BenchMethod::ExactDivision, N, degree, trial,
                       std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(), div.op_count,
                       div.remainder.is_zero()});
      }
    }
  }
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "method,N,degree,trial,ns_elapsed,op_count,verdict\n";
  for (const auto& r : records) {
    os << to_string(r.method) << ',' << r.N << ',' << r.degree << ',' << r.trial << ',' << r.ns_elapsed << ','
       << r.op_count << ',' << (r.verdict ? "true" : "false") << '\n';
  }
}

/// Fraction of trials where both methods returned the same verdict.
inline double verdict_agreement(const std::vector<BenchRecord>& records) {
  std::int64_t same = 0, total = 0;
  for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
    ++total;
    same += records[i].verdict == records[i + 1].verdict;
  }
  return total == 0 ? 1.0 : static_cast<double>(same) / static_cast<double>(total);
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares y = slope x + intercept.
inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw PreconditionError("linear_fit: need at least two paired points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  if (sxx == 0) throw PreconditionError("linear_fit: x values are all equal");
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

/// Fit of coefficient-sum op counts against degree for one modulus.
inline LinearFit op_count_fit(const std::vector<BenchRecord>& records, std::int64_t N) {
  std::vector<double> x, y;
  for (const auto& r : records) {
    if (r.method == BenchMethod::CoeffSum && r.N == N) {
      x.push_back(static_cast<double>(r.degree));
      y.push_back(static_cast<double>(r.op_count));
    }
  }
  return linear_fit(x, y);
}

}  // namespace cyclokit
