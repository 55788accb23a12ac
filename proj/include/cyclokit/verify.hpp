#pragma once

// Range sweeps that check the identities over 1..max_n and stream one
// IdentityReport per checked instance, in ascending n regardless of --jobs.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

#include "cyclotomic.hpp"
#include "numtheory.hpp"
#include "ramanujan.hpp"
#include "report.hpp"
#include "symmetric.hpp"

namespace cyclokit {

enum class Suite { Ramanujan, Symmetric, Coefficients, All };

inline std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Ramanujan: return "ramanujan";
    case Suite::Symmetric: return "symmetric";
    case Suite::Coefficients: return "coefficients";
    case Suite::All: return "all";
  }
  return "unknown";
}

inline std::optional<Suite> parse_suite(std::string_view s) {
  for (auto x : {Suite::Ramanujan, Suite::Symmetric, Suite::Coefficients, Suite::All}) {
    if (to_string(x) == s) return x;
  }
  return std::nullopt;
}

/// Sizes beyond which the complex oracles are not run.
struct SweepLimits {
  std::int64_t holder_max_n = 300;
  std::int64_t bridge_max_n = 60;
  std::int64_t hstarstar_max_n = 200;
  std::int64_t closed_form_max_n = 20;
  std::int64_t closed_form_max_km = 40;
  std::int64_t binary_bruteforce_max_n = 143;
  std::int64_t squarefree_chain_max_n = 2000;
};

namespace detail {

/// Counts agreeing numeric comparisons into one report.
class Tally {
 public:
  void check(Complex got, double want, double tol = 1e-9) {
    const double dev = std::abs(got - Complex(want, 0.0));
    worst_ = std::max(worst_, dev);
    ++made_;
    held_ += dev <= tol * (1.0 + std::abs(want));
  }

  void check(bool ok) {
    ++made_;
    held_ += ok;
  }

  IdentityReport report(Identity id, std::string variant, std::int64_t n,
                        std::vector<std::pair<std::string, std::int64_t>> params = {}) const {
    auto r = make_report(id, std::move(variant), n, std::move(params), held_, made_);
    r.max_deviation = worst_;
    return r;
  }

 private:
  std::int64_t held_ = 0;
  std::int64_t made_ = 0;
  double worst_ = 0.0;
};

inline void append(std::vector<IdentityReport>& out, std::vector<IdentityReport>&& more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace detail

inline std::vector<IdentityReport> ramanujan_reports(std::int64_t n, const SweepLimits& lim = {}) {
  std::vector<IdentityReport> out;
  const auto f = factorize(n);
  if (n <= lim.holder_max_n) {
    out.push_back(verify_holder(n));
    detail::append(out, verify_ramanujan_properties(n));
  }
  for (auto d1 : divisors(f, true)) out.push_back(verify_direct_identity(n, d1));
  if (n >= 2) {
    detail::append(out, verify_sum_cn(n));
    out.push_back(verify_toth(n));
  }
  if (!f.squarefree()) {
    for (auto d1 : divisors(f, true)) {
      if (d1 > 1) detail::append(out, verify_sum_cn_nonsquarefree(n, d1));
    }
  }
  if (f.omega() == 2) detail::append(out, verify_omega2(n));
  return out;
}

/// a_n(k) = H_k over the non-primitive roots = (-1)^k E_k over the primitive roots,
/// each rounded to an integer, for 0 <= k <= phi(n). The H form needs k < n,
/// which only drops k = 1 at n = 1.
inline IdentityReport coefficient_bridge(std::int64_t n) {
  const auto phi = phi_mobius(n);
  const auto K = static_cast<std::size_t>(totient(n));
  const auto h = h_table(RootVector::nonprimitive(n), K);
  const auto e = e_table(RootVector::primitive(n), K);
  detail::Tally t;
  for (std::size_t k = 0; k <= K; ++k) {
    const Complex ek = (k % 2 == 0 ? 1.0 : -1.0) * e[k];
    const double want = detail::to_double(phi.a(static_cast<std::int64_t>(k)));
    auto check = [&](Complex got) {
      bool ok = true;
      try {
        ok = round_to_integer(got) == static_cast<std::int64_t>(want);
      } catch (const std::domain_error&) {
        ok = false;
      }
      t.check(ok);
      t.check(got, want);
    };
    if (k < static_cast<std::size_t>(n)) check(h[k]);
    check(ek);
  }
  return t.report(Identity::CoefficientBridge, "", n);
}

/// E_k over primitive roots = (-1)^k H_k over non-primitive roots for k <= phi(n),
/// and the mirrored statement for k <= n - phi(n).
inline IdentityReport root_formula(std::int64_t n) {
  const auto prim = RootVector::primitive(n);
  const auto nonprim = RootVector::nonprimitive(n);
  const auto phi = static_cast<std::size_t>(totient(n));
  const auto rest = static_cast<std::size_t>(n) - phi;
  const auto K = std::max(phi, rest);
  const auto e_p = e_table(prim, K), h_p = h_table(prim, K);
  const auto e_np = e_table(nonprim, K), h_np = h_table(nonprim, K);
  detail::Tally t;
  for (std::size_t k = 0; k <= phi && k < static_cast<std::size_t>(n); ++k) {
    const double s = k % 2 == 0 ? 1.0 : -1.0;
    t.check(std::abs(e_p[k] - s * h_np[k]) <= 1e-9 * (1.0 + std::abs(e_p[k])));
  }
  for (std::size_t k = 0; k <= rest; ++k) {
    const double s = k % 2 == 0 ? 1.0 : -1.0;
    t.check(std::abs(e_np[k] - s * h_p[k]) <= 1e-9 * (1.0 + std::abs(e_np[k])));
  }
  return t.report(Identity::RootFormula, "", n);
}

/// H_m(1, zeta_n, ..., zeta_n^{n-1}) = [n | m] for m <= 3n.
inline IdentityReport full_root_sum(std::int64_t n) {
  const auto M = static_cast<std::size_t>(3 * n);
  const auto h = h_table(RootVector::all(n), M);
  detail::Tally t;
  for (std::size_t m = 0; m <= M; ++m) t.check(h[m], m % static_cast<std::size_t>(n) == 0 ? 1.0 : 0.0);
  return t.report(Identity::FullRootSum, "", n);
}

/// Closed form against brute force for 1 <= k < n (where the closed form holds), m <= limit.
inline IdentityReport closed_form_range(std::int64_t n, std::int64_t max_m, std::int64_t k_lo, std::int64_t k_hi) {
  detail::Tally t;
  double worst = 0.0;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    std::vector<Complex> v;
    for (std::int64_t j = 0; j <= k; ++j) v.push_back(root_of_unity(n, j));
    const auto h = h_table(v, static_cast<std::size_t>(max_m));
    for (std::int64_t m = 0; m <= max_m; ++m) {
      const double dev = std::abs(h[static_cast<std::size_t>(m)] - h_closed_form(n, k, m));
      worst = std::max(worst, dev);
      t.check(dev <= 1e-9);
    }
  }
  auto r = t.report(Identity::ClosedForm, "", n, {{"k_lo", k_lo}, {"k_hi", k_hi}, {"max_m", max_m}});
  r.max_deviation = worst;
  return r;
}

inline std::vector<IdentityReport> symmetric_reports(std::int64_t n, const SweepLimits& lim = {}) {
  std::vector<IdentityReport> out;
  if (n <= lim.bridge_max_n) {
    out.push_back(coefficient_bridge(n));
    out.push_back(root_formula(n));
    out.push_back(full_root_sum(n));
  }
  if (n <= lim.hstarstar_max_n) {
    for (auto p : factorize(n).primes()) {
      if ((n / p) % p != 0) out.push_back(hstarstar_check(n / p, p));
    }
  }
  if (n >= 2 && n <= lim.closed_form_max_n)
    out.push_back(closed_form_range(n, lim.closed_form_max_km, 1, std::min(n - 1, lim.closed_form_max_km)));
  return out;
}

/// Binary coefficients a_pq(k) by counting: in {-1, 0, 1}, equal
/// to Phi_pq exactly, and (for small pq) to brute-force H_k over both root sets.
inline IdentityReport binary_coefficients(std::int64_t p, std::int64_t q, bool with_bruteforce) {
  const std::int64_t n = p * q;
  const auto phi = phi_mobius(n);
  const std::int64_t K = (p - 1) * (q - 1);
  detail::Tally t;
  std::vector<Complex> h;
  if (with_bruteforce) {
    h = h_table(RootVector::concat(RootVector::all(p), RootVector::all(q)), static_cast<std::size_t>(K));
  }
  for (std::int64_t k = 0; k <= K; ++k) {
    const int c = binary_coeff(p, q, k);
    t.check(c >= -1 && c <= 1);
    t.check(BigInt(c) == phi.a(k));
    if (with_bruteforce) t.check(h[static_cast<std::size_t>(k)], binary_h(p, q, k));
  }
  return t.report(Identity::BinaryCoefficient, "", n, {{"p", p}, {"q", q}});
}

/// Every algorithm that applies to n agrees with the Moebius product bit for bit.
inline IdentityReport cross_algorithm(std::int64_t n, const SweepLimits& lim = {}) {
  const auto ref = phi_mobius(n).poly;
  detail::Tally t;
  t.check(phi_squarefree_reduce(n).poly == ref);
  if (n <= lim.squarefree_chain_max_n && factorize(n).squarefree()) {
    t.check(phi_extension_chain(n).poly == ref);
    t.check(phi_arnold_monagan_chain(n).poly == ref);
  }
  return t.report(Identity::CrossAlgorithm, "", n);
}

inline std::vector<IdentityReport> coefficient_reports(std::int64_t n, const SweepLimits& lim = {}) {
  std::vector<IdentityReport> out;
  out.push_back(cross_algorithm(n, lim));
  const auto f = factorize(n);
  if (f.omega() == 2 && f.squarefree()) {
    const auto p = f.factors[0].prime, q = f.factors[1].prime;
    out.push_back(binary_coefficients(p, q, n <= lim.binary_bruteforce_max_n));
  }
  return out;
}

inline std::vector<IdentityReport> suite_reports(Suite s, std::int64_t n, const SweepLimits& lim = {}) {
  switch (s) {
    case Suite::Ramanujan: return ramanujan_reports(n, lim);
    case Suite::Symmetric: return symmetric_reports(n, lim);
    case Suite::Coefficients: return coefficient_reports(n, lim);
    case Suite::All: {
      auto out = ramanujan_reports(n, lim);
      detail::append(out, symmetric_reports(n, lim));
      detail::append(out, coefficient_reports(n, lim));
      return out;
    }
  }
  return {};
}

struct SweepSummary {
  std::int64_t reports = 0;
  std::int64_t failures = 0;
};

/// Runs the suite for n = 1..max_n on up to `jobs` threads. Work is done in
/// blocks of consecutive n; each finished block is handed to `sink` in order.
inline SweepSummary run_suite(Suite s, std::int64_t max_n, unsigned jobs,
                              const std::function<void(const IdentityReport&)>& sink, const SweepLimits& lim = {}) {
  if (max_n < 2) throw PreconditionError("run_suite: max_n must be at least 2, got " + std::to_string(max_n));
  jobs = std::max(1u, jobs);
  constexpr std::int64_t kBlock = 32;
  SweepSummary sum;
  for (std::int64_t lo = 1; lo <= max_n; lo += kBlock) {
    const std::int64_t hi = std::min(max_n, lo + kBlock - 1);
    std::vector<std::vector<IdentityReport>> block(static_cast<std::size_t>(hi - lo + 1));
    std::atomic<std::int64_t> next{lo};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
      try {
        for (std::int64_t n; (n = next.fetch_add(1)) <= hi;)
          block[static_cast<std::size_t>(n - lo)] = suite_reports(s, n, lim);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = hi + 1;
      }
    };
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
    for (auto& reports : block) {
      for (auto& r : reports) {
        ++sum.reports;
        sum.failures += !r.pass;
        sink(r);
      }
    }
  }
  return sum;
}

}  // namespace cyclokit
