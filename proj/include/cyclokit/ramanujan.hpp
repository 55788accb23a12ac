#pragma once

// Ramanujan sums c_n(r), Toth's polynomial T_n(z) = sum_{r<n} c_n(r) z^r - n,
// and checkers for the identities that follow from Phi_n | T_n.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "divisibility.hpp"
#include "numtheory.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "symmetric.hpp"

namespace cyclokit {

/// c_n(r) for a fixed n by Hoelder's identity phi(n) mu(n/d) / phi(n/d), d = (n, r).
class RamanujanEvaluator {
 public:
  explicit RamanujanEvaluator(std::int64_t n) : f_(factorize(n)), phi_(totient(f_)) {}

  std::int64_t n() const { return f_.n; }
  const Factorization& factorization() const { return f_; }

  std::int64_t operator()(std::int64_t r) const {
    const std::int64_t d = std::gcd(f_.n, residue(r, f_.n));
    const auto q = factorize(f_.n / d);
    const int mu = mobius(q);
    if (mu == 0) return 0;
    const auto phi_q = totient(q);
    if (phi_ % phi_q != 0)
      throw std::logic_error("Hoelder quotient not exact for n = " + std::to_string(f_.n) + ", r = " + std::to_string(r));
    return mu * (phi_ / phi_q);
  }

 private:
  Factorization f_;
  std::int64_t phi_;
};

inline std::int64_t ramanujan_sum(std::int64_t n, std::int64_t r) {
  detail::require_positive(n, "ramanujan_sum");
  return RamanujanEvaluator(n)(r);
}

/// Direct sum of zeta_n^{jr} over 1 <= j <= n coprime to n, rounded.
inline std::int64_t ramanujan_sum_bruteforce(std::int64_t n, std::int64_t r) {
  detail::require_positive(n, "ramanujan_sum_bruteforce");
  if (n > 10000) throw PreconditionError("ramanujan_sum_bruteforce: n must be at most 10000");
  Complex s{};
  const std::int64_t rr = residue(r, n);
  for (std::int64_t j = 1; j <= n; ++j) {
    if (std::gcd(j, n) == 1) s += root_of_unity(n, (j * rr) % n);
  }
  return round_to_integer(s);
}

/// {0..n/2-1} for even n, {0..n-1} otherwise.
inline std::vector<std::int64_t> h_set(std::int64_t n) {
  detail::require_positive(n, "h_set");
  std::vector<std::int64_t> out(static_cast<std::size_t>(n % 2 == 0 ? n / 2 : n));
  std::iota(out.begin(), out.end(), std::int64_t{0});
  return out;
}

struct TothPolynomial {
  std::int64_t n = 1;
  IntPoly poly;  // ascending
  std::int64_t tau = 0;
  bool divisible_by_criterion = true;
  bool divisible_by_division = true;
};

/// T_n with its degree tau = n - n / gamma(n); Phi_n | T_n is checked both by
/// coefficient sums and by exact division. T_1 is the zero polynomial.
inline TothPolynomial toth(std::int64_t n) {
  detail::require_positive(n, "toth");
  const RamanujanEvaluator c(n);
  const std::int64_t tau = n - n / kernel(c.factorization());
  TothPolynomial t;
  t.n = n;
  t.tau = tau;
  if (n == 1) return t;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) coeffs[static_cast<std::size_t>(r)] = c(r);
  coeffs[0] -= n;
  t.poly = IntPoly(std::move(coeffs));
  if (t.poly.degree() != tau)
    throw std::logic_error("toth(" + std::to_string(n) + "): degree " + std::to_string(t.poly.degree()) +
                           " differs from tau = " + std::to_string(tau));
  t.divisible_by_criterion = divides_cyclotomic(t.poly, n).verdict;
  t.divisible_by_division = divmod(t.poly, phi_mobius(n).poly).remainder.is_zero();
  return t;
}

inline IdentityReport verify_toth(std::int64_t n) {
  if (n < 2) throw PreconditionError("verify_toth: n must be at least 2");
  const auto t = toth(n);
  auto r = make_report(Identity::TothDivisibility, "", n, {{"tau", t.tau}, {"degree", t.poly.degree()}},
                       (t.divisible_by_criterion ? 1 : 0) + (t.divisible_by_division ? 1 : 0), 2);
  r.pass = r.pass && t.poly.degree() == t.tau;
  return r;
}

namespace detail {

/// Divisors d of gamma(n) with shifts sum_{p|d} n/p.
inline std::vector<KernelDivisor> shifts_of(const RamanujanEvaluator& c) { return kernel_divisors(c.factorization()); }

inline std::int64_t find_shift(const std::vector<KernelDivisor>& kds, std::int64_t d1) {
  for (const auto& kd : kds) {
    if (kd.d == d1) return kd.shift;
  }
  return -1;
}

}  // namespace detail

/// mu(d1) sum_{d | gamma(n), d != d1} mu(d) c_n(shift(d1) - shift(d)) = n - phi(n).
inline IdentityReport verify_direct_identity(std::int64_t n, std::int64_t d1) {
  detail::require_positive(n, "verify_direct_identity");
  const RamanujanEvaluator c(n);
  const auto kds = detail::shifts_of(c);
  const auto s1 = detail::find_shift(kds, d1);
  if (s1 < 0)
    throw PreconditionError("verify_direct_identity: " + std::to_string(d1) + " does not divide gamma(" +
                            std::to_string(n) + ")");
  std::int64_t lhs = 0;
  int mu1 = 1;
  for (const auto& kd : kds) {
    if (kd.d == d1) {
      mu1 = kd.sign();
      continue;
    }
    lhs += kd.sign() * c(s1 - kd.shift);
  }
  return make_report(Identity::DirectIdentity, "", n, {{"d1", d1}}, mu1 * lhs, n - totient(c.factorization()));
}

/// For each h in H(n) passing the gate {h - shift(d)}_n < n - n/gamma(n) for all d | gamma(n):
/// sum_d mu(d) c_n(h + n/gamma(n) - shift(d)) = 0.
inline std::vector<IdentityReport> verify_sum_cn(std::int64_t n) {
  if (n < 2) throw PreconditionError("verify_sum_cn: n must be at least 2");
  const RamanujanEvaluator c(n);
  const auto kds = detail::shifts_of(c);
  const std::int64_t base = n / kernel(c.factorization());
  const std::int64_t tau = n - base;
  std::vector<IdentityReport> out;
  for (auto h : h_set(n)) {
    bool gated = true;
    for (const auto& kd : kds) gated = gated && residue(h - kd.shift, n) < tau;
    if (!gated) continue;
    std::int64_t sum = 0;
    for (const auto& kd : kds) sum += kd.sign() * c(h + base - kd.shift);
    out.push_back(make_report(Identity::ShiftedSum, "", n, {{"h", h}}, sum, 0));
  }
  return out;
}

/// For mu(n) = 0 and d1 > 1 dividing gamma(n): the same sum without the d1 term
/// vanishes for integers h in (shift(d1) - n/gamma(n), shift(d1)) within H(n).
inline std::vector<IdentityReport> verify_sum_cn_nonsquarefree(std::int64_t n, std::int64_t d1) {
  detail::require_positive(n, "verify_sum_cn_nonsquarefree");
  const RamanujanEvaluator c(n);
  if (c.factorization().squarefree())
    throw PreconditionError("verify_sum_cn_nonsquarefree: " + std::to_string(n) + " is square-free");
  const auto kds = detail::shifts_of(c);
  const auto s1 = detail::find_shift(kds, d1);
  if (d1 <= 1 || s1 < 0)
    throw PreconditionError("verify_sum_cn_nonsquarefree: d1 = " + std::to_string(d1) +
                            " must be a divisor > 1 of gamma(" + std::to_string(n) + ")");
  const std::int64_t base = n / kernel(c.factorization());
  const std::int64_t h_end = n % 2 == 0 ? n / 2 : n;
  std::vector<IdentityReport> out;
  for (std::int64_t h = std::max<std::int64_t>(0, s1 - base + 1); h < s1 && h < h_end; ++h) {
    std::int64_t sum = 0;
    for (const auto& kd : kds) {
      if (kd.d != d1) sum += kd.sign() * c(h + base - kd.shift);
    }
    out.push_back(make_report(Identity::ShiftedSumNonSquarefree, "", n, {{"d1", d1}, {"h", h}}, sum, 0));
  }
  return out;
}

/// Every displayed specialization for n = p1^v1 p2^v2, p1 < p2. Variants:
/// "i+" / "i-": c(n/p2 +- n/p1) = c(n/p1) + c(n/p2) + n - phi(n);
/// "ii" (p1 = 2): 2 c(n/p2) + n = 2 phi(n);
/// "iii": c(h+q) + c(h+q-a-b) = c(h+q-a) + c(h+q-b) on the four h-intervals, with a = n/p1, b = n/p2, q = n/(p1 p2);
/// "iv" (p1 = 2): c(h+q) = c(h-q) on [0, q) and [b, n/2 - q);
/// "v1".."v4" (mu(n) = 0): the four open-interval identities; "v2p" (p1 = 2, mu(n) = 0):
/// c(h+q) = 2 c(h-q) on (n/2 - q, n/2).
inline std::vector<IdentityReport> verify_omega2(std::int64_t n) {
  detail::require_positive(n, "verify_omega2");
  const RamanujanEvaluator c(n);
  const auto& f = c.factorization();
  if (f.omega() != 2) throw PreconditionError("verify_omega2: omega(" + std::to_string(n) + ") must be 2");
  const std::int64_t p1 = f.factors[0].prime;
  const std::int64_t p2 = f.factors[1].prime;
  const std::int64_t a = n / p1, b = n / p2, q = n / (p1 * p2);
  const std::int64_t phi = totient(f);
  std::vector<IdentityReport> out;
  auto add = [&](const char* variant, std::int64_t h, std::int64_t lhs, std::int64_t rhs) {
    out.push_back(make_report(Identity::OmegaTwo, variant, n, {{"p1", p1}, {"p2", p2}, {"h", h}}, lhs, rhs));
  };

  add("i+", 0, c(b + a), c(a) + c(b) + n - phi);
  add("i-", 0, c(b - a), c(a) + c(b) + n - phi);
  if (p1 == 2) add("ii", 0, 2 * c(b) + n, 2 * phi);

  auto in_iii = [&](std::int64_t h) {
    return (h < b - q) || (b <= h && h < a - q) || (a <= h && h < a + b - q) || (a + b <= h && h < n - q);
  };
  for (std::int64_t h = 0; h < n; ++h) {
    if (in_iii(h)) add("iii", h, c(h + q) + c(h + q - a - b), c(h + q - a) + c(h + q - b));
  }

  if (p1 == 2) {
    for (std::int64_t h = 0; h < q; ++h) add("iv", h, c(h + q), c(h - q));
    for (std::int64_t h = b; h < n / 2 - q; ++h) add("iv", h, c(h + q), c(h - q));
  }

  if (!f.squarefree()) {
    for (std::int64_t h = b - q + 1; h < b; ++h) add("v1", h, c(h + q) + c(h - a - b + q), c(h - a + q));
    for (std::int64_t h = a - q + 1; h < a; ++h) add("v2", h, c(h + q) + c(h - a - b + q), c(h - b + q));
    for (std::int64_t h = a + b - q + 1; h < a + b; ++h) add("v3", h, c(h + q), c(h - a + q) + c(h - b + q));
    for (std::int64_t h = n - q + 1; h <= n - 1; ++h) add("v4", h, c(h - a - b + q), c(h - a + q) + c(h - b + q));
    if (p1 == 2) {
      for (std::int64_t h = n / 2 - q + 1; h < n / 2; ++h) add("v2p", h, c(h + q), 2 * c(h - q));
    }
  }
  return out;
}

/// Hoelder evaluation against the direct complex sum for 0 <= r < n.
inline IdentityReport verify_holder(std::int64_t n) {
  const RamanujanEvaluator c(n);
  std::int64_t agree = 0;
  for (std::int64_t r = 0; r < n; ++r) agree += c(r) == ramanujan_sum_bruteforce(n, r);
  return make_report(Identity::HolderVsBruteForce, "", n, {}, agree, n);
}

/// The eight listed properties of c_n, one report each (variant "1".."8");
/// lhs counts the checks that held, rhs the checks made.
/// Property 6 pairs n with every m <= m_max coprime to n; property 8 uses shifts m in [-m_max, m_max].
inline std::vector<IdentityReport> verify_ramanujan_properties(std::int64_t n, std::int64_t m_max = 12) {
  detail::require_positive(n, "verify_ramanujan_properties");
  const RamanujanEvaluator c(n);
  const auto& f = c.factorization();
  const std::int64_t phi = totient(f);
  const std::int64_t g = kernel(f);
  std::vector<IdentityReport> out;
  auto add = [&](const char* variant, std::int64_t held, std::int64_t made) {
    out.push_back(make_report(Identity::RamanujanProperty, variant, n, {}, held, made));
  };

  add("1", c(0) == phi, 1);

  std::int64_t held = 0, made = 0;
  for (std::int64_t r = 0; r < n; ++r, ++made) held += c(r) == c(-r);
  add("2", held, made);

  held = made = 0;
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t h = -3; h <= 3; ++h, ++made) held += c(r + h * n) == c(r);
  }
  add("3", held, made);

  held = made = 0;
  for (std::int64_t r = 0; r < n; ++r, ++made) {
    const std::int64_t d = std::gcd(n, r);
    const std::int64_t q = n / d;
    held += c(r) * totient(q) == phi * mobius(q);
  }
  add("4", held, made);

  held = made = 0;
  for (std::int64_t r = 0; r < n; ++r) {
    if (std::gcd(n, r) != 1) continue;
    ++made;
    held += c(r) == mobius(f);
  }
  add("5", held, made);

  held = made = 0;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    if (std::gcd(n, m) != 1) continue;
    const RamanujanEvaluator cm(m), cnm(n * m);
    for (std::int64_t r = 0; r < n * m; ++r, ++made) held += cnm(r) == c(r) * cm(r);
  }
  add("6", held, made);

  const std::int64_t sign = f.omega() % 2 == 0 ? 1 : -1;
  add("7", (c(n - n / g) == c(n / g) ? 1 : 0) + (c(n / g) == sign * (n / g) ? 1 : 0), 2);

  held = made = 0;
  if (n % 2 == 0) {
    for (std::int64_t h = 0; h < n; ++h) {
      for (std::int64_t m = -m_max; m <= m_max; ++m, ++made) {
        held += c(h + m * n / 2) == ((m % 2 == 0) ? 1 : -1) * c(h);
      }
    }
  }
  add("8", held, made);
  return out;
}

}  // namespace cyclokit
