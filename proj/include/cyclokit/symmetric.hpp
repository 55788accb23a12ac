#pragma once

// Complete homogeneous (H) and elementary (E) symmetric polynomials evaluated
// at vectors of roots of unity, plus the closed forms and the generalized
// Vieta relations that tie them to polynomial coefficients.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numtheory.hpp"
#include "poly.hpp"

namespace cyclokit {

/// Raised by vieta_tail_coeffs when a supplied value is not a root.
class NotARoot : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// e^{2 pi i j / n}, with j reduced first so the angle stays in [0, 2 pi).
inline Complex root_of_unity(std::int64_t n, std::int64_t j) {
  const auto r = residue(j, n);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

/// Complex entries, each either zero or of modulus one. Zero entries are
/// padding and do not contribute to H or E.
class RootVector {
 public:
  RootVector() = default;

  explicit RootVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    for (const auto& z : entries_) {
      if (z != Complex{} && std::abs(std::abs(z) - 1.0) > 1e-12)
        throw PreconditionError("RootVector: nonzero entry off the unit circle");
    }
  }

  /// (1, zeta_n, ..., zeta_n^{n-1})
  static RootVector all(std::int64_t n) {
    std::vector<Complex> v;
    v.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) v.push_back(root_of_unity(n, j));
    return RootVector(std::move(v));
  }

  /// Entry j (1 <= j <= n) is zeta_n^j when gcd(j, n) = 1, else 0.
  static RootVector primitive(std::int64_t n) { return filtered(n, true); }

  /// Entry j (1 <= j <= n) is zeta_n^j when gcd(j, n) > 1, else 0.
  static RootVector nonprimitive(std::int64_t n) { return filtered(n, false); }

  static RootVector concat(const RootVector& a, const RootVector& b) {
    std::vector<Complex> v = a.entries_;
    v.insert(v.end(), b.entries_.begin(), b.entries_.end());
    return RootVector(std::move(v));
  }

  std::span<const Complex> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::size_t nonzero_count() const {
    std::size_t k = 0;
    for (const auto& z : entries_) k += z != Complex{};
    return k;
  }

 private:
  static RootVector filtered(std::int64_t n, bool coprime) {
    detail::require_positive(n, "RootVector");
    std::vector<Complex> v;
    v.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j) {
      const bool is_coprime = std::gcd(j, n) == 1;
      v.push_back(is_coprime == coprime ? root_of_unity(n, j) : Complex{});
    }
    return RootVector(std::move(v));
  }

  std::vector<Complex> entries_;
};

namespace detail {

/// Power sums p_1..p_r of the nonzero entries; p[0] is unused.
inline std::vector<Complex> power_sums(std::span<const Complex> v, std::size_t r_max) {
  std::vector<Complex> p(r_max + 1);
  for (const auto& x : v) {
    if (x == Complex{}) continue;
    for (std::size_t i = 1; i <= r_max; ++i) p[i] += std::pow(x, static_cast<double>(i));
  }
  return p;
}

}  // namespace detail

/// H_0, ..., H_{r_max} over the nonzero entries, from power sums through
/// Newton's identities r H_r = sum_{i=1}^{r} p_i H_{r-i}.
inline std::vector<Complex> h_table(std::span<const Complex> v, std::size_t r_max) {
  const auto p = detail::power_sums(v, r_max);
  std::vector<Complex> h(r_max + 1);
  h[0] = 1.0;
  for (std::size_t r = 1; r <= r_max; ++r) {
    Complex acc{};
    for (std::size_t i = 1; i <= r; ++i) acc += p[i] * h[r - i];
    h[r] = acc / static_cast<double>(r);
  }
  return h;
}

inline std::vector<Complex> h_table(const RootVector& v, std::size_t r_max) { return h_table(v.entries(), r_max); }

inline Complex h_bruteforce(const RootVector& v, std::size_t r) { return h_table(v, r)[r]; }

/// E_0, ..., E_{k_max} by k E_k = sum_{i=1}^{k} (-1)^{i-1} p_i E_{k-i}.
inline std::vector<Complex> e_table(std::span<const Complex> v, std::size_t k_max) {
  const auto p = detail::power_sums(v, k_max);
  std::vector<Complex> e(k_max + 1);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    Complex acc{};
    for (std::size_t i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1.0 : -1.0) * p[i] * e[k - i];
    e[k] = acc / static_cast<double>(k);
  }
  return e;
}

inline std::vector<Complex> e_table(const RootVector& v, std::size_t k_max) { return e_table(v.entries(), k_max); }

inline Complex e_bruteforce(const RootVector& v, std::size_t k) { return e_table(v, k)[k]; }

/// H_m(1, zeta_n, ..., zeta_n^k) by the three-case product formula. The
/// cases are tried in order, so {k}_n = 0 or {m}_n = 0 yields 1 first.
/// Agrees with h_bruteforce only while k < n.
inline Complex h_closed_form(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (n < 2) throw PreconditionError("h_closed_form: n must be at least 2");
  if (k < 0 || m < 0) throw PreconditionError("h_closed_form: k and m must be non-negative");
  const std::int64_t kr = residue(k, n);
  const std::int64_t mr = residue(m, n);
  if (kr == 0 || mr == 0) return 1.0;
  if (kr + mr >= n) return 0.0;
  Complex prod = 1.0;
  for (std::int64_t s = 1; s <= kr; ++s) prod *= (1.0 - root_of_unity(n, mr + s)) / (1.0 - root_of_unity(n, s));
  return prod;
}

/// Given roots z_0..z_{r-1} of p (deg p = m), returns c_0..c_{m-r} with
/// p = prod (z - z_k) * sum_j c_j z^{m-r-j}, where c_k = sum_{j<=k} a_j H_{k-j}(z_0..z_{r-1})
/// and a_j are p's coefficients from the leading one down.
inline std::vector<Complex> vieta_tail_coeffs(const IntPoly& p, std::span<const Complex> roots) {
  if (p.is_zero()) throw PreconditionError("vieta_tail_coeffs: zero polynomial");
  const auto m = static_cast<std::size_t>(p.degree());
  const std::size_t r = roots.size();
  if (r > m) throw PreconditionError("vieta_tail_coeffs: more roots than the degree");

  for (std::size_t i = 0; i < r; ++i) {
    if (!is_numeric_root(p, roots[i])) throw NotARoot("vieta_tail_coeffs: entry " + std::to_string(i) + " is not a root");
  }

  std::vector<Complex> a;
  a.reserve(m + 1);
  for (const auto& x : p.descending()) a.push_back(detail::to_complex(x));

  // Vanishing sums over the growing prefix z_0..z_s. habs runs the same
  // recursion on absolute values and bounds how far rounding can spread.
  std::vector<Complex> h(m + 1);
  std::vector<double> habs(m + 1);
  h[0] = 1.0;
  habs[0] = 1.0;
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t d = 1; d <= m; ++d) {
      h[d] += roots[s] * h[d - 1];
      habs[d] += std::abs(roots[s]) * habs[d - 1];
    }
    Complex sum{};
    double scale = 1.0;
    for (std::size_t j = 0; j <= m - s; ++j) {
      sum += a[j] * h[m - s - j];
      scale += std::abs(a[j]) * habs[m - s - j];
    }
    if (std::abs(sum) > 1e-9 * scale)
      throw NotARoot("vieta_tail_coeffs: vanishing condition fails at s = " + std::to_string(s));
  }

  std::vector<Complex> c(m - r + 1);
  std::vector<double> cmass(m - r + 1);
  for (std::size_t k = 0; k <= m - r; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      c[k] += a[j] * h[k - j];
      cmass[k] += std::abs(a[j]) * habs[k - j];
    }
  }

  // Multiply back: prod (z - z_k) * C(z) must reproduce p.
  std::vector<Complex> prod{1.0};  // descending
  for (const auto& z : roots) {
    std::vector<Complex> next(prod.size() + 1);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i] += prod[i];
      next[i + 1] -= z * prod[i];
    }
    prod = std::move(next);
  }
  std::vector<Complex> back(m + 1);
  double scale = 1.0;
  for (std::size_t i = 0; i < prod.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      back[i + j] += prod[i] * c[j];
      scale += std::abs(prod[i]) * cmass[j];
    }
  double worst = 0.0;
  for (std::size_t i = 0; i <= m; ++i) {
    scale += std::abs(a[i]);
    worst = std::max(worst, std::abs(back[i] - a[i]));
  }
  if (worst > 1e-9 * scale) throw NotARoot("vieta_tail_coeffs: product of root factors does not reproduce p");
  return c;
}

/// H_k(1, zeta_p, ..., zeta_p^{p-1}, 1, zeta_q, ..., zeta_q^{q-1}) for distinct
/// primes and k < pq by counting: it is 1 exactly when some integer t satisfies
/// k (p v - 1) <= t p q <= k p v, where p v = 1 mod q; else 0. Zero for k < 0.
inline int binary_h(std::int64_t p, std::int64_t q, std::int64_t k) {
  if (q < 2 || p % q == 0) throw PreconditionError("binary_h: p must be invertible modulo q");
  if (k < 0) return 0;
  std::int64_t v = 1;
  while ((p * v) % q != 1) ++v;
  const std::int64_t pq = p * q;
  const std::int64_t hi = k * p * v;
  const std::int64_t lo = k * (p * v - 1);
  // floor(hi / pq) >= ceil(lo / pq), both operands non-negative
  return hi / pq >= (lo + pq - 1) / pq ? 1 : 0;
}

/// a_pq(k) = H_k - H_{k-1} over the two full root vectors.
inline int binary_coeff(std::int64_t p, std::int64_t q, std::int64_t k) {
  if (p == q) throw PreconditionError("binary_coeff: primes must be distinct");
  if (!is_prime(p) || !is_prime(q)) throw PreconditionError("binary_coeff: p and q must be prime");
  if (k < 0 || k > (p - 1) * (q - 1)) throw PreconditionError("binary_coeff: k outside [0, (p-1)(q-1)]");
  return binary_h(p, q, k) - binary_h(p, q, k - 1);
}

/// Rounds a complex value that must be an integer: |imag| <= 1e-9 and the
/// real part within 1e-6 of an integer. Throws otherwise.
inline std::int64_t round_to_integer(Complex z) {
  const double re = std::round(z.real());
  if (std::abs(z.imag()) > 1e-9 || std::abs(z.real() - re) > 1e-6)
    throw std::domain_error("value is not numerically an integer: " + std::to_string(z.real()) + " + " +
                            std::to_string(z.imag()) + "i");
  return static_cast<std::int64_t>(re);
}

}  // namespace cyclokit
