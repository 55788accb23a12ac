#pragma once

// Divisibility of a polynomial by Phi_N, z^n - 1, Phi_p(z^s) and z^n - eta
// decided from residue-class sums of its coefficients, without dividing.
// Coefficients are read in descending order: a_j multiplies z^{deg - j}.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "numtheory.hpp"
#include "poly.hpp"

namespace cyclokit {

enum class DivisorKind { CyclotomicN, ZnMinus1, PhiPZs, ZnMinusEta };

inline std::string_view to_string(DivisorKind k) {
  switch (k) {
    case DivisorKind::CyclotomicN: return "cyclotomic";
    case DivisorKind::ZnMinus1: return "zn_minus_1";
    case DivisorKind::PhiPZs: return "phi_p_zs";
    case DivisorKind::ZnMinusEta: return "zn_minus_eta";
  }
  return "unknown";
}

enum class SumPath { ResidueClasses, SingleRepresentative };

inline std::string_view to_string(SumPath p) {
  return p == SumPath::ResidueClasses ? "residue_classes" : "single_representative";
}

template <class T>
struct Witness {
  std::int64_t h = 0;
  T sum{};
};

template <class T>
struct DivisibilityReport {
  DivisorKind kind = DivisorKind::CyclotomicN;
  std::vector<std::pair<std::string, std::int64_t>> params;
  bool verdict = false;
  std::vector<Witness<T>> witnesses;  // h ascending; h_range_used is their h values
  SumPath path = SumPath::ResidueClasses;
  std::size_t op_count = 0;
  bool exact = true;
  double tolerance = 0.0;
  Complex eta{};  // only for ZnMinusEta

  std::vector<std::int64_t> h_range_used() const {
    std::vector<std::int64_t> out;
    out.reserve(witnesses.size());
    for (const auto& w : witnesses) out.push_back(w.h);
    return out;
  }
};

using IntDivisibilityReport = DivisibilityReport<BigInt>;
using ComplexDivisibilityReport = DivisibilityReport<Complex>;

struct CyclotomicTestOptions {
  bool allow_single_representative = true;
  bool full_h_range = false;  // check every h in [0, N) even when N is even
};

namespace detail {

/// S[r] = sum of a_j over j = r mod n, descending indices.
template <class T>
std::vector<T> residue_class_sums(const Poly<T>& p, std::int64_t n) {
  std::vector<T> s(static_cast<std::size_t>(n));
  const auto deg = p.degree();
  const auto& c = p.coeffs();
  for (std::ptrdiff_t j = 0; j <= deg; ++j) {
    const auto& a = c[static_cast<std::size_t>(deg - j)];
    if (a != T{}) s[static_cast<std::size_t>(j % n)] += a;
  }
  return s;
}

}  // namespace detail

/// P is divisible by Phi_N iff, for every h in H, the alternating sum over
/// d | gamma(N) of the coefficient sums over j = h - sum_{p|d} N/p (mod N) vanishes.
/// H is [0, N/2) for even N and [0, N) for odd N. Requires phi(N) <= deg P.
inline IntDivisibilityReport divides_cyclotomic(const IntPoly& P, std::int64_t N, CyclotomicTestOptions opt = {}) {
  detail::require_positive(N, "divides_cyclotomic");
  const auto f = factorize(N);
  const auto phi_n = totient(f);
  const auto m = static_cast<std::int64_t>(P.degree());
  if (phi_n > m)
    throw PreconditionError("divides_cyclotomic: phi(N) = " + std::to_string(phi_n) + " exceeds deg P = " +
                            std::to_string(m));

  IntDivisibilityReport r;
  r.kind = DivisorKind::CyclotomicN;
  r.params = {{"N", N}};
  const auto kds = kernel_divisors(f);
  const std::int64_t h_end = (N % 2 == 0 && !opt.full_h_range) ? N / 2 : N;
  const bool single = opt.allow_single_representative && m < N;
  r.path = single ? SumPath::SingleRepresentative : SumPath::ResidueClasses;

  std::vector<BigInt> sums;
  if (single) {
    // each residue class holds at most the single index j = r itself
    sums.resize(static_cast<std::size_t>(N));
    for (std::int64_t j = 0; j <= m; ++j) sums[static_cast<std::size_t>(j)] = P.desc_coeff(j);
  } else {
    sums = detail::residue_class_sums(P, N);
  }
  r.op_count += static_cast<std::size_t>(m + 1);

  r.verdict = true;
  for (std::int64_t h = 0; h < h_end; ++h) {
    BigInt w;
    for (const auto& kd : kds) {
      const auto& s = sums[static_cast<std::size_t>(residue(h - kd.shift, N))];
      if (kd.sign() > 0)
        w += s;
      else
        w -= s;
    }
    r.op_count += kds.size();
    if (w != 0) r.verdict = false;
    r.witnesses.push_back({h, std::move(w)});
  }
  return r;
}

/// z^n - 1 divides P iff every residue-class sum alpha_r (mod n) vanishes.
inline IntDivisibilityReport divides_zn_minus_1(const IntPoly& P, std::int64_t n) {
  if (n < 1) throw PreconditionError("divides_zn_minus_1: n must be positive, got " + std::to_string(n));
  if (n > P.degree())
    throw PreconditionError("divides_zn_minus_1: n = " + std::to_string(n) + " exceeds deg P = " +
                            std::to_string(P.degree()));
  IntDivisibilityReport r;
  r.kind = DivisorKind::ZnMinus1;
  r.params = {{"n", n}};
  auto sums = detail::residue_class_sums(P, n);
  r.op_count = static_cast<std::size_t>(P.degree() + 1);
  r.verdict = true;
  for (std::int64_t h = 0; h < n; ++h) {
    if (sums[static_cast<std::size_t>(h)] != 0) r.verdict = false;
    r.witnesses.push_back({h, std::move(sums[static_cast<std::size_t>(h)])});
  }
  return r;
}

/// Phi_p(z^s) divides P iff the coefficient sums over j = h and j = h - s
/// (mod ps) agree for h in [0, ps), or h in [0, s) when p = 2.
/// Witness sums are the differences.
inline IntDivisibilityReport divides_phi_p_zs(const IntPoly& P, std::int64_t p, std::int64_t s) {
  if (!is_prime(p)) throw PreconditionError("divides_phi_p_zs: " + std::to_string(p) + " is not prime");
  if (s < 1) throw PreconditionError("divides_phi_p_zs: s must be positive, got " + std::to_string(s));
  if ((p - 1) * s > P.degree())
    throw PreconditionError("divides_phi_p_zs: (p-1)s = " + std::to_string((p - 1) * s) + " exceeds deg P = " +
                            std::to_string(P.degree()));
  IntDivisibilityReport r;
  r.kind = DivisorKind::PhiPZs;
  r.params = {{"p", p}, {"s", s}};
  const std::int64_t ps = p * s;
  const auto sums = detail::residue_class_sums(P, ps);
  r.op_count = static_cast<std::size_t>(P.degree() + 1);
  const std::int64_t h_end = p == 2 ? s : ps;
  r.verdict = true;
  for (std::int64_t h = 0; h < h_end; ++h) {
    BigInt w = sums[static_cast<std::size_t>(h)] - sums[static_cast<std::size_t>(residue(h - s, ps))];
    ++r.op_count;
    if (w != 0) r.verdict = false;
    r.witnesses.push_back({h, std::move(w)});
  }
  return r;
}

/// eta^{1/n} = |eta|^{1/n} e^{i theta / n} with theta = arg(eta) in [0, 2 pi).
inline Complex principal_root(Complex eta, std::int64_t n) {
  double theta = std::arg(eta);
  if (theta < 0) theta += 2.0 * std::numbers::pi;
  return std::polar(std::pow(std::abs(eta), 1.0 / static_cast<double>(n)), theta / static_cast<double>(n));
}

/// z^n - eta divides P iff the residue-class sums (mod n) of b_j = a_j eta^{-j/n} vanish.
/// Complex arithmetic; a sum counts as zero below 1e-9 times the class's absolute mass plus one.
inline ComplexDivisibilityReport divides_zn_minus_eta(const ComplexPoly& P, std::int64_t n, Complex eta) {
  if (eta == Complex{}) throw PreconditionError("divides_zn_minus_eta: eta must be nonzero");
  if (n < 1) throw PreconditionError("divides_zn_minus_eta: n must be positive, got " + std::to_string(n));
  if (n > P.degree())
    throw PreconditionError("divides_zn_minus_eta: n = " + std::to_string(n) + " exceeds deg P = " +
                            std::to_string(P.degree()));
  ComplexDivisibilityReport r;
  r.kind = DivisorKind::ZnMinusEta;
  r.params = {{"n", n}};
  r.eta = eta;
  r.exact = false;
  const Complex c_inv = 1.0 / principal_root(eta, n);
  const auto deg = P.degree();
  std::vector<Complex> sums(static_cast<std::size_t>(n));
  std::vector<double> mass(static_cast<std::size_t>(n), 1.0);
  Complex scale = 1.0;
  for (std::ptrdiff_t j = 0; j <= deg; ++j) {
    const Complex b = P.desc_coeff(j) * scale;
    sums[static_cast<std::size_t>(j % n)] += b;
    mass[static_cast<std::size_t>(j % n)] += std::abs(b);
    scale *= c_inv;
  }
  r.op_count = static_cast<std::size_t>(deg + 1);
  r.verdict = true;
  for (std::int64_t h = 0; h < n; ++h) {
    const double tol = 1e-9 * mass[static_cast<std::size_t>(h)];
    r.tolerance = std::max(r.tolerance, tol);
    if (std::abs(sums[static_cast<std::size_t>(h)]) > tol) r.verdict = false;
    r.witnesses.push_back({h, sums[static_cast<std::size_t>(h)]});
  }
  return r;
}

inline ComplexDivisibilityReport divides_zn_minus_eta(const IntPoly& P, std::int64_t n, Complex eta) {
  return divides_zn_minus_eta(to_complex_poly(P), n, eta);
}

/// eta = zeta_order^exponent given exactly.
struct RootOfUnity {
  std::int64_t order = 1;
  std::int64_t exponent = 0;

  Complex value() const { return root_of_unity(order, exponent); }
};

/// Exact form of the z^n - eta test for eta = zeta_k^j. With c = zeta_{nk}^{j0}
/// (j0 = j mod k) the principal n-th root of eta, each class sum
/// sum_{i = r (n)} coeff_i c^i lives in Z[x] / Phi_{nk}(x) and is zero iff the
/// remainder of sum coeff_i x^{j0 i mod nk} by Phi_{nk} is zero.
/// Witness sums are those remainders evaluated at c.
inline ComplexDivisibilityReport divides_zn_minus_eta(const IntPoly& P, std::int64_t n, RootOfUnity eta) {
  detail::require_positive(eta.order, "divides_zn_minus_eta");
  if (n < 1) throw PreconditionError("divides_zn_minus_eta: n must be positive, got " + std::to_string(n));
  if (n > P.degree())
    throw PreconditionError("divides_zn_minus_eta: n = " + std::to_string(n) + " exceeds deg P = " +
                            std::to_string(P.degree()));
  const std::int64_t nk = n * eta.order;
  const std::int64_t j0 = residue(eta.exponent, eta.order);
  const auto phi_nk = phi_mobius(nk).poly;
  const Complex c = root_of_unity(nk, j0);

  ComplexDivisibilityReport r;
  r.kind = DivisorKind::ZnMinusEta;
  r.params = {{"n", n}, {"order", eta.order}, {"exponent", eta.exponent}};
  r.eta = eta.value();
  r.exact = true;

  std::vector<std::vector<BigInt>> classes(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(nk)));
  const auto& a = P.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const auto e = static_cast<std::size_t>((j0 * static_cast<std::int64_t>(i % static_cast<std::size_t>(nk))) % nk);
    classes[i % static_cast<std::size_t>(n)][e] += a[i];
  }
  r.op_count = a.size();
  r.verdict = true;
  for (std::int64_t h = 0; h < n; ++h) {
    auto rem = divmod(IntPoly(std::move(classes[static_cast<std::size_t>(h)])), phi_nk);
    r.op_count += rem.op_count;
    if (!rem.remainder.is_zero()) r.verdict = false;
    r.witnesses.push_back({h, eval_complex(rem.remainder, c)});
  }
  return r;
}

}  // namespace cyclokit
