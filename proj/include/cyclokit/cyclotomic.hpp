#pragma once

// Cyclotomic polynomials Phi_n, inverse cyclotomic polynomials
// Psi_n = (z^n - 1) / Phi_n and the power sums H_k over primitive roots,
// each computable by independent routes so they can check one another.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "numtheory.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "symmetric.hpp"

namespace cyclokit {

enum class Algorithm { MobiusProduct, PrimeExtension, ArnoldMonagan, SquarefreeReduce };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::MobiusProduct: return "mobius";
    case Algorithm::PrimeExtension: return "extension";
    case Algorithm::ArnoldMonagan: return "am";
    case Algorithm::SquarefreeReduce: return "reduce";
  }
  return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
  for (auto a : {Algorithm::MobiusProduct, Algorithm::PrimeExtension, Algorithm::ArnoldMonagan,
                 Algorithm::SquarefreeReduce}) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

struct CycloResult {
  std::int64_t n = 1;
  IntPoly poly;  // ascending
  Algorithm algorithm = Algorithm::MobiusProduct;

  /// a_n(k): coefficient of z^{phi(n) - k}.
  BigInt a(std::int64_t k) const { return poly.desc_coeff(k); }
};

struct InvCycloResult {
  std::int64_t n = 2;
  IntPoly poly;  // ascending

  /// b_n(h): coefficient of z^h.
  BigInt b(std::size_t h) const { return poly.coeff(h); }
};

/// H_k over the primitive m-th roots of unity, k = 0..K.
struct HStarTable {
  std::int64_t m = 1;
  std::vector<BigInt> values;
};

namespace detail {

/// Per-process memo keyed by n. Stops admitting entries once the stored
/// coefficient count reaches the budget; lookups stay valid.
template <class V>
class Memo {
 public:
  explicit Memo(std::size_t coefficient_budget) : budget_(coefficient_budget) {}

  std::optional<V> find(std::int64_t n) const {
    std::lock_guard lock(mutex_);
    if (auto it = map_.find(n); it != map_.end()) return it->second;
    return std::nullopt;
  }

  void insert(std::int64_t n, const V& value, std::size_t weight) {
    std::lock_guard lock(mutex_);
    if (used_ + weight > budget_ || map_.count(n)) return;
    map_.emplace(n, value);
    used_ += weight;
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::int64_t, V> map_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

inline constexpr std::size_t kMemoBudget = std::size_t{1} << 21;

template <class V>
Memo<V>& memo_for(Algorithm a) {
  static Memo<V> memos[4] = {Memo<V>(kMemoBudget), Memo<V>(kMemoBudget), Memo<V>(kMemoBudget), Memo<V>(kMemoBudget)};
  return memos[static_cast<int>(a)];
}

inline IntPoly phi_mobius_uncached(std::int64_t n) {
  const auto f = factorize(n);
  IntPoly num = IntPoly::constant(1);
  std::vector<std::int64_t> denominators;
  for (const auto& kd : kernel_divisors(f)) {
    const auto exponent = static_cast<std::size_t>(n / kd.d);
    if (kd.sign() > 0)
      num *= zn_minus_one(exponent);
    else
      denominators.push_back(n / kd.d);
  }
  try {
    for (auto e : denominators) num = div_exact(num, zn_minus_one(static_cast<std::size_t>(e)));
  } catch (const NonExactDivision& ex) {
    throw std::logic_error("phi_mobius(" + std::to_string(n) + "): inexact division: " + ex.what());
  }
  return num;
}

/// Psi for an ascending Phi_m; Psi_1 = 1.
inline IntPoly psi_from_phi(std::int64_t m, const IntPoly& phi_m) {
  if (m == 1) return IntPoly::constant(1);
  return div_exact(zn_minus_one(static_cast<std::size_t>(m)), phi_m);
}

/// H_k over the roots of phi (any ascending polynomial with unit constant and
/// leading terms): the series of 1 / (z^deg phi(1/z)). For m = 1 this gives H_k(1) = 1.
inline std::vector<BigInt> hstar_from_phi(const IntPoly& phi, std::size_t K) {
  return series_inverse(reciprocal(phi), K).coeffs;
}

/// One step of the H-star convolution: Phi_{mp} from Phi_m when p does not divide m.
inline IntPoly extend_by_prime(const IntPoly& phi_m, std::int64_t p) {
  const auto phi_deg = static_cast<std::size_t>(phi_m.degree());
  const std::size_t K = static_cast<std::size_t>(p - 1) * phi_deg;
  const auto hstar = hstar_from_phi(phi_m, K);
  const auto a_m = phi_m.descending();
  const auto up = static_cast<std::size_t>(p);
  std::vector<BigInt> a_mp(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    BigInt acc;
    const std::size_t s_max = std::min(k / up, phi_deg);
    for (std::size_t s = 0; s <= s_max; ++s) {
      if (a_m[s] != 0) acc += a_m[s] * hstar[k - s * up];
    }
    a_mp[k] = std::move(acc);
  }
  return IntPoly::from_descending(std::move(a_mp));
}

/// Arnold-Monagan step, all indices ascending:
/// f(k) = f(k - m) - sum_{j p + h = k} Phi_m[j] Psi_m[h].
inline IntPoly extend_arnold_monagan(std::int64_t m, const IntPoly& phi_m, const IntPoly& psi_m, std::int64_t p) {
  const auto phi_deg = static_cast<std::size_t>(phi_m.degree());
  const std::size_t K = static_cast<std::size_t>(p - 1) * phi_deg;
  const auto& a = phi_m.coeffs();
  const auto& b = psi_m.coeffs();
  const auto up = static_cast<std::size_t>(p);
  const auto um = static_cast<std::size_t>(m);
  std::vector<BigInt> f(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    BigInt acc = k >= um ? f[k - um] : BigInt(0);
    for (std::size_t j = 0; j <= phi_deg && j * up <= k; ++j) {
      const std::size_t h = k - j * up;
      if (h < b.size() && a[j] != 0 && b[h] != 0) acc -= a[j] * b[h];
    }
    f[k] = std::move(acc);
  }
  return IntPoly(std::move(f));
}

inline void require_prime(std::int64_t p, const char* what) {
  if (!is_prime(p)) throw PreconditionError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace detail

/// Phi_n as prod_{d | n} (z^{n/d} - 1)^{mu(d)}: multiply the mu = +1 factors,
/// then divide out the mu = -1 factors.
inline CycloResult phi_mobius(std::int64_t n) {
  detail::require_positive(n, "phi_mobius");
  auto& memo = detail::memo_for<IntPoly>(Algorithm::MobiusProduct);
  if (auto hit = memo.find(n)) return {n, std::move(*hit), Algorithm::MobiusProduct};
  IntPoly p = detail::phi_mobius_uncached(n);
  memo.insert(n, p, p.coeffs().size());
  return {n, std::move(p), Algorithm::MobiusProduct};
}

/// Psi_n = (z^n - 1) / Phi_n.
inline InvCycloResult psi(std::int64_t n) {
  if (n < 2) throw PreconditionError("psi: n must be at least 2 (Psi_1 is the constant 1)");
  static detail::Memo<IntPoly> memo(detail::kMemoBudget);
  if (auto hit = memo.find(n)) return {n, std::move(*hit)};
  IntPoly p = detail::psi_from_phi(n, phi_mobius(n).poly);
  memo.insert(n, p, p.coeffs().size());
  return {n, std::move(p)};
}

/// H_k over the primitive m-th roots, k = 0..K, as the series inverse of Phi_m.
/// m = 1 follows the convention H_k(1) = 1.
inline HStarTable hstar_table(std::int64_t m, std::size_t K) {
  detail::require_positive(m, "hstar_table");
  return {m, detail::hstar_from_phi(phi_mobius(m).poly, K)};
}

/// Same table from 1 / Phi_m = -Psi_m * sum_s z^{sm}, for m >= 2.
inline HStarTable hstar_table_via_psi(std::int64_t m, std::size_t K) {
  if (m < 2) throw PreconditionError("hstar_table_via_psi: m must be at least 2");
  const auto psi_m = psi(m);
  const auto& b = psi_m.poly.coeffs();
  std::vector<BigInt> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    BigInt acc;
    for (std::size_t start = k % static_cast<std::size_t>(m), h = start; h <= k; h += static_cast<std::size_t>(m)) {
      if (h < b.size()) acc -= b[h];
    }
    out[k] = std::move(acc);
  }
  return {m, std::move(out)};
}

/// Phi_{mp}(z) = Phi_m(z^p) for p | m; Phi_m taken from the caller.
inline CycloResult phi_substitute(const CycloResult& phi_m, std::int64_t p) {
  detail::require_prime(p, "phi_substitute");
  if (phi_m.n % p != 0)
    throw PreconditionError("phi_substitute: " + std::to_string(p) + " does not divide " + std::to_string(phi_m.n));
  return {phi_m.n * p, substitute_power(phi_m.poly, static_cast<std::size_t>(p)), Algorithm::SquarefreeReduce};
}

inline CycloResult phi_substitute(std::int64_t m, std::int64_t p) {
  detail::require_positive(m, "phi_substitute");
  detail::require_prime(p, "phi_substitute");
  if (m % p != 0) throw PreconditionError("phi_substitute: " + std::to_string(p) + " does not divide " + std::to_string(m));
  return phi_substitute(phi_mobius(m), p);
}

/// Phi_n for square-free n built from Phi_1 = z - 1 one prime at a time, in
/// the given prime order (which must list each prime of n once).
inline CycloResult phi_extension_chain(std::int64_t n, const std::vector<std::int64_t>& order) {
  const auto f = factorize(n);
  if (!f.squarefree()) throw PreconditionError("phi_extension_chain: n must be square-free");
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != f.primes()) throw PreconditionError("phi_extension_chain: order must list the primes of n");
  IntPoly phi = zn_minus_one(1);
  for (auto p : order) phi = detail::extend_by_prime(phi, p);
  return {n, std::move(phi), Algorithm::PrimeExtension};
}

/// Memoized chain in ascending prime order: Phi_n from Phi_{n / largest prime}.
inline CycloResult phi_extension_chain(std::int64_t n) {
  detail::require_positive(n, "phi_extension_chain");
  const auto f = factorize(n);
  if (!f.squarefree()) throw PreconditionError("phi_extension_chain: n must be square-free");
  auto& memo = detail::memo_for<IntPoly>(Algorithm::PrimeExtension);
  if (auto hit = memo.find(n)) return {n, std::move(*hit), Algorithm::PrimeExtension};
  IntPoly phi;
  if (n == 1) {
    phi = zn_minus_one(1);
  } else {
    const auto p = f.factors.back().prime;
    phi = detail::extend_by_prime(phi_extension_chain(n / p).poly, p);
  }
  memo.insert(n, phi, phi.coeffs().size());
  return {n, std::move(phi), Algorithm::PrimeExtension};
}

/// Phi_{gamma(n)} from the extension chain, then z -> z^{n / gamma(n)}.
inline CycloResult phi_squarefree_reduce(std::int64_t n) {
  detail::require_positive(n, "phi_squarefree_reduce");
  const auto g = kernel(n);
  auto base = phi_extension_chain(g);
  return {n, substitute_power(base.poly, static_cast<std::size_t>(n / g)), Algorithm::SquarefreeReduce};
}

/// Phi_{mp} for a prime p not dividing m, through the H-star convolution.
/// Phi_m comes from phi_squarefree_reduce.
inline CycloResult phi_prime_extension(std::int64_t m, std::int64_t p) {
  detail::require_positive(m, "phi_prime_extension");
  detail::require_prime(p, "phi_prime_extension");
  if (m % p == 0)
    throw PreconditionError("phi_prime_extension: " + std::to_string(p) + " divides " + std::to_string(m) +
                            "; use phi_substitute");
  return {m * p, detail::extend_by_prime(phi_squarefree_reduce(m).poly, p), Algorithm::PrimeExtension};
}

namespace detail {

inline CycloResult am_chain_uncached_step(std::int64_t n);

/// Arnold-Monagan on its own chain; Psi_m is divided out of that chain's Phi_m.
inline CycloResult am_chain(std::int64_t n) {
  auto& memo = memo_for<IntPoly>(Algorithm::ArnoldMonagan);
  if (auto hit = memo.find(n)) return {n, std::move(*hit), Algorithm::ArnoldMonagan};
  auto r = am_chain_uncached_step(n);
  memo.insert(n, r.poly, r.poly.coeffs().size());
  return r;
}

inline CycloResult am_chain_uncached_step(std::int64_t n) {
  const auto f = factorize(n);
  if (n == 1) return {1, zn_minus_one(1), Algorithm::ArnoldMonagan};
  const auto p = f.factors.back().prime;
  const auto m = n / p;
  const auto phi_m = am_chain(m).poly;
  return {n, extend_arnold_monagan(m, phi_m, psi_from_phi(m, phi_m), p), Algorithm::ArnoldMonagan};
}

void arnold_monagan_self_test();

}  // namespace detail

/// Phi_{mp} for a prime p not dividing m via the Arnold-Monagan recursion.
/// Phi_m comes from the Arnold-Monagan chain on gamma(m), spread by z^{m / gamma(m)}.
inline CycloResult phi_arnold_monagan(std::int64_t m, std::int64_t p) {
  detail::require_positive(m, "phi_arnold_monagan");
  detail::require_prime(p, "phi_arnold_monagan");
  if (m % p == 0)
    throw PreconditionError("phi_arnold_monagan: " + std::to_string(p) + " divides " + std::to_string(m));
  detail::arnold_monagan_self_test();
  const auto g = kernel(m);
  const auto phi_m = substitute_power(detail::am_chain(g).poly, static_cast<std::size_t>(m / g));
  return {m * p, detail::extend_arnold_monagan(m, phi_m, detail::psi_from_phi(m, phi_m), p),
          Algorithm::ArnoldMonagan};
}

/// Memoized Arnold-Monagan chain for square-free n in ascending prime order.
inline CycloResult phi_arnold_monagan_chain(std::int64_t n) {
  detail::require_positive(n, "phi_arnold_monagan_chain");
  if (!factorize(n).squarefree()) throw PreconditionError("phi_arnold_monagan_chain: n must be square-free");
  detail::arnold_monagan_self_test();
  return detail::am_chain(n);
}

/// Arnold-Monagan chain in a caller-chosen prime order, unmemoized.
inline CycloResult phi_arnold_monagan_chain(std::int64_t n, const std::vector<std::int64_t>& order) {
  const auto f = factorize(n);
  if (!f.squarefree()) throw PreconditionError("phi_arnold_monagan_chain: n must be square-free");
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != f.primes()) throw PreconditionError("phi_arnold_monagan_chain: order must list the primes of n");
  detail::arnold_monagan_self_test();
  IntPoly phi = zn_minus_one(1);
  std::int64_t m = 1;
  for (auto p : order) {
    phi = detail::extend_arnold_monagan(m, phi, detail::psi_from_phi(m, phi), p);
    m *= p;
  }
  return {n, std::move(phi), Algorithm::ArnoldMonagan};
}

namespace detail {

/// The recursion only closes with Psi read in ascending order; fail loudly
/// if Phi_6 does not come out right.
inline void arnold_monagan_self_test() {
  static std::once_flag once;
  std::call_once(once, [] {
    const IntPoly phi2{1, 1};
    const auto got = extend_arnold_monagan(2, phi2, psi_from_phi(2, phi2), 3);
    if (got != phi_mobius(6).poly) throw std::logic_error("Arnold-Monagan self-test failed for Phi_6");
  });
}

}  // namespace detail

/// Whether the named algorithm can produce Phi_n directly.
inline bool applicable(Algorithm a, std::int64_t n) {
  if (n < 1) return false;
  if (a == Algorithm::PrimeExtension || a == Algorithm::ArnoldMonagan) return factorize(n).squarefree();
  return true;
}

inline CycloResult phi(std::int64_t n, Algorithm a = Algorithm::MobiusProduct) {
  switch (a) {
    case Algorithm::MobiusProduct: return phi_mobius(n);
    case Algorithm::PrimeExtension: return phi_extension_chain(n);
    case Algorithm::ArnoldMonagan: return phi_arnold_monagan_chain(n);
    case Algorithm::SquarefreeReduce: return phi_squarefree_reduce(n);
  }
  throw std::logic_error("unknown algorithm");
}

/// Checks the non-primitive-root recursions against exact coefficients:
/// H_k(zeta_{mp}^{**}) = a_{mp}(k) = sum_s H_s(zeta_m^{**}) H_{k-sp}(zeta_m^*) for p not dividing m,
/// and, for the index m p^2 (where p divides mp), H_k(zeta_{mp^2}^{**}) = H_s(zeta_{mp}^{**}) if k = ps, else 0.
/// lhs counts agreeing comparisons, rhs counts comparisons made.
inline IdentityReport hstarstar_check(std::int64_t m, std::int64_t p) {
  detail::require_positive(m, "hstarstar_check");
  detail::require_prime(p, "hstarstar_check");
  if (m % p == 0) throw PreconditionError("hstarstar_check: p must not divide m");
  if (m * p > 200) throw PreconditionError("hstarstar_check: mp must be at most 200 for the complex oracle");

  const std::int64_t mp = m * p;
  const auto phi_m = static_cast<std::size_t>(totient(m));
  const std::size_t K = static_cast<std::size_t>(p - 1) * phi_m;
  const auto up = static_cast<std::size_t>(p);

  const auto exact = phi_mobius(mp);
  const auto h_mp_nonprim = h_table(RootVector::nonprimitive(mp), K);
  const auto h_m_nonprim = h_table(RootVector::nonprimitive(m), K / up);
  const auto h_m_prim = h_table(RootVector::primitive(m), K);

  std::int64_t agree = 0;
  std::int64_t total = 0;
  double worst = 0.0;
  auto compare = [&](const BigInt& want, Complex got) {
    const double dev = std::abs(got - Complex(detail::to_double(want), 0.0));
    worst = std::max(worst, dev);
    ++total;
    agree += dev <= 1e-9 * (1.0 + std::abs(detail::to_double(want)));
  };

  for (std::size_t k = 0; k <= K; ++k) {
    const BigInt a = exact.a(static_cast<std::int64_t>(k));
    Complex rec{};
    for (std::size_t s = 0; s <= k / up; ++s) rec += h_m_nonprim[s] * h_m_prim[k - s * up];
    compare(a, h_mp_nonprim[k]);
    compare(a, rec);
  }

  // p divides mp: Phi_{mp^2}(z) = Phi_{mp}(z^p)
  const std::int64_t big = mp * p;
  int divisible_case = 0;
  if (big <= 600) {
    divisible_case = 1;
    const std::size_t K2 = up * static_cast<std::size_t>(totient(mp));
    const auto h_big = h_table(RootVector::nonprimitive(big), K2);
    const auto exact_big = phi_mobius(big);
    for (std::size_t k = 0; k <= K2; ++k) {
      const Complex want = k % up == 0 ? h_mp_nonprim.size() > k / up ? h_mp_nonprim[k / up]
                                                                      : h_bruteforce(RootVector::nonprimitive(mp), k / up)
                                       : Complex{};
      const double dev = std::abs(h_big[k] - want);
      const BigInt a = exact_big.a(static_cast<std::int64_t>(k));
      worst = std::max(worst, dev);
      ++total;
      agree += dev <= 1e-9 * (1.0 + std::abs(want));
      compare(a, h_big[k]);
    }
  }

  IdentityReport r = make_report(Identity::HStarStarRecursion, "", mp,
                                 {{"m", m}, {"p", p}, {"divisible_case", divisible_case}}, agree, total);
  r.max_deviation = worst;
  return r;
}

}  // namespace cyclokit
