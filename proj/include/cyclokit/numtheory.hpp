#pragma once

// Prime factorization and the multiplicative functions built on it:
// Moebius mu, Euler phi, the square-free kernel gamma and omega.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cyclokit {

/// Thrown when a caller violates an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n together with its prime powers in ascending prime order.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimePower> factors;

  int omega() const { return static_cast<int>(factors.size()); }

  bool squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
  }

  std::vector<std::int64_t> primes() const {
    std::vector<std::int64_t> out;
    out.reserve(factors.size());
    for (const auto& pp : factors) out.push_back(pp.prime);
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// {m}_k: the representative of m modulo k in [0, k), also for negative m.
inline std::int64_t residue(std::int64_t m, std::int64_t k) {
  if (k <= 0) throw PreconditionError("residue: modulus must be positive, got " + std::to_string(k));
  std::int64_t r = m % k;
  return r < 0 ? r + k : r;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

inline void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) throw PreconditionError(std::string(what) + ": expected a positive integer, got " + std::to_string(n));
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are exact below 2^64.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const auto un = static_cast<std::uint64_t>(n);
  for (std::uint64_t p : bases) {
    if (un % p == 0) return un == p;
  }
  std::uint64_t d = un - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : bases) {
    std::uint64_t x = detail::powmod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Trial division up to sqrt(n); stops early once the cofactor is prime.
inline Factorization factorize_uncached(std::int64_t n) {
  detail::require_positive(n, "factorize");
  Factorization f;
  f.n = n;
  std::int64_t rest = n;
  bool rest_prime = false;
  auto strip = [&](std::int64_t p) {
    if (rest % p != 0) return;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
    rest_prime = rest > 1 && is_prime(rest);
  };
  strip(2);
  strip(3);
  if (!rest_prime) rest_prime = rest > 1 && is_prime(rest);
  for (std::int64_t p = 5; !rest_prime && p <= rest / p; p += 6) {
    strip(p);
    if (!rest_prime) strip(p + 2);
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

/// Largest n kept in the per-process factorization cache.
inline constexpr std::int64_t kFactorCacheLimit = std::int64_t{1} << 22;

inline Factorization factorize(std::int64_t n) {
  detail::require_positive(n, "factorize");
  if (n > kFactorCacheLimit) return factorize_uncached(n);

  static std::mutex mutex;
  static std::unordered_map<std::int64_t, Factorization> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Factorization f = factorize_uncached(n);
  std::lock_guard lock(mutex);
  cache.emplace(n, f);
  return f;
}

inline int mobius(const Factorization& f) {
  if (!f.squarefree()) return 0;
  return f.omega() % 2 == 0 ? 1 : -1;
}

inline std::int64_t totient(const Factorization& f) {
  std::int64_t result = f.n;
  for (const auto& pp : f.factors) result = result / pp.prime * (pp.prime - 1);
  return result;
}

/// gamma(n): product of the distinct primes dividing n, gamma(1) = 1.
inline std::int64_t kernel(const Factorization& f) {
  std::int64_t g = 1;
  for (const auto& pp : f.factors) g *= pp.prime;
  return g;
}

/// Ascending divisors of n; with squarefree_only, exactly the divisors of gamma(n).
inline std::vector<std::int64_t> divisors(const Factorization& f, bool squarefree_only = false) {
  std::vector<std::int64_t> out{1};
  for (const auto& pp : f.factors) {
    const int top = squarefree_only ? 1 : pp.exponent;
    const std::size_t base = out.size();
    std::int64_t power = 1;
    for (int e = 1; e <= top; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int mobius(std::int64_t n) { return mobius(factorize(n)); }
inline std::int64_t totient(std::int64_t n) { return totient(factorize(n)); }
inline std::int64_t kernel(std::int64_t n) { return kernel(factorize(n)); }

/// A divisor d of gamma(n) together with omega(d) and the shift
/// sum_{p|d} n/p (zero for d = 1) that indexes the shifted residue classes.
struct KernelDivisor {
  std::int64_t d = 1;
  int omega = 0;
  std::int64_t shift = 0;

  int sign() const { return omega % 2 == 0 ? 1 : -1; }
};

/// Every divisor of gamma(f.n) with its shift, ascending in d.
inline std::vector<KernelDivisor> kernel_divisors(const Factorization& f) {
  std::vector<KernelDivisor> out{{1, 0, 0}};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      const auto& kd = out[i];
      out.push_back({kd.d * pp.prime, kd.omega + 1, kd.shift + f.n / pp.prime});
    }
  }
  std::sort(out.begin(), out.end(), [](const KernelDivisor& a, const KernelDivisor& b) { return a.d < b.d; });
  return out;
}

}  // namespace cyclokit
