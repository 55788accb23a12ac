#pragma once

// Dense univariate polynomials over an exact coefficient ring, stored in
// ascending order: coeffs()[i] multiplies z^i.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "numtheory.hpp"

namespace cyclokit {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Raised by div_exact when the divisor leaves a nonzero remainder.
class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  Poly(std::initializer_list<T> ascending) : c_(ascending) { normalize(); }
  explicit Poly(std::vector<T> ascending) : c_(std::move(ascending)) { normalize(); }

  static Poly constant(T value) { return Poly(std::vector<T>{std::move(value)}); }

  /// value * z^k
  static Poly monomial(T value, std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = std::move(value);
    return Poly(std::move(c));
  }

  /// Builds from a_0, ..., a_m where a_0 multiplies z^m.
  static Poly from_descending(std::vector<T> descending) {
    std::reverse(descending.begin(), descending.end());
    return Poly(std::move(descending));
  }

  const std::vector<T>& coeffs() const { return c_; }

  /// a_0, ..., a_m with a_0 the leading coefficient; empty for the zero polynomial.
  std::vector<T> descending() const { return {c_.rbegin(), c_.rend()}; }

  bool is_zero() const { return c_.empty(); }

  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }

  /// Coefficient of z^i, zero past the degree.
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }

  /// Descending-index coefficient a_j = coeff(deg - j), zero outside [0, deg].
  T desc_coeff(std::ptrdiff_t j) const {
    if (j < 0 || j > degree()) return T{};
    return c_[static_cast<std::size_t>(degree() - j)];
  }

  const T& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const T& x) { return x != T{}; }));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  /// Schoolbook product; zero coefficients of the sparser factor are skipped.
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Poly& sparse = a.nonzero_count() <= b.nonzero_count() ? a : b;
    const Poly& dense = &sparse == &a ? b : a;
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < sparse.c_.size(); ++i) {
      const T& x = sparse.c_[i];
      if (x == T{}) continue;
      for (std::size_t j = 0; j < dense.c_.size(); ++j) {
        if (dense.c_[j] != T{}) out[i + j] += x * dense.c_[j];
      }
    }
    return Poly(std::move(out));
  }

  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using ComplexPoly = Poly<Complex>;

/// z^n - 1
inline IntPoly zn_minus_one(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  c[0] = -1;
  c[n] += 1;
  return IntPoly(std::move(c));
}

/// p(z^k)
template <class T>
Poly<T> substitute_power(const Poly<T>& p, std::size_t k) {
  if (k == 0) throw PreconditionError("substitute_power: exponent must be positive");
  if (p.is_zero()) return {};
  std::vector<T> c(static_cast<std::size_t>(p.degree()) * k + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i * k] = p.coeffs()[i];
  return Poly<T>(std::move(c));
}

/// z^deg p(1/z): the coefficient list read backwards.
template <class T>
Poly<T> reciprocal(const Poly<T>& p) {
  return Poly<T>(p.descending());
}

/// Quotient and remainder of a long division.
template <class T>
struct DivisionResult {
  Poly<T> quotient;
  Poly<T> remainder;
  std::size_t op_count = 0;
};

namespace detail {

/// Long division from the top. Every quotient coefficient must be an exact
/// multiple of den's leading coefficient; otherwise NonExactDivision.
template <class T>
DivisionResult<T> long_division(const Poly<T>& num, const Poly<T>& den) {
  if (den.is_zero()) throw PreconditionError("division by the zero polynomial");
  DivisionResult<T> out;
  if (num.degree() < den.degree()) {
    out.remainder = num;
    return out;
  }
  std::vector<T> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  const T& lead = d.back();
  const bool unit_lead = lead == T{1} || lead == T{-1};

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < dd; ++i) {
    if (d[i] != T{}) support.push_back(i);
  }

  std::vector<T> q(rem.size() - dd);
  for (std::size_t k = q.size(); k-- > 0;) {
    T& top = rem[k + dd];
    if (top == T{}) continue;
    if (unit_lead) {
      q[k] = lead == T{1} ? top : T(-top);
    } else {
      if (top % lead != T{}) throw NonExactDivision("quotient coefficient is not an integer");
      q[k] = top / lead;
    }
    for (std::size_t i : support) rem[k + i] -= q[k] * d[i];
    out.op_count += support.size() + 1;
    top = T{};
  }
  out.quotient = Poly<T>(std::move(q));
  out.remainder = Poly<T>(std::move(rem));
  return out;
}

}  // namespace detail

/// Quotient and remainder when den's leading coefficient is a unit.
template <class T>
DivisionResult<T> divmod(const Poly<T>& num, const Poly<T>& den) {
  if (!den.is_zero() && den.leading() != T{1} && den.leading() != T{-1})
    throw PreconditionError("divmod: divisor must have leading coefficient +1 or -1");
  return detail::long_division(num, den);
}

/// num / den, which must divide num exactly.
template <class T>
Poly<T> div_exact(const Poly<T>& num, const Poly<T>& den) {
  auto r = detail::long_division(num, den);
  if (!r.remainder.is_zero()) throw NonExactDivision("nonzero remainder of degree " + std::to_string(r.remainder.degree()));
  return std::move(r.quotient);
}

/// Ascending truncation of a power series modulo z^(K+1); always K+1 entries.
template <class T>
struct SeriesPrefix {
  std::vector<T> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  const T& operator[](std::size_t i) const { return coeffs[i]; }
  friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;
};

/// q with p * q == 1 mod z^(K+1). Requires p(0) = +1 or -1.
template <class T>
SeriesPrefix<T> series_inverse(const Poly<T>& p, std::size_t K) {
  const T c0 = p.coeff(0);
  if (c0 != T{1} && c0 != T{-1}) throw PreconditionError("series_inverse: constant term must be +1 or -1");
  const auto& a = p.coeffs();
  std::vector<std::size_t> support;
  for (std::size_t i = 1; i < a.size() && i <= K; ++i) {
    if (a[i] != T{}) support.push_back(i);
  }
  SeriesPrefix<T> out;
  out.coeffs.assign(K + 1, T{});
  out.coeffs[0] = c0;
  for (std::size_t k = 1; k <= K; ++k) {
    T acc{};
    for (std::size_t i : support) {
      if (i > k) break;
      acc += a[i] * out.coeffs[k - i];
    }
    // c0 is its own inverse
    out.coeffs[k] = c0 == T{1} ? T(-acc) : acc;
  }
  return out;
}

namespace detail {

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(std::int64_t x) { return static_cast<double>(x); }
inline Complex to_complex(const BigInt& x) { return {to_double(x), 0.0}; }
inline Complex to_complex(const Complex& x) { return x; }
inline double magnitude(const BigInt& x) { return std::abs(to_double(x)); }
inline double magnitude(const Complex& x) { return std::abs(x); }

}  // namespace detail

/// Horner evaluation in double-precision complex arithmetic.
template <class T>
Complex eval_complex(const Poly<T>& p, Complex z) {
  Complex acc{0.0, 0.0};
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + detail::to_complex(c[i]);
  return acc;
}

/// Values below 1e-9 * (1 + sum |coeff|) count as zero in complex oracles.
template <class T>
double oracle_tolerance(const Poly<T>& p) {
  double s = 1.0;
  for (const auto& x : p.coeffs()) s += detail::magnitude(x);
  return 1e-9 * s;
}

template <class T>
bool is_numeric_root(const Poly<T>& p, Complex z) {
  return std::abs(eval_complex(p, z)) <= oracle_tolerance(p);
}

/// Converts an integer polynomial to complex coefficients.
inline ComplexPoly to_complex_poly(const IntPoly& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(detail::to_complex(x));
  return ComplexPoly(std::move(c));
}

}  // namespace cyclokit
