#pragma once

// Exact scalar rings. Integers and rationals are GMP; polynomials (dense or
// Laurent) and Gaussian rationals Q(i) are built on top.
//
// Multivector coefficient types satisfy ExactRing: ring operators with value
// semantics, construction from int and a free is_zero().

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperpf/errors.hpp"

namespace hyperpf {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(long x) { return x == 0; }

inline Rational inverse(const Rational& q) {
  if (is_zero(q)) throw ValidationError("inverse of zero");
  return Rational(1 / q);
}

// Reduced rational n/d; d == 0 is rejected.
Rational make_rational(const BigInt& num, const BigInt& den);

// True iff the rational has denominator 1.
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Numerator of an integral rational; throws InvariantError otherwise.
BigInt to_integer(const Rational& q);

BigInt div_exact(const BigInt& a, const BigInt& d);
inline Rational div_exact(const Rational& a, const BigInt& d) {
  if (is_zero(d)) throw ValidationError("division by zero");
  return Rational(a / Rational(d));
}

std::string to_string(const BigInt& x);
// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);
BigInt parse_bigint(std::string_view s);
// Accepts "n", "-n", "n/d".
Rational parse_rational(std::string_view s);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt pow_int(const BigInt& base, unsigned long e);
Rational pow_int(const Rational& base, long e);

// (beta*M/2)! / ((beta/2)!)^M, the central multinomial coefficient.
BigInt multinomial_central(int beta, int M);

// k * (k-2) * ... * 4 * 2 for even k >= 0.
BigInt double_factorial_even(int k);

// Moments of the standard normal: (k-1)!! for even k, 0 for odd k.
BigInt gaussian_moment(int k);

template <class R>
concept ExactRing = std::copyable<R> && std::equality_comparable<R> &&
    requires(R a, const R& b) {
      R(0);
      R(1);
      { R(a + b) };
      { R(a - b) };
      { R(a * b) };
      { R(-b) };
      a += b;
      a -= b;
      { is_zero(b) } -> std::same_as<bool>;
    };

// ---------------------------------------------------------------------------
// Poly<T>: dense univariate polynomial, coefficient index = degree.

template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(int v) : Poly(T(v)) {}  // NOLINT(google-explicit-constructor)
  Poly(const T& v) {           // NOLINT(google-explicit-constructor)
    if (!is_zero(v)) c_.push_back(v);
  }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const T& coeff, std::size_t k) {
    if (is_zero(coeff)) return {};
    std::vector<T> c(k + 1, T(0));
    c[k] = coeff;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  bool zero() const { return c_.empty(); }
  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const { return c_.back(); }
  std::span<const T> coefficients() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = T(-v);
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += T(a.c_[i] * b.c_[j]);
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly scaled(const T& s) const {
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(T(v * s));
    return Poly(std::move(out));
  }

  // Horner evaluation in any ring U that accepts T coefficients.
  template <class U>
  U eval(const U& at) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = U(acc * at) + U(c_[i]);
    return acc;
  }

  // p(x) -> p(g(x)).
  Poly compose(const Poly& g) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
    return acc;
  }

  template <class U, class F>
  Poly<U> map(F&& f) const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(f(v));
    return Poly<U>(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.zero();
}

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned e) {
  Poly<T> result(1), b = base;
  while (e) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

template <class T>
Poly<T> div_exact(const Poly<T>& p, const BigInt& d) {
  std::vector<T> out;
  out.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) out.push_back(div_exact(v, d));
  return Poly<T>(std::move(out));
}

// Polynomial long division over a field; throws InvariantError on a nonzero
// remainder.
Poly<Rational> div_exact(const Poly<Rational>& num, const Poly<Rational>& den);
std::pair<Poly<Rational>, Poly<Rational>> divmod(const Poly<Rational>& num,
                                                 const Poly<Rational>& den);

inline Poly<Rational> to_rational(const Poly<BigInt>& p) {
  return p.map<Rational>([](const BigInt& v) { return Rational(v); });
}
// Throws InvariantError if some coefficient is not an integer.
Poly<BigInt> to_integer(const Poly<Rational>& p);

// "12870*y^32 + 320320*y^30 - ... + 4465830320120", highest degree first.
template <class T>
std::string format_poly(const Poly<T>& p, std::string_view var) {
  if (p.zero()) return "0";
  std::string out;
  auto coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (is_zero(coeffs[i])) continue;
    std::string c = to_string(coeffs[i]);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += c;
    if (i >= 1) out += "*" + std::string(var);
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly<T>: sum of c_j x^j for j in [low, low + size).

template <class T>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int v) : LaurentPoly(T(v)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const T& v) {                  // NOLINT(google-explicit-constructor)
    if (!is_zero(v)) c_.push_back(v);
  }
  LaurentPoly(int low, std::vector<T> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

  static LaurentPoly monomial(const T& coeff, int e) { return LaurentPoly(e, {coeff}); }
  static LaurentPoly from_poly(const Poly<T>& p, int shift = 0) {
    auto c = p.coefficients();
    return LaurentPoly(shift, std::vector<T>(c.begin(), c.end()));
  }

  bool zero() const { return c_.empty(); }
  std::optional<int> lowest_exponent() const {
    if (zero()) return std::nullopt;
    return low_;
  }
  std::optional<int> highest_exponent() const {
    if (zero()) return std::nullopt;
    return low_ + static_cast<int>(c_.size()) - 1;
  }
  // Coefficient of x^j; zero outside the stored support.
  T coefficient(int j) const {
    if (zero() || j < low_ || j >= low_ + static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<std::size_t>(j - low_)];
  }
  std::span<const T> coefficients() const { return c_; }

  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    r.low_ += k;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = combine(*this, o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = combine(*this, o, true); }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return combine(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return combine(a, b, true);
  }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& v : a.c_) v = T(-v);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += T(a.c_[i] * b.c_[j]);
    }
    return LaurentPoly(a.low_ + b.low_, std::move(out));
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_ && (a.zero() || a.low_ == b.low_);
  }

  // Evaluation at an invertible point; U must provide inverse(U).
  template <class U>
  U eval(const U& at) const {
    if (zero()) return U(0);
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = U(acc * at) + U(c_[i]);
    U scale(1);
    if (low_ > 0) {
      for (int k = 0; k < low_; ++k) scale = U(scale * at);
    } else if (low_ < 0) {
      U inv = inverse(at);
      for (int k = 0; k < -low_; ++k) scale = U(scale * inv);
    }
    return U(acc * scale);
  }

 private:
  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (b.zero()) return a;
    if (a.zero()) return subtract ? -b : b;
    int lo = std::min(a.low_, b.low_);
    int hi = std::max(*a.highest_exponent(), *b.highest_exponent());
    std::vector<T> out(static_cast<std::size_t>(hi - lo + 1), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i + static_cast<std::size_t>(a.low_ - lo)] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      auto& slot = out[i + static_cast<std::size_t>(b.low_ - lo)];
      if (subtract) {
        slot -= b.c_[i];
      } else {
        slot += b.c_[i];
      }
    }
    return LaurentPoly(lo, std::move(out));
  }
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && is_zero(c_[lead])) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    if (c_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<T> c_;
};

template <class T>
bool is_zero(const LaurentPoly<T>& p) {
  return p.zero();
}

template <class T>
LaurentPoly<T> pow(const LaurentPoly<T>& base, unsigned e) {
  LaurentPoly<T> result(1), b = base;
  while (e) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

template <class T>
LaurentPoly<T> div_exact(const LaurentPoly<T>& p, const BigInt& d) {
  if (p.zero()) return p;
  std::vector<T> out;
  for (const auto& v : p.coefficients()) out.push_back(div_exact(v, d));
  return LaurentPoly<T>(*p.lowest_exponent(), std::move(out));
}

// ---------------------------------------------------------------------------
// GaussianRational: re + i*im with rational parts. Exact points on the unit
// circle live here.

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}                // NOLINT(google-explicit-constructor)
  GaussianRational(const BigInt& v) : re_(v) {}      // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& v) : re_(v) {}    // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  GaussianRational conj() const { return {re_, Rational(-im_)}; }
  Rational norm2() const { return Rational(re_ * re_ + im_ * im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {Rational(-a.re_), Rational(-a.im_)};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re_ * b.re_ - a.im_ * b.im_), Rational(a.re_ * b.im_ + a.im_ * b.re_)};
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const GaussianRational& z) { return is_zero(z.real()) && is_zero(z.imag()); }
GaussianRational inverse(const GaussianRational& z);
GaussianRational pow_int(const GaussianRational& z, long e);
inline GaussianRational div_exact(const GaussianRational& z, const BigInt& d) {
  return {div_exact(z.real(), d), div_exact(z.imag(), d)};
}
std::string to_string(const GaussianRational& z);

// Point on the unit circle from the Pythagorean parametrization
// t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
GaussianRational unit_circle_point(const Rational& t);
bool on_unit_circle(const GaussianRational& z);

// ---------------------------------------------------------------------------
// Small dense matrix, row-major.

template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> data_;
};

}  // namespace hyperpf
