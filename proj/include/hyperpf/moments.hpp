#pragma once

// Weights represented by exact moment sequences m_k = int x^k u(x) dmu(x).

#include <string>
#include <vector>

#include "hyperpf/scalar.hpp"

namespace hyperpf {

enum class WeightKind { kCircular, kGaussian, kJacobi, kCustom };

// Which number stands in for the k-th Gaussian moment. kTrueMoment is
// (k-1)!!. kEvenDoubleFactorial is k!!, which does not satisfy the Mehta
// identity; the evaluation suite keeps it to show that.
enum class GaussianConvention { kTrueMoment, kEvenDoubleFactorial };

Rational circular_moment(long k);
// B(a + k, b) / B(a, b) for integers a, b >= 1.
Rational jacobi_moment(long a, long b, long k);

class MomentFunctional {
 public:
  static MomentFunctional circular();
  static MomentFunctional gaussian(GaussianConvention convention = GaussianConvention::kTrueMoment);
  static MomentFunctional jacobi(long a, long b);
  static MomentFunctional custom(std::vector<Rational> moments);
  // JSON list of "num/den" strings indexed from k = 0.
  static MomentFunctional custom_from_file(const std::string& path);

  WeightKind kind() const { return kind_; }
  std::string name() const;
  long a() const { return a_; }
  long b() const { return b_; }
  GaussianConvention gaussian_convention() const { return convention_; }

  // Negative k only for the circular kind.
  Rational moment(long k) const;

  // sum_k [p]_k m_k for coefficients in any ring T that takes a Rational.
  template <class T>
  T apply(const Poly<T>& p) const {
    T acc(0);
    auto c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (is_zero(c[k])) continue;
      const Rational m = moment(static_cast<long>(k));
      if (!is_zero(m)) acc += T(c[k] * T(m));
    }
    return acc;
  }
  template <class T>
  T apply(const LaurentPoly<T>& p) const {
    T acc(0);
    if (p.zero()) return acc;
    const int low = *p.lowest_exponent();
    auto c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (is_zero(c[i])) continue;
      const Rational m = moment(low + static_cast<long>(i));
      if (!is_zero(m)) acc += T(c[i] * T(m));
    }
    return acc;
  }

 private:
  WeightKind kind_ = WeightKind::kCircular;
  GaussianConvention convention_ = GaussianConvention::kTrueMoment;
  long a_ = 0, b_ = 0;
  std::vector<Rational> custom_;
};

template <class T>
T apply_to_poly(const MomentFunctional& mf, const Poly<T>& p) {
  return mf.apply(p);
}
template <class T>
T apply_to_poly(const MomentFunctional& mf, const LaurentPoly<T>& p) {
  return mf.apply(p);
}

}  // namespace hyperpf
