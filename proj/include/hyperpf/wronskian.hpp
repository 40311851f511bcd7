#pragma once

// Complete families of monic polynomials and their Wronskians under the
// renormalized derivative D^l = (1/l!) d^l/dx^l.
// The blade is omega(x) = p(x) ^ D p(x) ^ ... ^ D^{L-1} p(x).

#include <span>
#include <string>
#include <vector>

#include "hyperpf/exterior.hpp"
#include "hyperpf/indexcomb.hpp"
#include "hyperpf/scalar.hpp"

namespace hyperpf {

using QPoly = Poly<Rational>;

enum class FamilyKind { kMonomial, kHermite, kShiftedMonomial, kCustom };

// p_0, ..., p_{N-1}, monic with deg p_n = n.
class PolynomialFamily {
 public:
  static PolynomialFamily monomials(int N);
  // Monic Hermite polynomials for the weight exp(-x^2/2)/sqrt(2 pi):
  // h_{n+1} = x h_n - n h_{n-1}.
  static PolynomialFamily hermite(int N);
  // (x - shift)^n
  static PolynomialFamily shifted_monomials(int N, const Rational& shift);
  static PolynomialFamily custom(std::vector<QPoly> polys);

  FamilyKind kind() const { return kind_; }
  std::string name() const;
  int size() const { return static_cast<int>(polys_.size()); }
  const QPoly& operator[](int n) const { return polys_[static_cast<std::size_t>(n)]; }
  std::span<const QPoly> polynomials() const { return polys_; }
  // First n members, same kind.
  PolynomialFamily truncated(int n) const;

 private:
  PolynomialFamily(FamilyKind kind, std::vector<QPoly> polys, Rational shift = Rational(0));

  FamilyKind kind_ = FamilyKind::kCustom;
  std::vector<QPoly> polys_;
  Rational shift_{0};
};

// Coefficient of x^k in D^l p is C(k + l, l) [p]_{k+l}.
QPoly renormalized_derivative(const QPoly& p, int l);

// det[D^l f_k]_{l,k=0}^{L-1} for arbitrary polynomials f_0..f_{L-1}.
QPoly wronskian(std::span<const QPoly> fs);
QPoly wronskian(const PolynomialFamily& family, const IndexSet& t);

// Determinant over Q[x]: cofactor expansion up to 5x5, fraction-free
// elimination above.
QPoly polynomial_determinant(const Matrix<QPoly>& A);

// Wr(x^{t(0)}, ..., x^{t(L-1)}) = coefficient * x^exponent.
struct MonomialWronskian {
  BigInt coefficient;
  long exponent = 0;
};
// exponent = Sum(t) - L(L-1)/2.
MonomialWronskian monomial_wronskian(const IndexSet& t);

// Exponent convention for x^{...} in the monomial Wronskian: kShifted is
// what the determinant gives; kUnshifted uses Sum(t) as in the older
// statement of the formula and exists only so tests can show it is wrong.
enum class WronskianExponent { kShifted, kUnshifted };
long monomial_wronskian_exponent(const IndexSet& t, WronskianExponent convention);

// Grade-L multivector with coefficient Wr(p_t; x) at e_t.
Multivector<Rational> omega_blade(const PolynomialFamily& family, int L, const Rational& x);

// prod_{m<n} (x_n - x_m)^{L^2}
Rational vandermonde_power_direct(std::span<const Rational> xs, int L);

}  // namespace hyperpf
