#pragma once

// Circular correlation functions. The pair correlation r(y) is a sum over the
// offset multisets E; R_m for general m is evaluated at exact points.

#include <string>
#include <vector>

#include "hyperpf/gram.hpp"
#include "hyperpf/scalar.hpp"

namespace hyperpf {

// kAngle: density in d(theta), carrying 1/(2 pi). kHaar: density against
// the Haar probability measure.
enum class DensityConvention { kAngle, kHaar };
std::string to_string(DensityConvention c);

// [(x + 1/x - c)^beta]_j from the binomial double sum, skipping the terms
// with l and |j| of different parity.
Poly<BigInt> b_coefficient(int j, int beta);

struct CorrelationReport {
  int beta = 0;
  int L = 0;
  int M = 0;
  int m = 2;
  BigInt falling_factorial;     // M! / (M-2)!
  BigInt central_multinomial;   // (beta M/2)! / ((beta/2)!)^M
  DensityConvention convention = DensityConvention::kAngle;
  Poly<BigInt> r;               // in y = 2 cos theta
  std::vector<BigInt> fourier;  // coefficient of cos(k theta), k = 0..deg r
  std::size_t multisets = 0;    // #E

  // falling_factorial / central_multinomial; the 1/(2 pi) of kAngle is kept
  // symbolic.
  Rational normalization() const;
};

// Work estimate for pair_correlation: offset multisets before the zero-sum
// filter times the middle binomial C(n', n'/2), n' = L(M-2), which bounds the
// wedge prefix sizes. Measured at roughly 2e-10 s per unit on one core.
BigInt pair_work_estimate(int beta, int M);
// Admits beta = 4 with M <= 13, beta = 16 with M <= 7, beta = 36 with M <= 5.
inline constexpr unsigned long kPairWorkBudget = 100000000000UL;

// Pair correlation of the circular ensemble with beta = L^2, L even:
// R_2(theta) = normalization * (2 sin theta)^beta * r(2 cos theta) [/ 2 pi].
CorrelationReport pair_correlation(int beta, int M, int threads = 1,
                                   DensityConvention convention = DensityConvention::kAngle);

// r(y) from star(gamma_y^(M-2)) = (M-2)! PF(gamma_y) instead of the E-sum.
Poly<BigInt> pair_r_via_hyperpfaffian(int L, int M, DeltaConvention convention = DeltaConvention::kPlus,
                                      int threads = 1);

// r(z + 1/z) as a Laurent polynomial in z.
LaurentPoly<BigInt> expand_in_z(const Poly<BigInt>& r);
// Constant term, then coefficients of cos(k theta) for k >= 1.
std::vector<BigInt> fourier_coefficients(const Poly<BigInt>& r);

// int_0^{2 pi} R_2(theta) d(theta) under the angle convention (equivalently
// the Haar mean); should equal M(M-1).
Rational pair_mass(const CorrelationReport& report);

struct SampleRow {
  double theta;
  double value;
};
// theta uniform on [0, pi]; each value is computed exactly at the double
// nearest 2 cos theta and rounded at the end.
std::vector<SampleRow> sample_for_plot(const CorrelationReport& report, int points);
// Exact R_2 value (without 1/(2 pi)) at y = 2 cos theta.
Rational pair_value_exact(const CorrelationReport& report, const Rational& y);

struct RmResult {
  int beta = 0;
  int M = 0;
  int m = 0;
  Rational vandermonde_power;  // prod_{j<k} |y_k - y_j|^beta
  GaussianRational phase;      // prod_n y_n^{-beta(M-m)/2}
  GaussianRational pf;         // PF(gamma_y), 1 when m = M
  GaussianRational total;      // M!/C times the three factors (Haar convention)
  bool coincident = false;
};
RmResult r_m_circular(int beta, int M, const std::vector<GaussianRational>& ys, int threads = 1,
                      DeltaConvention convention = DeltaConvention::kPlus);

// beta must be L^2 with L even and positive; returns L.
int even_square_root(int beta);
bool is_even_square(int beta);

}  // namespace hyperpf
