#pragma once

// Exact checks of the hyperpfaffian evaluation identities. Each returns an
// IdentityReport holding both sides as strings and whether they are equal.

#include <string>
#include <utility>
#include <vector>

#include "hyperpf/moments.hpp"
#include "hyperpf/scalar.hpp"
#include "hyperpf/wronskian.hpp"

namespace hyperpf {

struct IdentityReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  // Variants known to be wrong are run with expect_equal = false.
  bool expect_equal = true;
  std::string note;
  double seconds = 0;

  bool ok() const { return equal == expect_equal; }
};

// (1/M!) (beta M/2)! / ((beta/2)!)^M
Rational dyson_rhs(int beta, int M);
// (1/M!) prod_{n=1}^M (beta n/2)! / (beta/2)!
Rational mehta_rhs(int beta, int M);
// prod_{n<M} G(a+nc) G(b+nc) G((n+1)c+1) / (G(a+b+(M+n-1)c) G(1+c)) with
// integer arguments; c = beta/2.
Rational selberg_product(long a, long b, long c, int M);
// (a-1)!(b-1)!/(a+b-1)!
Rational beta_function(long a, long b);

IdentityReport verify_dyson(int L, int M, WronskianExponent exponent = WronskianExponent::kShifted, int threads = 1);

// kNormalized: moments of the probability weight x^{a-1}(1-x)^{b-1}/B(a,b)
// against the Wronskian exponent, RHS divided by B(a,b)^M.
// kUnnormalized: B(a + Sum t, b)/B(a,b) against the undivided Selberg product.
enum class JacobiForm { kNormalized, kUnnormalized };
enum class JacobiFamily { kMonomial, kShiftedHalf };
IdentityReport verify_jacobi(int L, int M, long a, long b, JacobiForm form = JacobiForm::kNormalized,
                             JacobiFamily family = JacobiFamily::kMonomial, int threads = 1);

IdentityReport verify_gaussian_monomial(int L, int M, GaussianConvention convention = GaussianConvention::kTrueMoment,
                                        WronskianExponent exponent = WronskianExponent::kShifted, int threads = 1);
IdentityReport verify_hermite(int L, int M, int threads = 1);

// kCorrected: coefficient C(beta, d + beta/2) (-y)^{beta/2 - d}, which is
// [x^{-beta/2}(x - y)^beta]_(d). kDeltaPower: C(beta, d + beta/2) (-y)^d.
enum class R1Form { kCorrected, kDeltaPower };
IdentityReport verify_R1(int L, int M, R1Form form = R1Form::kCorrected, int threads = 1);

IdentityReport verify_zero(int N, int L, int threads = 1);
IdentityReport verify_pfaffian_examples();

// L in {2,4}, M in 1..4, plus (6,2), for every normative identity.
std::vector<IdentityReport> run_default_grid(int threads = 1);
// Wrong variants, each expected to differ from its right-hand side.
std::vector<IdentityReport> run_convention_checks(int threads = 1);

}  // namespace hyperpf
