#include "hyperpf/evaluations.hpp"

#include <chrono>

#include "hyperpf/exterior.hpp"
#include "hyperpf/gram.hpp"

namespace hyperpf {

Rational dyson_rhs(int beta, int M) {
  return make_rational(multinomial_central(beta, M), factorial(static_cast<unsigned long>(M)));
}

Rational mehta_rhs(int beta, int M) {
  if (beta % 2 != 0) throw ValidationError("beta must be even");
  const long h = beta / 2;
  Rational r(1);
  for (int n = 1; n <= M; ++n) r *= make_rational(factorial(static_cast<unsigned long>(h * n)), factorial(static_cast<unsigned long>(h)));
  return div_exact(r, factorial(static_cast<unsigned long>(M)));
}

namespace {

// Gamma(k) for a positive integer k.
BigInt gamma_int(long k) {
  if (k < 1) throw ValidationError("Gamma argument must be a positive integer here");
  return factorial(static_cast<unsigned long>(k - 1));
}

// Dense forms (Jacobi, Gaussian) go through the expansion route, sparse
// ones through the wedge power.
template <ExactRing R>
R compute_pf(const Multivector<R>& w, int M, int threads) {
  if (M >= 3 && w.size() > 256) return hyperpfaffian_expansion(w);
  return hyperpfaffian(w, M, threads);
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_L(int L) {
  if (L < 2 || L % 2 != 0) throw ValidationError("L must be an even integer >= 2");
}

std::string exponent_name(WronskianExponent e) {
  return e == WronskianExponent::kShifted ? "Sum(t)-L(L-1)/2" : "Sum(t)";
}

}  // namespace

Rational selberg_product(long a, long b, long c, int M) {
  Rational r(1);
  for (long n = 0; n < M; ++n) {
    const BigInt num = gamma_int(a + n * c) * gamma_int(b + n * c) * gamma_int((n + 1) * c + 1);
    const BigInt den = gamma_int(a + b + (M + n - 1) * c) * gamma_int(1 + c);
    r *= make_rational(num, den);
  }
  return r;
}

Rational beta_function(long a, long b) {
  return make_rational(BigInt(gamma_int(a) * gamma_int(b)), gamma_int(a + b));
}

IdentityReport verify_dyson(int L, int M, WronskianExponent exponent, int threads) {
  check_L(L);
  Timer timer;
  IdentityReport r;
  r.id = "dyson";
  r.parameters = {{"L", std::to_string(L)}, {"M", std::to_string(M)}, {"exponent", exponent_name(exponent)}};
  const auto gamma = monomial_gram_vector(L, M, MomentFunctional::circular(), exponent);
  const Rational lhs = gamma.zero() ? Rational(0) : hyperpfaffian(gamma, M, threads);
  const Rational rhs = dyson_rhs(L * L, M);
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.equal = lhs == rhs;
  r.expect_equal = exponent == WronskianExponent::kShifted;
  r.note = std::to_string(gamma.size()) + " terms";
  r.seconds = timer.seconds();
  return r;
}

IdentityReport verify_jacobi(int L, int M, long a, long b, JacobiForm form, JacobiFamily family, int threads) {
  check_L(L);
  Timer timer;
  IdentityReport r;
  r.id = "jacobi";
  r.parameters = {{"L", std::to_string(L)},
                  {"M", std::to_string(M)},
                  {"a", std::to_string(a)},
                  {"b", std::to_string(b)},
                  {"form", form == JacobiForm::kNormalized ? "normalized" : "unnormalized"},
                  {"family", family == JacobiFamily::kMonomial ? "monomial" : "shifted_monomial(1/2)"}};
  const long c = L * L / 2;
  const MomentFunctional weight = MomentFunctional::jacobi(a, b);
  Multivector<Rational> gamma;
  if (form == JacobiForm::kUnnormalized) {
    if (family != JacobiFamily::kMonomial) throw ValidationError("unnormalized Jacobi form is defined for monomials only");
    gamma = monomial_gram_vector(L, M, weight, WronskianExponent::kUnshifted);
  } else if (family == JacobiFamily::kMonomial) {
    gamma = monomial_gram_vector(L, M, weight, WronskianExponent::kShifted);
  } else {
    EnsembleSpec spec{L, M, weight, PolynomialFamily::shifted_monomials(L * M, Rational(1, 2))};
    gamma = gram_vector(spec);
  }
  const Rational lhs = compute_pf(gamma, M, threads);
  Rational rhs = div_exact(selberg_product(a, b, c, M), factorial(static_cast<unsigned long>(M)));
  if (form == JacobiForm::kNormalized) rhs /= pow_int(beta_function(a, b), M);
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.equal = lhs == rhs;
  r.expect_equal = form == JacobiForm::kNormalized;
  r.seconds = timer.seconds();
  return r;
}

IdentityReport verify_gaussian_monomial(int L, int M, GaussianConvention convention, WronskianExponent exponent,
                                        int threads) {
  check_L(L);
  Timer timer;
  IdentityReport r;
  r.id = "gaussian_monomial";
  r.parameters = {{"L", std::to_string(L)},
                  {"M", std::to_string(M)},
                  {"moment", convention == GaussianConvention::kTrueMoment ? "(k-1)!!" : "k!!"},
                  {"exponent", exponent_name(exponent)}};
  const auto gamma = monomial_gram_vector(L, M, MomentFunctional::gaussian(convention), exponent);
  const Rational lhs = gamma.zero() ? Rational(0) : compute_pf(gamma, M, threads);
  const Rational rhs = mehta_rhs(L * L, M);
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.equal = lhs == rhs;
  r.expect_equal = convention == GaussianConvention::kTrueMoment && exponent == WronskianExponent::kShifted;
  r.seconds = timer.seconds();
  return r;
}

IdentityReport verify_hermite(int L, int M, int threads) {
  check_L(L);
  Timer timer;
  IdentityReport r;
  r.id = "hermite";
  r.parameters = {{"L", std::to_string(L)}, {"M", std::to_string(M)}};
  EnsembleSpec spec{L, M, MomentFunctional::gaussian(), PolynomialFamily::hermite(L * M)};
  const Rational lhs = compute_pf(gram_vector(spec), M, threads);
  const auto mono = monomial_gram_vector(L, M, MomentFunctional::gaussian());
  const Rational mono_pf = compute_pf(mono, M, threads);
  const Rational rhs = mehta_rhs(L * L, M);
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.equal = lhs == rhs && lhs == mono_pf;
  r.note = std::string("monomial route ") + (lhs == mono_pf ? "agrees" : "differs: " + to_string(mono_pf));
  r.seconds = timer.seconds();
  return r;
}

IdentityReport verify_R1(int L, int M, R1Form form, int threads) {
  check_L(L);
  if (M < 2) throw ValidationError("R1 identity needs M >= 2");
  Timer timer;
  IdentityReport r;
  r.id = "R1";
  r.parameters = {{"L", std::to_string(L)},
                  {"M", std::to_string(M)},
                  {"form", form == R1Form::kCorrected ? "(-y)^(beta/2-delta)" : "(-y)^delta"}};
  const int beta = L * L;
  const int n_prime = L * (M - 1);
  TermAccumulator<LaurentPoly<BigInt>> acc;
  for_each_subset(n_prime, L, DeltaWithin{beta / 2}, [&](const IndexSet& u) {
    const long d = delta_of(u, n_prime, L);
    const long e = form == R1Form::kCorrected ? beta / 2 - d : d;
    BigInt coeff = binomial(beta, d + beta / 2) * vandermonde_ratio(u);
    if (e % 2 != 0) coeff = -coeff;
    acc.add(u.mask(), LaurentPoly<BigInt>::monomial(coeff, static_cast<int>(e)));
  });
  const auto gamma = std::move(acc).finish(n_prime, L);
  const LaurentPoly<BigInt> lhs = hyperpfaffian(gamma, M - 1, threads);
  const LaurentPoly<BigInt> rhs = LaurentPoly<BigInt>::monomial(
      div_exact(multinomial_central(beta, M), factorial(static_cast<unsigned long>(M - 1))), beta * (M - 1) / 2);
  auto show = [](const LaurentPoly<BigInt>& p) {
    if (p.zero()) return std::string("0");
    const int low = *p.lowest_exponent();
    std::string s = format_poly(Poly<BigInt>(std::vector<BigInt>(p.coefficients().begin(), p.coefficients().end())), "y");
    if (low != 0) s = "y^" + std::to_string(low) + " * (" + s + ")";
    return s;
  };
  r.lhs = show(lhs);
  r.rhs = show(rhs);
  r.equal = lhs == rhs;
  r.expect_equal = form == R1Form::kCorrected;
  r.seconds = timer.seconds();
  return r;
}

IdentityReport verify_zero(int N, int L, int threads) {
  check_L(L);
  if (N % L != 0 || N / L < 2) throw ValidationError("zero identity needs N = L*M with M >= 2");
  Timer timer;
  IdentityReport r;
  r.id = "zero";
  r.parameters = {{"N", std::to_string(N)}, {"L", std::to_string(L)}};
  TermAccumulator<Poly<BigInt>> acc;
  for_each_subset(N, L, NoConstraint{}, [&](const IndexSet& t) {
    acc.add(t.mask(), Poly<BigInt>::monomial(vandermonde_ratio(t), static_cast<std::size_t>(sum_of(t))));
  });
  const auto form = std::move(acc).finish(N, L);
  const Poly<BigInt> lhs = hyperpfaffian(form, N / L, threads);
  r.lhs = format_poly(lhs, "x");
  r.rhs = "0";
  r.equal = lhs.zero();
  r.seconds = timer.seconds();
  return r;
}

IdentityReport verify_pfaffian_examples() {
  Timer timer;
  IdentityReport r;
  r.id = "pfaffian_examples";
  bool all = true;
  std::string detail;
  // Block diagonal with blocks c_k: Pf = prod c_k.
  {
    const std::vector<long> c{2, 3, 5};
    Matrix<BigInt> A(6, 6);
    for (std::size_t k = 0; k < c.size(); ++k) {
      A(2 * k, 2 * k + 1) = c[k];
      A(2 * k + 1, 2 * k) = -c[k];
    }
    const BigInt wedge_route = hyperpfaffian(two_vector_from_matrix(A), 3);
    const BigInt classical = pfaffian_classical(A);
    all = all && wedge_route == 30 && classical == 30;
    detail += "diagonal(2,3,5): " + to_string(wedge_route) + "/" + to_string(classical);
  }
  // All ones above the diagonal: Pf = 1.
  for (int M = 1; M <= 5; ++M) {
    Matrix<BigInt> A(2 * static_cast<std::size_t>(M), 2 * static_cast<std::size_t>(M));
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = i + 1; j < A.cols(); ++j) {
        A(i, j) = 1;
        A(j, i) = -1;
      }
    const BigInt wedge_route = hyperpfaffian(two_vector_from_matrix(A), M);
    const BigInt classical = pfaffian_classical(A);
    all = all && wedge_route == 1 && classical == 1;
    detail += "; ones(M=" + std::to_string(M) + "): " + to_string(wedge_route) + "/" + to_string(classical);
  }
  r.lhs = all ? "1 (all)" : "mismatch";
  r.rhs = "30 for diagonal(2,3,5); 1 for all-ones, M <= 5";
  r.equal = all;
  r.note = detail;
  r.seconds = timer.seconds();
  return r;
}

std::vector<IdentityReport> run_default_grid(int threads) {
  std::vector<IdentityReport> out;
  std::vector<std::pair<int, int>> grid;
  for (int L : {2, 4})
    for (int M = 1; M <= 4; ++M) grid.emplace_back(L, M);
  grid.emplace_back(6, 2);
  for (auto [L, M] : grid) out.push_back(verify_dyson(L, M, WronskianExponent::kShifted, threads));
  for (auto [L, M] : grid) {
    if (L * M > 12) continue;
    out.push_back(verify_gaussian_monomial(L, M, GaussianConvention::kTrueMoment, WronskianExponent::kShifted, threads));
    out.push_back(verify_hermite(L, M, threads));
  }
  for (int L : {2, 4})
    for (int M = 1; M <= 3; ++M)
      for (long a : {1, 2, 3})
        for (long b : {1, 2, 3})
          out.push_back(verify_jacobi(L, M, a, b, JacobiForm::kNormalized, JacobiFamily::kMonomial, threads));
  out.push_back(verify_jacobi(2, 2, 2, 3, JacobiForm::kNormalized, JacobiFamily::kShiftedHalf, threads));
  out.push_back(verify_jacobi(4, 2, 1, 2, JacobiForm::kNormalized, JacobiFamily::kShiftedHalf, threads));
  for (auto [L, M] : grid) {
    if (M < 2 || L * (M - 1) > 8) continue;
    out.push_back(verify_R1(L, M, R1Form::kCorrected, threads));
  }
  for (auto [N, L] : std::vector<std::pair<int, int>>{{4, 2}, {8, 2}, {8, 4}, {12, 4}})
    out.push_back(verify_zero(N, L, threads));
  out.push_back(verify_pfaffian_examples());
  return out;
}

std::vector<IdentityReport> run_convention_checks(int threads) {
  std::vector<IdentityReport> out;
  for (auto [L, M] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {4, 2}})
    out.push_back(verify_dyson(L, M, WronskianExponent::kUnshifted, threads));
  for (auto [L, M] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}}) {
    out.push_back(verify_gaussian_monomial(L, M, GaussianConvention::kEvenDoubleFactorial,
                                           WronskianExponent::kShifted, threads));
    out.push_back(verify_gaussian_monomial(L, M, GaussianConvention::kEvenDoubleFactorial,
                                           WronskianExponent::kUnshifted, threads));
  }
  for (auto [L, M] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {4, 2}})
    out.push_back(verify_R1(L, M, R1Form::kDeltaPower, threads));
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, 3}})
    out.push_back(verify_jacobi(2, 2, a, b, JacobiForm::kUnnormalized, JacobiFamily::kMonomial, threads));
  return out;
}

}  // namespace hyperpf
