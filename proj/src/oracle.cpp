#include "hyperpf/oracle.hpp"

#include <cmath>
#include <string>

namespace hyperpf {

namespace {

using Exps = std::vector<int>;

template <class R>
MultiLaurent<R> term(int vars, std::initializer_list<std::pair<int, int>> powers, const R& c) {
  Exps e(static_cast<std::size_t>(vars), 0);
  for (auto [v, p] : powers) e[static_cast<std::size_t>(v)] += p;
  return MultiLaurent<R>::monomial(vars, e, c);
}

// |x_a - x_b|^2 = 2 - x_a/x_b - x_b/x_a
template <class R>
MultiLaurent<R> pair_modulus(int vars, int a, int b) {
  return term<R>(vars, {}, R(2)) + term<R>(vars, {{a, 1}, {b, -1}}, R(-1)) + term<R>(vars, {{a, -1}, {b, 1}}, R(-1));
}

// |x_a - y|^2 = 2 - conj(y) x_a - y / x_a
MultiLaurent<GaussianRational> point_modulus(int vars, int a, const GaussianRational& y) {
  using G = GaussianRational;
  return term<G>(vars, {}, G(2)) + term<G>(vars, {{a, 1}}, -y.conj()) + term<G>(vars, {{a, -1}}, -y);
}

void check_box(double box, const std::string& what, int beta, int M) {
  if (box > static_cast<double>(kOracleBoxBudget)) {
    throw BudgetExceeded(what + " for beta=" + std::to_string(beta) + ", M=" + std::to_string(M) +
                         " exceeds the oracle budget (" + std::to_string(kOracleBoxBudget) +
                         " exponent vectors); supported grid: beta <= 4 with M <= 4, beta = 16 with M <= 3");
  }
}

void require_even_beta(int beta) {
  if (beta <= 0 || beta % 2 != 0) throw ValidationError("oracle needs a positive even beta");
}

void check_points(const std::vector<GaussianRational>& ys) {
  for (const auto& y : ys) {
    if (!on_unit_circle(y)) throw ValidationError("point " + to_string(y) + " is not on the unit circle");
  }
}

Rational vandermonde_modulus(const std::vector<GaussianRational>& ys, int beta) {
  Rational v = 1;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) v *= pow_int((ys[k] - ys[j]).norm2(), beta / 2);
  }
  return v;
}

// M!/(M-m)! / C with C = (beta M/2)! / ((beta/2)!)^M.
Rational rm_prefactor(int beta, int M, int m) {
  const BigInt falling = factorial(static_cast<unsigned long>(M)) / factorial(static_cast<unsigned long>(M - m));
  return make_rational(falling, multinomial_central(beta, M));
}

// prod_v prod_y |x_v - y|^beta * prod_{a<b} |x_a - x_b|^beta over total_vars
// torus variables.
MultiLaurent<GaussianRational> fixed_point_integrand(int beta, int total_vars, const std::vector<GaussianRational>& ys) {
  using G = GaussianRational;
  auto acc = MultiLaurent<G>::constant(total_vars, G(1));
  const unsigned h = static_cast<unsigned>(beta / 2);
  for (int v = 0; v < total_vars; ++v) {
    for (const auto& y : ys) acc = acc * pow(point_modulus(total_vars, v, y), h);
  }
  for (int b = 0; b < total_vars; ++b) {
    for (int a = 0; a < b; ++a) acc = acc * pow(pair_modulus<G>(total_vars, a, b), h);
  }
  return acc;
}

}  // namespace

Rational ct_partition_circular(int beta, int M, CtForm form) {
  require_even_beta(beta);
  if (M < 1) throw ValidationError("M must be positive");
  // Each variable's exponent stays within beta(M-1)/2; refuse boxes that
  // cannot fit the budget.
  const double box = std::pow(static_cast<double>(beta * (M - 1) + 1), M - 1);
  check_box(box, "constant-term partition function", beta, M);
  const unsigned h = static_cast<unsigned>(beta / 2);
  BigInt ct;
  if (form == CtForm::kModulus) {
    auto acc = MultiLaurent<BigInt>::constant(M, BigInt(1));
    for (int b = 0; b < M; ++b) {
      for (int a = 0; a < b; ++a) acc = acc * pow(pair_modulus<BigInt>(M, a, b), h);
    }
    ct = acc.constant_term();
  } else {
    auto acc = MultiLaurent<BigInt>::constant(M, BigInt(1));
    for (int b = 0; b < M; ++b) {
      for (int a = 0; a < b; ++a) {
        const auto diff = term<BigInt>(M, {{b, 1}}, BigInt(1)) + term<BigInt>(M, {{a, 1}}, BigInt(-1));
        acc = acc * pow(diff, static_cast<unsigned>(beta));
      }
    }
    Exps shift(static_cast<std::size_t>(M), beta * (M - 1) / 2);
    ct = acc.coefficient(shift);
    // i^{M beta (M-1)/2}; the exponent is even for even beta.
    const long e = static_cast<long>(M) * beta * (M - 1) / 2;
    if (e % 4 == 2) ct = -ct;
  }
  return make_rational(ct, factorial(static_cast<unsigned long>(M)));
}

Poly<BigInt> direct_R2_symbolic(int beta, int M) {
  require_even_beta(beta);
  if (M < 2) throw ValidationError("pair correlation needs M >= 2");
  const int free_vars = M - 2;
  if (free_vars == 0) return Poly<BigInt>(1);
  const int reach = beta + beta * (free_vars - 1) / 2;
  const double box = std::pow(static_cast<double>(2 * reach + 1), free_vars);
  check_box(box, "direct pair marginal", beta, M);
  using P = Poly<BigInt>;
  const P minus_c(std::vector<BigInt>{BigInt(0), BigInt(-1)});
  auto acc = MultiLaurent<P>::constant(free_vars, P(1));
  for (int v = 0; v < free_vars; ++v) {
    const auto f = term<P>(free_vars, {{v, 1}}, P(1)) + term<P>(free_vars, {{v, -1}}, P(1)) + term<P>(free_vars, {}, minus_c);
    acc = acc * pow(f, static_cast<unsigned>(beta));
  }
  for (int b = 0; b < free_vars; ++b) {
    for (int a = 0; a < b; ++a) acc = acc * pow(pair_modulus<P>(free_vars, a, b), static_cast<unsigned>(beta / 2));
  }
  return acc.constant_term();
}

GaussianRational direct_Rm(int beta, int M, const std::vector<GaussianRational>& ys) {
  require_even_beta(beta);
  const int m = static_cast<int>(ys.size());
  if (m < 1 || m > M) throw ValidationError("need 1 <= m <= M points");
  check_points(ys);
  const int free_vars = M - m;
  check_box(std::pow(static_cast<double>(beta * (M - 1) + 1), free_vars), "direct marginal", beta, M);
  GaussianRational integral(1);
  if (free_vars > 0) integral = fixed_point_integrand(beta, free_vars, ys).constant_term();
  return GaussianRational(Rational(rm_prefactor(beta, M, m) * vandermonde_modulus(ys, beta))) * integral;
}

LaurentPoly<GaussianRational> direct_Rm_last_variable(int beta, int M, const std::vector<GaussianRational>& ys) {
  using G = GaussianRational;
  require_even_beta(beta);
  const int m = static_cast<int>(ys.size()) + 1;
  if (m > M) throw ValidationError("need m <= M");
  check_points(ys);
  const int vars = M - m + 1;  // free points, then z last
  check_box(std::pow(static_cast<double>(beta * (M - 1) + 1), vars), "direct marginal", beta, M);
  const auto integrand = fixed_point_integrand(beta, vars, ys);
  std::map<int, G> by_z;
  for (const auto& [e, c] : integrand.terms()) {
    bool free_zero = true;
    for (int v = 0; v + 1 < vars; ++v) free_zero = free_zero && e[static_cast<std::size_t>(v)] == 0;
    if (free_zero) by_z[e.back()] += c;
  }
  const G scale(Rational(rm_prefactor(beta, M, m) * vandermonde_modulus(ys, beta)));
  LaurentPoly<G> out;
  for (const auto& [k, c] : by_z) out += LaurentPoly<G>::monomial(G(scale * c), k);
  return out;
}

BigInt det_exact(Matrix<BigInt> A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw ValidationError("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(A(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(A(p, k))) ++p;
      if (p == n) return 0;
      A.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        A(i, j) = std::move(t);
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign > 0 ? A(n - 1, n - 1) : BigInt(-A(n - 1, n - 1));
}

Rational det_exact(const Matrix<Rational>& A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw ValidationError("determinant of a non-square matrix");
  // Scale each row to integers, take the integer determinant, divide back.
  Matrix<BigInt> B(n, n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) B(i, j) = BigInt(A(i, j).get_num() * (l / A(i, j).get_den()));
    scale *= l;
  }
  return make_rational(det_exact(std::move(B)), scale);
}

}  // namespace hyperpf
