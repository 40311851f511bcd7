#include "hyperpf/correlation.hpp"

#include <cmath>
#include <numbers>

#include "hyperpf/parallel.hpp"

namespace hyperpf {

std::string to_string(DensityConvention c) { return c == DensityConvention::kAngle ? "angle" : "haar"; }

int even_square_root(int beta) {
  if (beta <= 0) throw ValidationError("beta must be positive");
  int L = 0;
  while ((L + 1) * (L + 1) <= beta) ++L;
  if (L * L != beta || L % 2 != 0) {
    throw ValidationError("beta must be an even perfect square (4, 16, 36, ...), got " + std::to_string(beta));
  }
  return L;
}

bool is_even_square(int beta) {
  if (beta <= 0) return false;
  int L = 0;
  while ((L + 1) * (L + 1) <= beta) ++L;
  return L * L == beta && L % 2 == 0;
}

Poly<BigInt> b_coefficient(int j, int beta) {
  const int aj = std::abs(j);
  if (aj > beta) throw ValidationError("b_j needs |j| <= beta");
  Poly<BigInt> total;
  const Poly<BigInt> minus_c(std::vector<BigInt>{BigInt(0), BigInt(-1)});
  for (int l = aj; l <= beta; ++l) {
    if ((l - aj) % 2 != 0) continue;
    const BigInt coeff = binomial(beta, l) * binomial(l, (l + aj) / 2);
    total += pow(minus_c, static_cast<unsigned>(beta - l)).scaled(coeff);
  }
  return total;
}

BigInt pair_work_estimate(int beta, int M) {
  if (M <= 2) return 1;
  const int n_prime = even_square_root(beta) * (M - 2);
  return binomial(2 * beta + M - 2, M - 2) * binomial(n_prime, n_prime / 2);
}

Rational CorrelationReport::normalization() const { return make_rational(falling_factorial, central_multinomial); }

namespace {

// Sum over the multisets E[begin, end) of mult * prod b * star(wedge eps),
// sharing wedge prefixes between consecutive (lexicographic) multisets.
Poly<BigInt> e_sum_chunk(const std::vector<OffsetMultiset>& E, std::size_t begin, std::size_t end,
                         const std::map<int, Multivector<BigInt>>& eps, const std::vector<Poly<BigInt>>& b,
                         int beta, int n_prime, int L) {
  const Multivector<BigInt> none(n_prime, L);
  auto eps_at = [&](int j) -> const Multivector<BigInt>& {
    auto it = eps.find(j);
    return it == eps.end() ? none : it->second;
  };
  Poly<BigInt> total;
  std::vector<Multivector<BigInt>> prefix;  // prefix[d] = eps^{j_0} ^ ... ^ eps^{j_d}
  std::vector<int> prev;
  for (std::size_t e = begin; e < end; ++e) {
    const auto j = E[e].values();
    const std::size_t K = j.size();
    std::size_t common = 0;
    while (common < prev.size() && common + 1 < K && prev[common] == j[common] && common < prefix.size()) ++common;
    prefix.resize(common);
    for (std::size_t d = common; d + 1 < K; ++d) {
      prefix.push_back(d == 0 ? eps_at(j[0]) : wedge(prefix[d - 1], eps_at(j[d])));
    }
    prev.assign(j.begin(), j.end());
    const BigInt star = K == 1 ? star_top(eps_at(j[0])) : star_of_wedge(prefix[K - 2], eps_at(j[K - 1]));
    if (is_zero(star)) continue;
    Poly<BigInt> term(BigInt(multiplicity(E[e]) * star));
    for (int v : j) term = term * b[static_cast<std::size_t>(v + beta)];
    total += term;
  }
  return total;
}

}  // namespace

CorrelationReport pair_correlation(int beta, int M, int threads, DensityConvention convention) {
  const int L = even_square_root(beta);
  if (M < 2) throw ValidationError("pair correlation needs M >= 2");
  if (L * M > kMaxDimension) throw ValidationError("L*M exceeds " + std::to_string(kMaxDimension));
  if (pair_work_estimate(beta, M) > kPairWorkBudget) {
    throw BudgetExceeded("pair correlation for beta=" + std::to_string(beta) + ", M=" + std::to_string(M) +
                         " exceeds the work budget of " + std::to_string(kPairWorkBudget) +
                         " (supported: beta=4 with M <= 13, beta=16 with M <= 7, beta=36 with M <= 5)");
  }
  CorrelationReport report;
  report.beta = beta;
  report.L = L;
  report.M = M;
  report.m = 2;
  report.convention = convention;
  report.falling_factorial = BigInt(M) * (M - 1);
  report.central_multinomial = multinomial_central(beta, M);
  if (M == 2) {
    report.r = Poly<BigInt>(1);
    report.multisets = 1;
  } else {
    const int n_prime = L * (M - 2);
    const auto eps = epsilon_vectors(n_prime, L);
    std::vector<Poly<BigInt>> b;
    for (int j = -beta; j <= beta; ++j) b.push_back(b_coefficient(j, beta));
    const auto E = enumerate_E(M - 2, beta);
    report.multisets = E.size();
    std::vector<Poly<BigInt>> partial(static_cast<std::size_t>(std::max(threads, 1)));
    const std::size_t used = parallel_chunks(E.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
      partial[c] = e_sum_chunk(E, begin, end, eps, b, beta, n_prime, L);
    });
    for (std::size_t c = 0; c < used; ++c) report.r += partial[c];
  }
  report.fourier = fourier_coefficients(report.r);
  return report;
}

Poly<BigInt> pair_r_via_hyperpfaffian(int L, int M, DeltaConvention convention, int threads) {
  if (M < 2) throw ValidationError("pair correlation needs M >= 2");
  if (M == 2) return Poly<BigInt>(1);
  return wedge_power_top(gamma_y_pair_symbolic(L, M, convention), M - 2, threads);
}

LaurentPoly<BigInt> expand_in_z(const Poly<BigInt>& r) {
  const LaurentPoly<BigInt> y(-1, {BigInt(1), BigInt(0), BigInt(1)});
  LaurentPoly<BigInt> acc;
  auto c = r.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + LaurentPoly<BigInt>(c[i]);
  return acc;
}

std::vector<BigInt> fourier_coefficients(const Poly<BigInt>& r) {
  const auto z = expand_in_z(r);
  const std::size_t deg = r.degree().value_or(0);
  std::vector<BigInt> out;
  out.push_back(z.coefficient(0));
  for (std::size_t k = 1; k <= deg; ++k) {
    const int e = static_cast<int>(k);
    out.push_back(z.coefficient(e) + z.coefficient(-e));
  }
  return out;
}

Rational pair_mass(const CorrelationReport& report) {
  // (2 sin theta)^2 = 2 - z^2 - z^-2 at z = e^{i theta}
  const LaurentPoly<BigInt> sin2(-2, {BigInt(-1), BigInt(0), BigInt(2), BigInt(0), BigInt(-1)});
  const auto integrand = pow(sin2, static_cast<unsigned>(report.beta / 2)) * expand_in_z(report.r);
  return Rational(report.normalization() * Rational(integrand.coefficient(0)));
}

Rational pair_value_exact(const CorrelationReport& report, const Rational& y) {
  const Rational s2 = 4 - y * y;  // (2 sin theta)^2
  return Rational(report.normalization() * pow_int(s2, report.beta / 2) * report.r.eval(y));
}

std::vector<SampleRow> sample_for_plot(const CorrelationReport& report, int points) {
  if (points < 2) throw ValidationError("need at least 2 sample points");
  std::vector<SampleRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  const double scale = report.convention == DensityConvention::kAngle ? 1.0 / (2.0 * std::numbers::pi) : 1.0;
  for (int k = 0; k < points; ++k) {
    const double theta = std::numbers::pi * k / (points - 1);
    const Rational y(2.0 * std::cos(theta));
    rows.push_back({theta, pair_value_exact(report, y).get_d() * scale});
  }
  return rows;
}

RmResult r_m_circular(int beta, int M, const std::vector<GaussianRational>& ys, int threads,
                      DeltaConvention convention) {
  const int L = even_square_root(beta);
  const int m = static_cast<int>(ys.size());
  if (m < 1 || m > M) throw ValidationError("need 1 <= m <= M points");
  for (const auto& y : ys) {
    if (!on_unit_circle(y)) throw ValidationError("point " + to_string(y) + " is not on the unit circle");
  }
  RmResult out;
  out.beta = beta;
  out.M = M;
  out.m = m;
  out.vandermonde_power = 1;
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < k; ++j) {
      const Rational d2 = (ys[static_cast<std::size_t>(k)] - ys[static_cast<std::size_t>(j)]).norm2();
      if (is_zero(d2)) out.coincident = true;
      out.vandermonde_power *= pow_int(d2, beta / 2);
    }
  }
  if (out.coincident) {
    out.vandermonde_power = 0;
    return out;
  }
  out.phase = 1;
  for (const auto& y : ys) out.phase *= pow_int(y, -static_cast<long>(beta) * (M - m) / 2);
  out.pf = m == M ? GaussianRational(1) : hyperpfaffian(gamma_y_circular(L, M, ys, convention), M - m, threads);
  const Rational scale = make_rational(factorial(static_cast<unsigned long>(M)), multinomial_central(beta, M));
  out.total = GaussianRational(Rational(scale * out.vandermonde_power)) * out.phase * out.pf;
  return out;
}

}  // namespace hyperpf
