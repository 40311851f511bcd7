#include "doctest.h"
#include "hyperpf/correlation.hpp"
#include "hyperpf/evaluations.hpp"
#include "hyperpf/gram.hpp"
#include "support.hpp"

using namespace hyperpf;

namespace {

IndexSet S(std::initializer_list<int> e) { return IndexSet::from_elements(e); }

Multivector<GaussianRational> at_c(const Multivector<Poly<BigInt>>& w, const Rational& c) {
  return w.map_coefficients<GaussianRational>(
      [&](const Poly<BigInt>& p) { return GaussianRational(to_rational(p).eval(c)); });
}

}  // namespace

TEST_CASE("circular gram vector") {
  const auto g = circular_gram_vector(2, 2);
  REQUIRE(g.size() == 2);
  CHECK(g.coefficient(S({0, 3})) == 3);
  CHECK(g.coefficient(S({1, 2})) == 1);
  CHECK(hyperpfaffian(g, 2) == 3);
  const auto general = gram_vector(EnsembleSpec::with_monomials(2, 2, MomentFunctional::circular()));
  CHECK(general == g.map_coefficients<Rational>([](const BigInt& v) { return Rational(v); }));
  for (int L : {2, 4})
    for (int M = 1; M <= 3; ++M)
      CHECK(Rational(hyperpfaffian(circular_gram_vector(L, M), M)) == dyson_rhs(L * L, M));
}

TEST_CASE("gaussian gram vector") {
  const auto g = gram_vector(EnsembleSpec::with_monomials(2, 1, MomentFunctional::gaussian()));
  REQUIRE(g.size() == 1);
  CHECK(g.coefficient(S({0, 1})) == 1);
  CHECK(hyperpfaffian(g, 1) == 1);
  // odd moments vanish, so only even Wronskian exponents survive
  const auto g2 = gram_vector(EnsembleSpec::with_monomials(2, 2, MomentFunctional::gaussian()));
  for (const auto& [mask, c] : g2.terms()) CHECK(monomial_wronskian(IndexSet::from_mask(mask)).exponent % 2 == 0);
  CHECK(g2.size() < 6);
}

TEST_CASE("ensemble validation") {
  EnsembleSpec odd{3, 2, MomentFunctional::circular(), PolynomialFamily::monomials(6)};
  CHECK_THROWS_AS(odd.validate(), ValidationError);
  EnsembleSpec short_family{2, 2, MomentFunctional::circular(), PolynomialFamily::monomials(3)};
  CHECK_THROWS_AS(gram_vector(short_family), ValidationError);
}

TEST_CASE("epsilon vectors") {
  for (int L : {2, 4}) {
    const auto e = epsilon_vector(0, L, L);
    REQUIRE(e.size() == 1);
    CHECK(e.coefficient(IndexSet::range(0, L)) == 1);
  }
  CHECK(epsilon_vector(4 * (8 - 4) / 2 + 1, 8, 4).zero());
  CHECK_FALSE(epsilon_vector(4 * (8 - 4) / 2, 8, 4).zero());
  CHECK(epsilon_vector(3, 8, 4).size() == epsilon_vector(-3, 8, 4).size());
  const auto all = epsilon_vectors(8, 4);
  for (const auto& [j, e] : all) CHECK(e == epsilon_vector(j, 8, 4));
}

TEST_CASE("pair laurent coefficients") {
  const auto b2 = pair_laurent(2);
  CHECK(b2.coefficient(2) == Poly<BigInt>(1));
  CHECK(b2.coefficient(1) == Poly<BigInt>(std::vector<BigInt>{0, -2}));
  CHECK(b2.coefficient(0) == Poly<BigInt>(std::vector<BigInt>{2, 0, 1}));
  for (int beta : {4, 16}) {
    const auto b = pair_laurent(beta);
    CHECK(b.coefficient(beta) == Poly<BigInt>(1));
    for (int j = 0; j <= beta; ++j) CHECK(b.coefficient(j) == b.coefficient(-j));
  }
}

TEST_CASE("single point laurent matches the binomial form with exponent beta/2 - delta") {
  for (int beta : {2, 4, 16}) {
    const auto l = single_point_laurent(beta);
    for (int d = -beta / 2; d <= beta / 2; ++d) {
      const BigInt sign = (beta / 2 - d) % 2 == 0 ? 1 : -1;
      const auto expected = Poly<BigInt>::monomial(BigInt(sign * binomial(beta, d + beta / 2)),
                                                   static_cast<std::size_t>(beta / 2 - d));
      CHECK(l.coefficient(d) == expected);
    }
  }
}

TEST_CASE("gamma_y support bound and symmetry") {
  for (int M : {3, 4}) {
    const auto g = gamma_y_pair_symbolic(2, M);
    const int n_prime = 2 * (M - 2);
    const auto b = pair_laurent(4);
    for (const auto& [mask, c] : g.terms()) {
      const auto u = IndexSet::from_mask(mask);
      const long d = delta_of(u, n_prime, 2);
      CHECK(std::abs(d) <= 4);
      CHECK(c == b.coefficient(static_cast<int>(d)).scaled(vandermonde_ratio(u)));
    }
    CHECK(g == gamma_y_pair_symbolic(2, M, DeltaConvention::kMinus));
  }
  const auto single = gamma_y_single_symbolic(2, 3);
  for (const auto& [mask, c] : single.terms())
    CHECK(std::abs(delta_of(IndexSet::from_mask(mask), 4, 2)) <= 2);
}

TEST_CASE("symbolic and pointwise gamma_y agree") {
  const GaussianRational i = GaussianRational::i();
  // y = (i, -i) gives c = 0
  const auto sym = at_c(gamma_y_pair_symbolic(2, 4), Rational(0));
  CHECK(gamma_y_circular(2, 4, {i, -i}) == sym);
  EnsembleSpec spec = EnsembleSpec::with_monomials(2, 4, MomentFunctional::circular());
  CHECK(gamma_y_general<GaussianRational>(spec, {i, -i}) == sym);
  for (int k = 0; k < 10; ++k) {
    const auto y = unit_circle_point(test::random_rational());
    const Rational c = 2 * y.real();
    for (int L : {2, 4}) {
      const int M = L == 2 ? 4 : 3;
      const auto expected = at_c(gamma_y_pair_symbolic(L, M), c);
      CHECK(gamma_y_circular(L, M, {y, y.conj()}) == expected);
      CHECK(gamma_y_general<GaussianRational>(EnsembleSpec::with_monomials(L, M, MomentFunctional::circular()),
                                              {y, y.conj()}) == expected);
    }
  }
}

TEST_CASE("gamma_y for real weights") {
  auto spec = EnsembleSpec::with_monomials(2, 2, MomentFunctional::gaussian());
  CHECK(gamma_y_general<Rational>(spec, {}) == gram_vector(spec));
  const auto g = gamma_y_general<Rational>(spec, {Rational(0)});
  // y = 0 multiplies the integrand by x^4
  CHECK(g.coefficient(S({0, 1})) == 3);
  auto circ = EnsembleSpec::with_monomials(2, 3, MomentFunctional::circular());
  CHECK_THROWS_AS(gamma_y_general<GaussianRational>(circ, {GaussianRational(Rational(1, 2))}), ValidationError);
  CHECK_THROWS_AS(gamma_y_general<Rational>(spec, {Rational(0), Rational(1)}), ValidationError);
}

TEST_CASE("global circular phase is trivial for even L") {
  for (int L : {2, 4, 6})
    for (int M = 1; M <= 10; ++M) CHECK(circular_global_phase_exponent(L, M) % 4 == 0);
}
