#include "doctest.h"
#include "hyperpf/wronskian.hpp"
#include "support.hpp"

using namespace hyperpf;

namespace {

QPoly X(std::size_t k) { return QPoly::monomial(Rational(1), k); }
IndexSet S(std::initializer_list<int> e) { return IndexSet::from_elements(e); }

}  // namespace

TEST_CASE("renormalized derivatives") {
  CHECK(renormalized_derivative(X(2), 1) == X(1).scaled(Rational(2)));
  CHECK(renormalized_derivative(X(2), 2) == QPoly(1));
  CHECK(renormalized_derivative(X(2), 3).zero());
}

TEST_CASE("renormalized derivatives satisfy the Leibniz rule") {
  for (int i = 0; i < 40; ++i) {
    const auto f = test::random_poly(5), g = test::random_poly(5);
    for (int l = 0; l <= 4; ++l) {
      QPoly rhs;
      for (int j = 0; j <= l; ++j) rhs += renormalized_derivative(f, j) * renormalized_derivative(g, l - j);
      CHECK(renormalized_derivative(f * g, l) == rhs);
    }
  }
}

TEST_CASE("wronskian examples") {
  const auto mono = PolynomialFamily::monomials(8);
  for (int L = 1; L <= 5; ++L) CHECK(wronskian(mono, IndexSet::range(0, L)) == QPoly(1));
  CHECK(wronskian(mono, S({0, 2})) == X(1).scaled(Rational(2)));
  CHECK_THROWS_AS(wronskian(mono, IndexSet::from_elements({1, 1})), ValidationError);
}

TEST_CASE("monomial wronskian closed form") {
  CHECK(monomial_wronskian(S({0, 1})).coefficient == 1);
  CHECK(monomial_wronskian(S({0, 1})).exponent == 0);
  CHECK(monomial_wronskian(S({0, 2})).coefficient == 2);
  CHECK(monomial_wronskian(S({0, 2})).exponent == 1);
  for (int L = 1; L <= 6; ++L) {
    const auto w = monomial_wronskian(IndexSet::range(0, L));
    CHECK(w.coefficient == 1);
    CHECK(w.exponent == 0);
  }
  CHECK(monomial_wronskian_exponent(S({0, 2}), WronskianExponent::kUnshifted) == 2);
}

TEST_CASE("monomial wronskian agrees with the determinant") {
  const auto mono = PolynomialFamily::monomials(12);
  for (int L = 1; L <= 4; ++L) {
    for (const auto& t : enumerate_subsets(12, L)) {
      const auto mw = monomial_wronskian(t);
      CHECK(wronskian(mono, t) == QPoly::monomial(Rational(mw.coefficient), static_cast<std::size_t>(mw.exponent)));
    }
  }
}

TEST_CASE("wronskian of a common factor") {
  for (int i = 0; i < 30; ++i) {
    const auto g = test::random_poly(3);
    const int L = static_cast<int>(test::uniform(1, 4));
    std::vector<QPoly> fs, gfs;
    for (const auto& t : enumerate_subsets(7, L)) {
      if (test::uniform(0, 3) != 0) continue;
      fs.clear();
      gfs.clear();
      for (int k : t.elements()) {
        fs.push_back(X(static_cast<std::size_t>(k)));
        gfs.push_back(g * fs.back());
      }
      CHECK(wronskian(gfs) == pow(g, static_cast<unsigned>(L)) * wronskian(fs));
    }
  }
}

TEST_CASE("polynomial determinants above the cofactor cutoff") {
  // 6x6 Wronskians of random polynomials go through fraction-free elimination;
  // a shifted family must give the same Wronskian as monomials when composed.
  const auto shifted = PolynomialFamily::shifted_monomials(10, Rational(1, 2));
  const auto mono = PolynomialFamily::monomials(10);
  const QPoly shift(std::vector<Rational>{Rational(-1, 2), 1});
  for (const auto& t : {S({0, 1, 3, 5, 7, 9}), S({1, 2, 4, 6, 8, 9})}) {
    CHECK(wronskian(shifted, t) == wronskian(mono, t).compose(shift));
  }
}

TEST_CASE("hermite family") {
  const auto h = PolynomialFamily::hermite(6);
  CHECK(h[2] == QPoly(std::vector<Rational>{-1, 0, 1}));
  CHECK(h[3] == QPoly(std::vector<Rational>{0, -3, 0, 1}));
  for (int n = 0; n < 6; ++n) CHECK(h[n].leading() == 1);
  auto gauss = [](const QPoly& p) {
    Rational acc = 0;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
      acc += p.coefficients()[k] * Rational(gaussian_moment(static_cast<int>(k)));
    return acc;
  };
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      const Rational ip = gauss(h[m] * h[n]);
      if (m != n) CHECK(ip == 0);
      else CHECK(ip == Rational(factorial(static_cast<unsigned long>(n))));
    }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(PolynomialFamily::custom({QPoly(1), X(1).scaled(Rational(2))}), ValidationError);
  CHECK_THROWS_AS(PolynomialFamily::custom({QPoly(1), X(2)}), ValidationError);
  CHECK(PolynomialFamily::custom({QPoly(1), X(1) + QPoly(3)}).size() == 2);
}

TEST_CASE("omega blade") {
  const auto mono = PolynomialFamily::monomials(6);
  const Rational x(3, 7);
  const auto w1 = omega_blade(mono, 1, x);
  for (int n = 0; n < 6; ++n) CHECK(w1.coefficient(IndexSet::from_elements({n})) == mono[n].eval(x));
  const auto w0 = omega_blade(mono, 2, Rational(0));
  for (const auto& [mask, c] : w0.terms()) CHECK(monomial_wronskian(IndexSet::from_mask(mask)).exponent == 0);
  CHECK(w0.size() == 1);
  const auto w2 = omega_blade(mono, 2, x);
  for (const auto& t : enumerate_subsets(6, 2)) CHECK(w2.coefficient(t) == wronskian(mono, t).eval(x));
  CHECK(wedge(w2, w2).zero());
}

TEST_CASE("vandermonde power") {
  const std::vector<Rational> a{0, 1}, b{0, 1, 2}, c{1, 3, 1};
  CHECK(vandermonde_power_direct(a, 2) == 1);
  CHECK(vandermonde_power_direct(b, 2) == 16);
  CHECK(vandermonde_power_direct(c, 2) == 0);
}

TEST_CASE("confluent vandermonde identity") {
  for (int i = 0; i < 60; ++i) {
    const int L = i % 2 == 0 ? 2 : 4;
    const int M = static_cast<int>(test::uniform(1, 3));
    std::vector<Rational> xs;
    for (int k = 0; k < M; ++k) xs.push_back(test::random_rational());
    const auto families = {PolynomialFamily::monomials(L * M), PolynomialFamily::hermite(L * M),
                           PolynomialFamily::shifted_monomials(L * M, test::random_rational())};
    const Rational expected = vandermonde_power_direct(xs, L);
    for (const auto& f : families) {
      auto acc = omega_blade(f, L, xs[0]);
      for (int k = 1; k < M; ++k) acc = wedge(acc, omega_blade(f, L, xs[static_cast<std::size_t>(k)]));
      CHECK(star_top(acc) == expected);
    }
  }
}
