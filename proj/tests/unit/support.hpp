#pragma once

#include <random>
#include <vector>

#include "hyperpf/scalar.hpp"

namespace hyperpf::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261015);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long span = 20, long max_den = 9) {
  return make_rational(BigInt(uniform(-span, span)), BigInt(uniform(1, max_den)));
}

inline Poly<Rational> random_poly(int max_degree = 4) {
  std::vector<Rational> c;
  for (long d = uniform(0, max_degree); d >= 0; --d) c.push_back(random_rational());
  return Poly<Rational>(std::move(c));
}

inline Matrix<Rational> random_antisymmetric(std::size_t n) {
  Matrix<Rational> A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      A(i, j) = random_rational();
      A(j, i) = -A(i, j);
    }
  return A;
}

}  // namespace hyperpf::test
