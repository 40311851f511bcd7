#include "doctest.h"
#include "hyperpf/exterior.hpp"
#include "hyperpf/oracle.hpp"
#include "support.hpp"

using namespace hyperpf;
using MV = Multivector<Rational>;

namespace {

IndexSet S(std::initializer_list<int> e) { return IndexSet::from_elements(e); }

MV random_mv(int N, int grade, int terms) {
  std::vector<std::pair<IndexSet, Rational>> out;
  const auto all = enumerate_subsets(N, grade);
  for (int k = 0; k < terms; ++k) {
    out.emplace_back(all[static_cast<std::size_t>(test::uniform(0, static_cast<long>(all.size()) - 1))],
                     test::random_rational());
  }
  return MV::from_terms(N, grade, out);
}

}  // namespace

TEST_CASE("merge signs") {
  CHECK(merge_sign(S({0, 1}), S({2, 3})) == 1);
  CHECK(merge_sign(S({0, 2}), S({1, 3})) == -1);
  CHECK(merge_sign(S({0, 1}), S({1, 2})) == 0);
  CHECK(merge_sign(S({2, 3}), S({0, 1})) == 1);
  CHECK(merge_sign(S({1}), S({0})) == -1);
  CHECK(merge_sign(S({70, 127}), S({3, 100})) == -1);
}

TEST_CASE("wedge examples") {
  const auto a = MV::from_terms(4, 2, {{S({0, 1}), 1}});
  const auto b = MV::from_terms(4, 2, {{S({2, 3}), 1}});
  CHECK(wedge(a, b) == MV::from_terms(4, 4, {{S({0, 1, 2, 3}), 1}}));
  const auto alpha = a + b;
  CHECK(wedge(alpha, alpha) == MV::from_terms(4, 4, {{S({0, 1, 2, 3}), 2}}));
  for (int i = 0; i < 20; ++i) {
    const auto v = random_mv(6, 1, 4);
    CHECK(wedge(v, v).zero());
  }
  CHECK_THROWS_AS(wedge(MV(4, 2), MV(5, 2)), ValidationError);
  CHECK_THROWS_AS(wedge(MV(4, 3), MV(4, 2)), ValidationError);
}

TEST_CASE("multivector invariants") {
  const auto w = MV::from_terms(5, 2, {{S({1, 2}), 1}, {S({0, 4}), 2}, {S({1, 2}), -1}, {S({0, 1}), 0}});
  REQUIRE(w.size() == 1);
  CHECK(w.coefficient(S({0, 4})) == 2);
  CHECK_THROWS_AS(MV::from_terms(5, 2, {{S({0, 1, 2}), 1}}), ValidationError);
  CHECK_THROWS_AS(MV::from_terms(3, 2, {{S({0, 4}), 1}}), ValidationError);
}

TEST_CASE("star of the top grade") {
  CHECK(star_top(MV::from_terms(2, 2, {{S({0, 1}), 5}})) == 5);
  CHECK(star_top(MV(3, 3)) == 0);
  const auto e1 = MV::from_terms(2, 1, {{S({1}), 1}});
  const auto e0 = MV::from_terms(2, 1, {{S({0}), 1}});
  CHECK(star_top(wedge(e1, e0)) == -1);
  CHECK_THROWS_AS(star_top(e0), ValidationError);
}

TEST_CASE("graded anticommutativity and associativity") {
  for (int i = 0; i < 40; ++i) {
    const int ga = static_cast<int>(test::uniform(1, 3)), gb = static_cast<int>(test::uniform(1, 3));
    const auto a = random_mv(9, ga, 6), b = random_mv(9, gb, 6), c = random_mv(9, 2, 5);
    const auto ab = wedge(a, b), ba = wedge(b, a);
    CHECK(ab == ((ga * gb) % 2 ? ba.scaled(Rational(-1)) : ba));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("results do not depend on the thread count") {
  for (int i = 0; i < 10; ++i) {
    const auto a = random_mv(10, 3, 30), b = random_mv(10, 4, 30);
    const auto one = wedge(a, b, 1);
    CHECK(wedge(a, b, 3) == one);
    CHECK(wedge(a, b, 8) == one);
    const auto w = random_mv(8, 2, 18);
    CHECK(wedge_power_top(w, 4, 1) == wedge_power_top(w, 4, 5));
  }
}

TEST_CASE("hyperpfaffian examples") {
  // diagonal form
  for (int L : {2, 4}) {
    std::vector<std::pair<IndexSet, Rational>> terms;
    Rational product = 1;
    for (int k = 0; k < 3; ++k) {
      const Rational c = k + 2;
      terms.emplace_back(IndexSet::range(k * L, (k + 1) * L), c);
      product *= c;
    }
    const auto w = MV::from_terms(3 * L, L, terms);
    CHECK(hyperpfaffian(w, 3) == product);
    CHECK(hyperpfaffian_expansion(w) == product);
  }
  // all-ones 2-form
  for (int M = 1; M <= 5; ++M) {
    std::vector<std::pair<IndexSet, Rational>> terms;
    for (const auto& t : enumerate_subsets(2 * M, 2)) terms.emplace_back(t, 1);
    CHECK(hyperpfaffian(MV::from_terms(2 * M, 2, terms), M) == 1);
  }
  // classical 4x4
  const Rational a01 = 2, a02 = 3, a03 = 5, a12 = 7, a13 = 11, a23 = 13;
  const auto w = MV::from_terms(4, 2, {{S({0, 1}), a01}, {S({0, 2}), a02}, {S({0, 3}), a03},
                                       {S({1, 2}), a12}, {S({1, 3}), a13}, {S({2, 3}), a23}});
  CHECK(hyperpfaffian(w, 2) == a01 * a23 - a02 * a13 + a03 * a12);
}

TEST_CASE("hyperpfaffian preconditions") {
  const auto odd = random_mv(9, 3, 20);
  CHECK(wedge_power_top(odd, 3) == 0);
  CHECK_THROWS_AS(hyperpfaffian(odd, 3), ValidationError);
  CHECK_THROWS_AS(hyperpfaffian(random_mv(6, 2, 4), 2), ValidationError);
}

TEST_CASE("pfaffian classical examples") {
  Matrix<Rational> B(6, 6);
  const Rational cs[3] = {2, -3, 7};
  for (std::size_t k = 0; k < 3; ++k) {
    B(2 * k, 2 * k + 1) = cs[k];
    B(2 * k + 1, 2 * k) = -cs[k];
  }
  CHECK(pfaffian_classical(B) == -42);
  Matrix<Rational> ones(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      ones(i, j) = 1;
      ones(j, i) = -1;
    }
  CHECK(pfaffian_classical(ones) == 1);
  Matrix<Rational> bad(2, 2);
  bad(0, 1) = 1;
  bad(1, 0) = 1;
  CHECK_THROWS_AS(pfaffian_classical(bad), ValidationError);
}

TEST_CASE("hyperpfaffian agrees with the classical pfaffian and Pf^2 = det") {
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 * static_cast<std::size_t>(test::uniform(1, 4));
    const auto A = test::random_antisymmetric(n);
    const Rational pf = pfaffian_classical(A);
    const auto w = two_vector_from_matrix(A);
    CHECK(hyperpfaffian(w, static_cast<int>(n / 2)) == pf);
    CHECK(hyperpfaffian_expansion(w) == pf);
    CHECK(det_exact(A) == pf * pf);
  }
}

TEST_CASE("the two hyperpfaffian routes agree at grade 4") {
  for (int i = 0; i < 15; ++i) {
    const auto w = random_mv(12, 4, 60);
    CHECK(hyperpfaffian(w, 3) == hyperpfaffian_expansion(w));
  }
}
