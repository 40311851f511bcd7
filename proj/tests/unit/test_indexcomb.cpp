#include <map>

#include "doctest.h"
#include "hyperpf/indexcomb.hpp"

using namespace hyperpf;

TEST_CASE("sums and offsets") {
  CHECK(sum_of(IndexSet::from_elements({0, 1, 2, 3})) == 6);
  CHECK(sum_of(IndexSet::from_elements({0, 2, 5})) == 7);
  CHECK(sum_of(IndexSet{}) == 0);
  CHECK(delta_of(IndexSet::from_elements({0, 1, 2, 3}), 8, 4) == -8);
  CHECK(delta_of(IndexSet::from_elements({2, 3, 4, 5}), 8, 4) == 0);
  CHECK(delta_of(IndexSet::from_elements({4, 5, 6, 7}), 8, 4) == 8);
  CHECK_THROWS_AS(delta_of(IndexSet::from_elements({0, 1, 2}), 6, 3), ValidationError);
}

TEST_CASE("vandermonde ratio") {
  for (int L = 1; L <= 6; ++L) CHECK(vandermonde_ratio(IndexSet::range(0, L)) == 1);
  CHECK(vandermonde_ratio(IndexSet::from_elements({0, 2})) == 2);
  CHECK(vandermonde_ratio(IndexSet::from_elements({0, 2, 3})) == 3);
}

TEST_CASE("index sets reject malformed input") {
  CHECK_THROWS_AS(IndexSet::from_elements({1, 1}), ValidationError);
  CHECK_THROWS_AS(IndexSet::from_elements({2, 1}), ValidationError);
  CHECK_THROWS_AS(IndexSet::from_elements({0, 4}, 4), ValidationError);
  const auto t = parse_index_set("{0,2,5}");
  CHECK(to_string(t) == "{0,2,5}");
  CHECK(IndexSet::from_mask(t.mask()) == t);
  CHECK(to_string(IndexSet::from_elements({3, 100, 127})) == "{3,100,127}");
}

TEST_CASE("subset enumeration") {
  CHECK(enumerate_subsets(4, 2).size() == 6);
  CHECK(enumerate_subsets(8, 4, SumEquals{14}).size() == 8);
  const auto full = enumerate_subsets(4, 4);
  REQUIRE(full.size() == 1);
  CHECK(full[0] == IndexSet::range(0, 4));
}

TEST_CASE("subset counts and constrained streams match brute force") {
  for (int N = 0; N <= 20; ++N) {
    for (int L = 0; L <= std::min(N, 6); ++L) {
      const auto all = enumerate_subsets(N, L);
      REQUIRE(all.size() == binomial(N, L).get_ui());
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
      if (N > 12 || L % 2 != 0) continue;
      for (long s : {0L, static_cast<long>(L) * (N - 1) / 2, 7L}) {
        std::vector<IndexSet> filtered;
        for (const auto& t : all)
          if (sum_of(t) == s) filtered.push_back(t);
        CHECK(enumerate_subsets(N, L, SumEquals{s}) == filtered);
      }
      for (long d : {0L, 2L, 5L}) {
        std::vector<IndexSet> filtered;
        for (const auto& t : all)
          if (std::abs(delta_of(t, N, L)) <= d) filtered.push_back(t);
        CHECK(enumerate_subsets(N, L, DeltaWithin{d}) == filtered);
      }
    }
  }
}

TEST_CASE("vandermonde ratio is positive and matches the direct product") {
  for (const auto& t : enumerate_subsets(10, 4)) {
    Rational direct = 1;
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < k; ++j) direct *= make_rational(BigInt(t[k] - t[j]), BigInt(k - j));
    CHECK(Rational(vandermonde_ratio(t)) == direct);
    CHECK(vandermonde_ratio(t) > 0);
    const bool consecutive = t[3] - t[0] == 3;
    CHECK((vandermonde_ratio(t) == 1) == consecutive);
  }
}

TEST_CASE("offset multisets") {
  const auto e0 = enumerate_E(0, 16);
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].size() == 0);
  const auto e1 = enumerate_E(1, 16);
  REQUIRE(e1.size() == 1);
  CHECK(e1[0] == OffsetMultiset({0}, 16));
  const auto e2 = enumerate_E(2, 2);
  REQUIRE(e2.size() == 3);
  CHECK(e2[0] == OffsetMultiset({-2, 2}, 2));
  CHECK(e2[1] == OffsetMultiset({-1, 1}, 2));
  CHECK(e2[2] == OffsetMultiset({0, 0}, 2));
  CHECK(multiplicity(OffsetMultiset({0, 0}, 2)) == 1);
  CHECK(multiplicity(OffsetMultiset({-1, 1}, 2)) == 2);
  CHECK(multiplicity(OffsetMultiset({-2, 0, 1, 1}, 2)) == 12);
  CHECK_THROWS_AS(OffsetMultiset({1, 0}, 2), ValidationError);
  CHECK_THROWS_AS(OffsetMultiset({-3, 3}, 2), ValidationError);
  CHECK(enumerate_E(2, 16).size() == 17);
  CHECK(enumerate_E(3, 16).size() == 145);
  CHECK(enumerate_E(4, 16).size() == 1143);
}

TEST_CASE("multiplicities count ordered zero-sum tuples") {
  for (int count = 0; count <= 3; ++count) {
    for (int beta = 1; beta <= 4; ++beta) {
      BigInt total = 0;
      for (const auto& j : enumerate_E(count, beta)) total += multiplicity(j);
      long brute = 0;
      const int w = 2 * beta + 1;
      long cells = 1;
      for (int k = 0; k < count; ++k) cells *= w;
      for (long code = 0; code < cells; ++code) {
        long c = code, s = 0;
        for (int k = 0; k < count; ++k, c /= w) s += c % w - beta;
        if (s == 0) ++brute;
      }
      CHECK(total == brute);
    }
  }
}
