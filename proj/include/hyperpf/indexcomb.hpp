#pragma once

// Index-set combinatorics: L-subsets of [N) with a bitmask twin, their sums,
// centered offsets, normalized Vandermonde ratios, constrained enumeration,
// and the offset multisets summed over in the pair-correlation formula.

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hyperpf/scalar.hpp"

namespace hyperpf {

// Two machine words; dimensions above this are refused.
using Mask = unsigned __int128;
inline constexpr int kMaxDimension = 128;

inline int popcount(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) +
         std::popcount(static_cast<std::uint64_t>(m >> 64));
}
inline Mask bit(int i) { return Mask{1} << i; }
// Bits [0, n).
inline Mask low_bits(int n) { return n >= 128 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int lowest_bit_index(Mask m) {
  auto lo = static_cast<std::uint64_t>(m);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

// Lexicographic order on sorted element lists of equal-size sets: the set
// holding the smallest element of the symmetric difference comes first.
inline bool lex_less(Mask a, Mask b) {
  Mask d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) != 0;
}

struct MaskHash {
  std::size_t operator()(Mask m) const noexcept {
    auto lo = static_cast<std::uint64_t>(m);
    auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL + 0x7F4A7C15ULL + (lo << 6)));
  }
};

// A strictly increasing subset of [0, 128) kept in sync with its bitmask.
class IndexSet {
 public:
  IndexSet() = default;

  // Throws ValidationError unless strictly increasing and inside [0, dimension).
  static IndexSet from_elements(std::span<const int> elements, int dimension = kMaxDimension);
  static IndexSet from_elements(std::initializer_list<int> elements, int dimension = kMaxDimension) {
    return from_elements(std::span<const int>(elements.begin(), elements.size()), dimension);
  }
  static IndexSet from_mask(Mask mask);
  // {lo, lo + 1, ..., hi - 1}
  static IndexSet range(int lo, int hi);

  std::span<const int> elements() const { return elements_; }
  Mask mask() const { return mask_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  int operator[](std::size_t i) const { return elements_[i]; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.mask_ == b.mask_; }
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    return std::lexicographical_compare(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                                        b.elements_.end());
  }

 private:
  std::vector<int> elements_;
  Mask mask_ = 0;
};

// "{0,2,5}"
std::string to_string(const IndexSet& t);
IndexSet parse_index_set(std::string_view s, int dimension = kMaxDimension);

long sum_of(const IndexSet& t);

// Sum(u) - L(N' - 1)/2; L must be even.
long delta_of(const IndexSet& u, int n_prime, int L);

// prod_{j<k} (t(k) - t(j)) / (k - j), always a positive integer.
BigInt vandermonde_ratio(const IndexSet& t);

struct NoConstraint {};
struct SumEquals {
  long sum;
};
// |Sum(t) - L(N-1)/2| <= bound, with N and L those of the enumeration.
struct DeltaWithin {
  long bound;
};
using SubsetConstraint = std::variant<NoConstraint, SumEquals, DeltaWithin>;

// Visits L-subsets of [0, N) meeting the constraint in lexicographic order.
// Branches whose attainable tail sums miss the target are pruned.
void for_each_subset(int N, int L, const SubsetConstraint& constraint,
                     const std::function<void(const IndexSet&)>& visit);
std::vector<IndexSet> enumerate_subsets(int N, int L, const SubsetConstraint& constraint = NoConstraint{});

// Weakly increasing offsets j_1 <= ... <= j_count, each in [-beta, beta].
class OffsetMultiset {
 public:
  OffsetMultiset() = default;
  OffsetMultiset(std::vector<int> values, int beta);

  std::span<const int> values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  long sum() const;
  friend bool operator==(const OffsetMultiset&, const OffsetMultiset&) = default;

 private:
  std::vector<int> values_;
};

// All weakly increasing tuples of length count with entries in [-beta, beta]
// and zero sum, lexicographically ordered.
std::vector<OffsetMultiset> enumerate_E(int count, int beta);

// count! / prod (multiplicity of each value)!
BigInt multiplicity(const OffsetMultiset& j);

}  // namespace hyperpf
