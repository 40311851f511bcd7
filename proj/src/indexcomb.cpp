#include "hyperpf/indexcomb.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace hyperpf {

IndexSet IndexSet::from_elements(std::span<const int> elements, int dimension) {
  if (dimension > kMaxDimension) {
    throw ValidationError("dimension " + std::to_string(dimension) + " exceeds " +
                          std::to_string(kMaxDimension));
  }
  IndexSet t;
  int prev = -1;
  for (int e : elements) {
    if (e <= prev) throw ValidationError("index set must be strictly increasing");
    if (e >= dimension) {
      throw ValidationError("index " + std::to_string(e) + " outside [0, " + std::to_string(dimension) + ")");
    }
    t.mask_ |= bit(e);
    prev = e;
  }
  t.elements_.assign(elements.begin(), elements.end());
  return t;
}

IndexSet IndexSet::from_mask(Mask mask) {
  IndexSet t;
  t.mask_ = mask;
  t.elements_.reserve(static_cast<std::size_t>(popcount(mask)));
  while (mask) {
    int i = lowest_bit_index(mask);
    t.elements_.push_back(i);
    mask &= mask - 1;
  }
  return t;
}

IndexSet IndexSet::range(int lo, int hi) {
  std::vector<int> e;
  for (int i = lo; i < hi; ++i) e.push_back(i);
  return from_elements(e);
}

std::string to_string(const IndexSet& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t.elements()[i]);
  }
  return out + "}";
}

IndexSet parse_index_set(std::string_view s, int dimension) {
  std::vector<int> values;
  std::string digits;
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (ch == ',' || ch == '}' ) {
      if (!digits.empty()) values.push_back(std::stoi(digits));
      digits.clear();
    } else if (ch != '{' && ch != ' ') {
      throw ValidationError("malformed index set '" + std::string(s) + "'");
    }
  }
  if (!digits.empty()) values.push_back(std::stoi(digits));
  return IndexSet::from_elements(values, dimension);
}

long sum_of(const IndexSet& t) {
  long s = 0;
  for (int e : t.elements()) s += e;
  return s;
}

long delta_of(const IndexSet& u, int n_prime, int L) {
  if (L % 2 != 0) throw ValidationError("delta_of: L must be even");
  return sum_of(u) - static_cast<long>(L) * (n_prime - 1) / 2;
}

BigInt vandermonde_ratio(const IndexSet& t) {
  const auto e = t.elements();
  Rational r(1);
  for (std::size_t j = 0; j < e.size(); ++j) {
    for (std::size_t k = j + 1; k < e.size(); ++k) {
      r *= Rational(e[k] - e[j], static_cast<long>(k - j));
    }
  }
  r.canonicalize();
  if (!is_integral(r)) throw InvariantError("non-integral Vandermonde ratio for " + to_string(t));
  return r.get_num();
}

namespace {

long floor_half(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

struct SubsetWalker {
  int N;
  int L;
  long target_lo;
  long target_hi;
  const std::function<void(const IndexSet&)>& visit;
  std::vector<int> chosen;

  // Remaining r elements drawn from [next, N): extreme sums of the tail.
  static long min_tail(int next, int r) { return static_cast<long>(r) * next + static_cast<long>(r) * (r - 1) / 2; }
  static long max_tail(int N, int r) { return static_cast<long>(r) * (N - r) + static_cast<long>(r) * (r - 1) / 2; }

  void walk(int next, long partial) {
    const int r = L - static_cast<int>(chosen.size());
    if (r == 0) {
      if (partial >= target_lo && partial <= target_hi) visit(IndexSet::from_elements(chosen, N));
      return;
    }
    for (int e = next; e <= N - r; ++e) {
      const long s = partial + e;
      // Tail uses r - 1 elements from (e, N).
      const long lo = s + min_tail(e + 1, r - 1);
      const long hi = s + max_tail(N, r - 1);
      if (lo > target_hi) break;  // increasing e only raises the minimum
      if (hi < target_lo) continue;
      chosen.push_back(e);
      walk(e + 1, s);
      chosen.pop_back();
    }
  }
};

}  // namespace

void for_each_subset(int N, int L, const SubsetConstraint& constraint,
                     const std::function<void(const IndexSet&)>& visit) {
  if (L < 0 || L > N) throw ValidationError("enumerate_subsets requires 0 <= L <= N");
  if (N > kMaxDimension) throw ValidationError("dimension exceeds " + std::to_string(kMaxDimension));
  long lo = std::numeric_limits<long>::min() / 4;
  long hi = std::numeric_limits<long>::max() / 4;
  if (const auto* s = std::get_if<SumEquals>(&constraint)) {
    lo = hi = s->sum;
  } else if (const auto* d = std::get_if<DeltaWithin>(&constraint)) {
    // 2*Sum lies in [L(N-1) - 2*bound, L(N-1) + 2*bound].
    const long twice_center = static_cast<long>(L) * (N - 1);
    lo = -floor_half(2 * d->bound - twice_center);  // ceil((c - 2b) / 2)
    hi = floor_half(twice_center + 2 * d->bound);
  }
  SubsetWalker w{N, L, lo, hi, visit, {}};
  w.chosen.reserve(static_cast<std::size_t>(L));
  w.walk(0, 0);
}

std::vector<IndexSet> enumerate_subsets(int N, int L, const SubsetConstraint& constraint) {
  std::vector<IndexSet> out;
  for_each_subset(N, L, constraint, [&](const IndexSet& t) { out.push_back(t); });
  return out;
}

OffsetMultiset::OffsetMultiset(std::vector<int> values, int beta) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < -beta || values_[i] > beta) throw ValidationError("offset outside [-beta, beta]");
    if (i && values_[i] < values_[i - 1]) throw ValidationError("offsets must be weakly increasing");
  }
}

long OffsetMultiset::sum() const {
  long s = 0;
  for (int v : values_) s += v;
  return s;
}

namespace {

void walk_offsets(int count, int beta, int lo, long partial, std::vector<int>& chosen,
                  std::vector<OffsetMultiset>& out) {
  const int r = count - static_cast<int>(chosen.size());
  if (r == 0) {
    if (partial == 0) out.emplace_back(chosen, beta);
    return;
  }
  for (int v = lo; v <= beta; ++v) {
    // Remaining r - 1 entries lie in [v, beta].
    const long min_total = partial + static_cast<long>(v) * r;
    const long max_total = partial + v + static_cast<long>(beta) * (r - 1);
    if (min_total > 0) break;
    if (max_total < 0) continue;
    chosen.push_back(v);
    walk_offsets(count, beta, v, partial + v, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<OffsetMultiset> enumerate_E(int count, int beta) {
  if (count < 0) throw ValidationError("enumerate_E: count must be >= 0");
  std::vector<OffsetMultiset> out;
  std::vector<int> chosen;
  walk_offsets(count, beta, -beta, 0, chosen, out);
  return out;
}

BigInt multiplicity(const OffsetMultiset& j) {
  std::map<int, unsigned long> counts;
  for (int v : j.values()) ++counts[v];
  BigInt r = factorial(static_cast<unsigned long>(j.size()));
  for (const auto& [v, c] : counts) r = div_exact(r, factorial(c));
  return r;
}

}  // namespace hyperpf
