#pragma once

// Sparse grade-homogeneous multivectors over an exact ring, with the wedge
// product and the top-grade Hodge star. Hyperpfaffians are built on both.
//
// Basis vectors are e_0, ..., e_{N-1}. A term e_t is keyed by the bitmask of
// t; terms are stored in lexicographic order of t, zeros never stored.

#include <algorithm>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperpf/indexcomb.hpp"
#include "hyperpf/parallel.hpp"
#include "hyperpf/scalar.hpp"

namespace hyperpf {

// Parity of the inversions between two disjoint masks: +1 / -1, or 0 when
// they overlap. Equals the sign of sorting the concatenation (t, u).
inline int merge_sign(Mask t, Mask u) {
  if (t & u) return 0;
  int inversions = 0;
  Mask rest = t;
  while (rest) {
    const int b = lowest_bit_index(rest);
    inversions += popcount(u & low_bits(b));
    rest &= rest - 1;
  }
  return (inversions & 1) ? -1 : 1;
}
inline int merge_sign(const IndexSet& t, const IndexSet& u) { return merge_sign(t.mask(), u.mask()); }

template <ExactRing R>
class Multivector;

// Hash-map accumulation of terms; finish() drops zeros and sorts.
template <ExactRing R>
class TermAccumulator {
 public:
  void add(Mask key, const R& value) {
    auto [it, inserted] = terms_.try_emplace(key, value);
    if (!inserted) it->second += value;
  }
  void subtract(Mask key, const R& value) {
    auto [it, inserted] = terms_.try_emplace(key, R(-value));
    if (!inserted) it->second -= value;
  }
  void merge(TermAccumulator&& other) {
    if (terms_.empty()) {
      terms_ = std::move(other.terms_);
      return;
    }
    for (auto& [k, v] : other.terms_) add(k, v);
  }
  std::size_t size() const { return terms_.size(); }
  Multivector<R> finish(int dimension, int grade) && {
    return std::move(*this).finish(dimension, grade, [](Mask) { return true; });
  }
  // Keeps only keys accepted by keep(key).
  template <class Keep>
  Multivector<R> finish(int dimension, int grade, Keep&& keep) &&;

 private:
  std::unordered_map<Mask, R, MaskHash> terms_;
};

template <ExactRing R>
class Multivector {
 public:
  using Term = std::pair<Mask, R>;

  Multivector() = default;
  Multivector(int dimension, int grade) : n_(dimension), grade_(grade) { validate_shape(); }

  // Duplicate keys are summed and zero results dropped.
  static Multivector from_terms(int dimension, int grade, const std::vector<std::pair<IndexSet, R>>& terms) {
    Multivector probe(dimension, grade);
    TermAccumulator<R> acc;
    for (const auto& [t, v] : terms) {
      probe.check_key(t.mask());
      acc.add(t.mask(), v);
    }
    return std::move(acc).finish(dimension, grade);
  }

  // Trusted constructor: keys unique, nonzero, of the right cardinality.
  static Multivector from_sorted_unique(int dimension, int grade, std::vector<Term> terms) {
    Multivector m(dimension, grade);
    m.terms_ = std::move(terms);
    return m;
  }

  int dimension() const { return n_; }
  int grade() const { return grade_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool zero() const { return terms_.empty(); }

  R coefficient(Mask key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& term, Mask k) { return lex_less(term.first, k); });
    if (it != terms_.end() && it->first == key) return it->second;
    return R(0);
  }
  R coefficient(const IndexSet& t) const { return coefficient(t.mask()); }

  Mask support_union() const {
    Mask u = 0;
    for (const auto& term : terms_) u |= term.first;
    return u;
  }

  template <ExactRing U, class F>
  Multivector<U> map_coefficients(F&& f) const {
    TermAccumulator<U> acc;
    for (const auto& [k, v] : terms_) acc.add(k, f(v));
    return std::move(acc).finish(n_, grade_);
  }

  Multivector scaled(const R& s) const {
    return map_coefficients<R>([&](const R& v) { return R(v * s); });
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    a.check_compatible(b);
    TermAccumulator<R> acc;
    for (const auto& [k, v] : a.terms_) acc.add(k, v);
    for (const auto& [k, v] : b.terms_) acc.add(k, v);
    return std::move(acc).finish(a.n_, a.grade_);
  }
  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    a.check_compatible(b);
    TermAccumulator<R> acc;
    for (const auto& [k, v] : a.terms_) acc.add(k, v);
    for (const auto& [k, v] : b.terms_) acc.subtract(k, v);
    return std::move(acc).finish(a.n_, a.grade_);
  }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.grade_ == b.grade_ && a.terms_ == b.terms_;
  }

  void check_compatible(const Multivector& o) const {
    if (n_ != o.n_ || grade_ != o.grade_) throw ValidationError("multivector shape mismatch");
  }
  void check_key(Mask key) const {
    if (popcount(key) != grade_) throw ValidationError("term cardinality differs from grade");
    if ((key & ~low_bits(n_)) != 0) throw ValidationError("term index outside ambient dimension");
  }

 private:
  void validate_shape() const {
    if (n_ < 0 || n_ > kMaxDimension) throw ValidationError("unsupported ambient dimension");
    if (grade_ < 0 || grade_ > n_) throw ValidationError("grade outside [0, N]");
  }

  int n_ = 0;
  int grade_ = 0;
  std::vector<Term> terms_;
};

template <ExactRing R>
template <class Keep>
Multivector<R> TermAccumulator<R>::finish(int dimension, int grade, Keep&& keep) && {
  std::vector<typename Multivector<R>::Term> out;
  out.reserve(terms_.size());
  for (auto& [k, v] : terms_) {
    if (!is_zero(v) && keep(k)) out.emplace_back(k, std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  terms_.clear();
  return Multivector<R>::from_sorted_unique(dimension, grade, std::move(out));
}

// Grade-0 element holding a scalar.
template <ExactRing R>
Multivector<R> scalar_multivector(int dimension, const R& value) {
  TermAccumulator<R> acc;
  acc.add(0, value);
  return std::move(acc).finish(dimension, 0);
}

namespace detail {

// Terms of a wedge b restricted to keys accepted by keep(key).
template <ExactRing R, class Keep>
Multivector<R> wedge_filtered(const Multivector<R>& a, const Multivector<R>& b, int threads, Keep&& keep) {
  if (a.dimension() != b.dimension()) throw ValidationError("wedge: ambient dimension mismatch");
  const int grade = a.grade() + b.grade();
  if (grade > a.dimension()) throw ValidationError("wedge: grades exceed ambient dimension");
  const auto at = a.terms();
  const auto bt = b.terms();
  std::vector<TermAccumulator<R>> partial(static_cast<std::size_t>(std::max(threads, 1)));
  const std::size_t used = parallel_chunks(at.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    auto& acc = partial[c];
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [ka, va] = at[i];
      for (const auto& [kb, vb] : bt) {
        const int s = merge_sign(ka, kb);
        if (s == 0) continue;
        const Mask key = ka | kb;
        if (s > 0) {
          acc.add(key, R(va * vb));
        } else {
          acc.subtract(key, R(va * vb));
        }
      }
    }
  });
  TermAccumulator<R> total;
  for (std::size_t c = 0; c < used; ++c) total.merge(std::move(partial[c]));
  return std::move(total).finish(a.dimension(), grade, keep);
}

}  // namespace detail

// a ^ b; coefficient of e_v is the signed sum over disjoint t | u = v.
template <ExactRing R>
Multivector<R> wedge(const Multivector<R>& a, const Multivector<R>& b, int threads = 1) {
  return detail::wedge_filtered(a, b, threads, [](Mask) { return true; });
}

// Coefficient of e_0 ^ ... ^ e_{N-1}.
template <ExactRing R>
R star_top(const Multivector<R>& a) {
  if (a.grade() != a.dimension()) throw ValidationError("star_top: multivector is not of top grade");
  return a.coefficient(low_bits(a.dimension()));
}

// star(a ^ b) for complementary grades without materializing the wedge.
template <ExactRing R>
R star_of_wedge(const Multivector<R>& a, const Multivector<R>& b) {
  if (a.dimension() != b.dimension() || a.grade() + b.grade() != a.dimension()) {
    throw ValidationError("star_of_wedge: grades must be complementary");
  }
  const Mask full = low_bits(a.dimension());
  R total(0);
  for (const auto& [ka, va] : a.terms()) {
    const Mask comp = full & ~ka;
    R vb = b.coefficient(comp);
    if (is_zero(vb)) continue;
    if (merge_sign(ka, comp) > 0) {
      total += R(va * vb);
    } else {
      total -= R(va * vb);
    }
  }
  return total;
}

// star(w ^ ... ^ w) with M factors, computed by iterated wedge. Partial
// products whose complement cannot be covered by support terms disjoint
// from them are dropped. Works for any grade; for odd grade it is 0.
template <ExactRing R>
R wedge_power_top(const Multivector<R>& w, int M, int threads = 1) {
  const int N = w.dimension();
  if (w.grade() * M != N) throw ValidationError("wedge_power_top: grade * M must equal the dimension");
  if (M == 0) return R(1);
  const Mask full = low_bits(N);
  std::vector<Mask> support;
  support.reserve(w.size());
  for (const auto& term : w.terms()) support.push_back(term.first);
  auto completable = [&](Mask key) {
    const Mask need = full & ~key;
    if (need == 0) return true;
    Mask cover = 0;
    for (Mask s : support) {
      if ((s & key) == 0) cover |= s;
    }
    return (need & ~cover) == 0;
  };
  if (M == 1) return star_top(w);
  Multivector<R> current = detail::wedge_filtered(scalar_multivector<R>(N, R(1)), w, 1, completable);
  for (int k = 2; k < M; ++k) current = detail::wedge_filtered(current, w, threads, completable);
  return star_of_wedge(current, w);
}

// PF(w) = star(w^M) / M! for a grade-L multivector in dimension L*M, L even.
template <ExactRing R>
R hyperpfaffian(const Multivector<R>& w, int M, int threads = 1) {
  if (w.grade() % 2 != 0) throw ValidationError("hyperpfaffian: grade must be even");
  if (w.grade() * M != w.dimension()) throw ValidationError("hyperpfaffian: dimension must equal grade * M");
  R top = wedge_power_top(w, M, threads);
  return div_exact(top, factorial(static_cast<unsigned long>(M)));
}

// Independent route: expansion along the smallest remaining index with
// memoization on the remaining set. No division by M! is needed.
template <ExactRing R>
R hyperpfaffian_expansion(const Multivector<R>& w) {
  const int L = w.grade();
  const int N = w.dimension();
  if (L % 2 != 0) throw ValidationError("hyperpfaffian: grade must be even");
  if (L == 0 || N % L != 0) throw ValidationError("hyperpfaffian: dimension must be a multiple of the grade");
  std::vector<std::vector<const typename Multivector<R>::Term*>> by_min(static_cast<std::size_t>(N));
  for (const auto& term : w.terms()) by_min[static_cast<std::size_t>(lowest_bit_index(term.first))].push_back(&term);
  std::unordered_map<Mask, R, MaskHash> memo;
  auto solve = [&](auto&& self, Mask remaining) -> R {
    if (remaining == 0) return R(1);
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    R total(0);
    for (const auto* term : by_min[static_cast<std::size_t>(lowest_bit_index(remaining))]) {
      const Mask t = term->first;
      if ((t & ~remaining) != 0) continue;
      const Mask rest = remaining & ~t;
      R sub = self(self, rest);
      if (is_zero(sub)) continue;
      if (merge_sign(t, rest) > 0) {
        total += R(term->second * sub);
      } else {
        total -= R(term->second * sub);
      }
    }
    memo.emplace(remaining, total);
    return total;
  };
  return solve(solve, low_bits(N));
}

// 2-vector sum_{m<n} a_{mn} e_m ^ e_n of a square matrix's upper triangle.
template <ExactRing R>
Multivector<R> two_vector_from_matrix(const Matrix<R>& A) {
  const int n = static_cast<int>(A.rows());
  TermAccumulator<R> acc;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) acc.add(bit(i) | bit(j), A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return std::move(acc).finish(n, 2);
}

// Pf(A) by recursive expansion along the first remaining row.
template <ExactRing R>
R pfaffian_classical(const Matrix<R>& A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw ValidationError("pfaffian: matrix must be square");
  if (n % 2 != 0) throw ValidationError("pfaffian: dimension must be even");
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(A(i, i))) throw ValidationError("pfaffian: nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(A(i, j) == R(-A(j, i)))) throw ValidationError("pfaffian: matrix is not antisymmetric");
    }
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  auto expand = [&](auto&& self, const std::vector<std::size_t>& rows) -> R {
    if (rows.empty()) return R(1);
    R total(0);
    const std::size_t first = rows[0];
    for (std::size_t j = 1; j < rows.size(); ++j) {
      const R& a = A(first, rows[j]);
      if (is_zero(a)) continue;
      std::vector<std::size_t> rest;
      rest.reserve(rows.size() - 2);
      for (std::size_t k = 1; k < rows.size(); ++k)
        if (k != j) rest.push_back(rows[k]);
      R sub = self(self, rest);
      if (j % 2 == 1) {
        total += R(a * sub);
      } else {
        total -= R(a * sub);
      }
    }
    return total;
  };
  return expand(expand, idx);
}

}  // namespace hyperpf
