#pragma once

// Brute-force ground truth by constant-term extraction on the torus. Shares
// only the scalar rings with the rest of the library.
//
// On |x| = |y| = 1: |x - y|^2 = 2 - x conj(y) - y / x, so every |.|^beta
// with beta even is a Laurent polynomial.

#include <cstddef>
#include <map>
#include <vector>

#include "hyperpf/scalar.hpp"

namespace hyperpf {

// Hard caps. The box is the number of exponent vectors the integrand can
// reach; the term cap bounds every intermediate product. Together they admit
// beta <= 4 with M <= 4 and beta = 16 with M <= 3 for the partition function.
inline constexpr std::size_t kOracleBoxBudget = 20000;
inline constexpr std::size_t kOracleTermBudget = 200000;

// Sparse Laurent polynomial in a fixed number of variables.
template <class R>
class MultiLaurent {
 public:
  using Exponents = std::vector<int>;

  explicit MultiLaurent(int variables = 0) : vars_(variables) {}
  static MultiLaurent constant(int variables, const R& c) {
    MultiLaurent p(variables);
    p.add(Exponents(static_cast<std::size_t>(variables), 0), c);
    return p;
  }
  static MultiLaurent monomial(int variables, const Exponents& e, const R& c) {
    MultiLaurent p(variables);
    p.add(e, c);
    return p;
  }

  int variables() const { return vars_; }
  std::size_t size() const { return terms_.size(); }
  bool zero() const { return terms_.empty(); }
  const std::map<Exponents, R>& terms() const { return terms_; }

  void add(const Exponents& e, const R& c) {
    if (static_cast<int>(e.size()) != vars_) throw ValidationError("exponent vector length mismatch");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  R coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }
  R constant_term() const { return coefficient(Exponents(static_cast<std::size_t>(vars_), 0)); }

  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.vars_ != b.vars_) throw ValidationError("variable count mismatch");
    MultiLaurent out(a.vars_);
    Exponents e(static_cast<std::size_t>(a.vars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add(e, R(ca * cb));
      }
      if (out.terms_.size() > kOracleTermBudget) {
        throw BudgetExceeded("oracle expansion exceeds " + std::to_string(kOracleTermBudget) + " terms");
      }
    }
    return out;
  }
  friend bool operator==(const MultiLaurent&, const MultiLaurent&) = default;

 private:
  int vars_;
  std::map<Exponents, R> terms_;
};

template <class R>
MultiLaurent<R> pow(const MultiLaurent<R>& base, unsigned e) {
  MultiLaurent<R> result = MultiLaurent<R>::constant(base.variables(), R(1));
  for (unsigned k = 0; k < e; ++k) result = result * base;
  return result;
}

// How the partition function integrand is written.
// kModulus: prod_{m<n} |x_n - x_m|^beta.
// kSignedVandermonde: i^{M beta (M-1)/2} prod (x_n - x_m)^beta prod x^{-beta(M-1)/2}.
enum class CtForm { kModulus, kSignedVandermonde };

// Z = (1/M!) CT[integrand].
Rational ct_partition_circular(int beta, int M, CtForm form = CtForm::kModulus);

// Marginal integral I(c) = int prod_k (x_k + 1/x_k - c)^beta |Delta(x)|^beta
// over M-2 free points, as a polynomial in c = 2 cos theta; it equals the
// r(y) of the pair correlation.
Poly<BigInt> direct_R2_symbolic(int beta, int M);

// R_m(y) against Haar measure by direct integration over the M-m free
// points: M!/(M-m)! / C * |Delta(y)|^beta * I(y).
GaussianRational direct_Rm(int beta, int M, const std::vector<GaussianRational>& ys);

// R_m with the last point left as a torus variable z, for the fixed points
// ys (m-1 of them). Its constant term in z is (M-m+1) R_{m-1}(ys).
LaurentPoly<GaussianRational> direct_Rm_last_variable(int beta, int M, const std::vector<GaussianRational>& ys);

// Determinant by fraction-free elimination with row pivoting.
BigInt det_exact(Matrix<BigInt> A);
Rational det_exact(const Matrix<Rational>& A);

}  // namespace hyperpf
