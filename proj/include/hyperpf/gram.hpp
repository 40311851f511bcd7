#pragma once

// Gram L-vectors gamma and the deflated vectors gamma_y, whose hyperpfaffians
// give correlation functions. The circular case goes through the centered
// vectors eps^j.

#include <cstdlib>
#include <map>
#include <vector>

#include "hyperpf/exterior.hpp"
#include "hyperpf/indexcomb.hpp"
#include "hyperpf/moments.hpp"
#include "hyperpf/scalar.hpp"
#include "hyperpf/wronskian.hpp"

namespace hyperpf {

struct EnsembleSpec {
  int L = 2;
  int M = 1;
  MomentFunctional weight = MomentFunctional::circular();
  PolynomialFamily family = PolynomialFamily::monomials(2);

  int beta() const { return L * L; }
  int N() const { return L * M; }
  // L even and >= 2, M >= 1, family length L*M.
  void validate() const;

  static EnsembleSpec with_monomials(int L, int M, MomentFunctional weight);
};

// The circular weight is x^{-beta(M-1)/2} times the phase i^{beta(M-1)/2};
// across M particles the phase is i^{M beta (M-1)/2}.
long circular_global_phase_exponent(int L, int M);

// gamma = sum_t (int Wr(p_t) u dmu) e_t, with Wronskians expanded and the
// weight applied through its moments.
Multivector<Rational> gram_vector(const EnsembleSpec& spec);

// Monomial fast path: coefficient Dtilde(t) * m_k with k the Wronskian
// exponent under `convention`, shifted by -beta(M-1)/2 for the circular
// weight.
Multivector<Rational> monomial_gram_vector(int L, int M, const MomentFunctional& weight,
                                           WronskianExponent convention = WronskianExponent::kShifted);

// sum_{Sum t = L(N-1)/2} Dtilde(t) e_t
Multivector<BigInt> circular_gram_vector(int L, int M);

// sum_{delta u = j} Dtilde(u) e_u over [N').
Multivector<BigInt> epsilon_vector(int j, int n_prime, int L);
// Every nonzero eps^j, keyed by j, from a single enumeration.
std::map<int, Multivector<BigInt>> epsilon_vectors(int n_prime, int L);

// Which Laurent coefficient of ell feeds the term at u: kPlus reads
// [ell]_(delta u), kMinus reads [ell]_(-delta u), the one produced by
// integrating against the weight term by term.
enum class DeltaConvention { kPlus, kMinus };

// sum_u [ell]_(+-delta u) Dtilde(u) e_u over [n_prime).
template <ExactRing T>
Multivector<T> gamma_from_laurent(const LaurentPoly<T>& ell, int n_prime, int L, DeltaConvention convention) {
  TermAccumulator<T> acc;
  if (ell.zero()) return std::move(acc).finish(n_prime, L);
  const long bound = std::max(std::abs(static_cast<long>(*ell.lowest_exponent())),
                              std::abs(static_cast<long>(*ell.highest_exponent())));
  for_each_subset(n_prime, L, DeltaWithin{bound}, [&](const IndexSet& u) {
    const long d = delta_of(u, n_prime, L);
    T c = ell.coefficient(static_cast<int>(convention == DeltaConvention::kPlus ? d : -d));
    if (is_zero(c)) return;
    acc.add(u.mask(), T(c * T(vandermonde_ratio(u))));
  });
  return std::move(acc).finish(n_prime, L);
}

// (x + 1/x - c)^beta with coefficients in Z[c].
LaurentPoly<Poly<BigInt>> pair_laurent(int beta);
// x^{-beta/2} (x - y)^beta with coefficients in Z[y].
LaurentPoly<Poly<BigInt>> single_point_laurent(int beta);

// m = 2 with y = (e^{i theta}, e^{-i theta}); coefficients in c = 2 cos theta.
Multivector<Poly<BigInt>> gamma_y_pair_symbolic(int L, int M, DeltaConvention convention = DeltaConvention::kPlus);
// m = 1; coefficients in y.
Multivector<Poly<BigInt>> gamma_y_single_symbolic(int L, int M, DeltaConvention convention = DeltaConvention::kPlus);

// x^{-beta m/2} prod_j (x - y_j)^beta for exact points.
LaurentPoly<GaussianRational> circular_point_laurent(int beta, const std::vector<GaussianRational>& ys);
Multivector<GaussianRational> gamma_y_circular(int L, int M, const std::vector<GaussianRational>& ys,
                                               DeltaConvention convention = DeltaConvention::kPlus);

// gamma_y = sum_u (int prod_j (x - y_j)^beta Wr(p_u) u dmu) e_u over
// [L(M-m)), family truncated to L(M-m). Y is Rational for real weights and
// GaussianRational for the circular one (points must lie on the circle).
template <class Y>
Multivector<Y> gamma_y_general(const EnsembleSpec& spec, const std::vector<Y>& ys);

extern template Multivector<Rational> gamma_y_general(const EnsembleSpec&, const std::vector<Rational>&);
extern template Multivector<GaussianRational> gamma_y_general(const EnsembleSpec&,
                                                              const std::vector<GaussianRational>&);

}  // namespace hyperpf
