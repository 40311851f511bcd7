#include "hyperpf/gram.hpp"

#include <type_traits>

namespace hyperpf {

void EnsembleSpec::validate() const {
  if (L < 2 || L % 2 != 0) throw ValidationError("L must be an even integer >= 2");
  if (M < 1) throw ValidationError("M must be >= 1");
  if (N() > kMaxDimension) throw ValidationError("L*M exceeds " + std::to_string(kMaxDimension));
  if (family.size() != N()) throw ValidationError("family length must equal L*M");
}

EnsembleSpec EnsembleSpec::with_monomials(int L, int M, MomentFunctional weight) {
  if (L < 1 || M < 1) throw ValidationError("L and M must be positive");
  return {L, M, std::move(weight), PolynomialFamily::monomials(L * M)};
}

namespace {

constexpr long phase_exponent(long L, long M) { return M * L * L * (M - 1) / 2; }

// i^{M beta (M-1)/2} = 1 whenever L is even. The per-particle factor
// i^{beta(M-1)/2} alone is -1 for L = 2 and even M, so only the product over
// particles drops out.
constexpr bool global_phase_trivial(long max_L, long max_M) {
  for (long L = 2; L <= max_L; L += 2)
    for (long M = 1; M <= max_M; ++M)
      if (phase_exponent(L, M) % 4 != 0) return false;
  return true;
}
static_assert(global_phase_trivial(16, 64));
static_assert(phase_exponent(2, 2) / 2 % 4 == 2, "per-particle phase is -1 at L = 2, M = 2");

}  // namespace

long circular_global_phase_exponent(int L, int M) { return phase_exponent(L, M); }

namespace {

long circular_shift(int L, int M) { return static_cast<long>(L) * L * (M - 1) / 2; }

template <class Y>
bool admissible_circle_point(const Y& y) {
  if constexpr (std::is_same_v<Y, GaussianRational>) {
    return on_unit_circle(y);
  } else {
    return Rational(y * y) == 1;
  }
}

}  // namespace

template <class Y>
Multivector<Y> gamma_y_general(const EnsembleSpec& spec, const std::vector<Y>& ys) {
  spec.validate();
  const int m = static_cast<int>(ys.size());
  if (m > spec.M) throw ValidationError("more fixed points than particles");
  const bool circular = spec.weight.kind() == WeightKind::kCircular;
  const int n_prime = spec.L * (spec.M - m);
  Poly<Y> prod(1);
  const Poly<Y> x = Poly<Y>::x();
  for (const Y& y : ys) {
    if (circular && !admissible_circle_point(y)) throw ValidationError("circular weight needs points on the unit circle");
    prod = prod * pow(x - Poly<Y>(y), static_cast<unsigned>(spec.beta()));
  }
  const PolynomialFamily family = spec.family.truncated(n_prime);
  const long shift = circular_shift(spec.L, spec.M);
  if (n_prime < spec.L) throw ValidationError("gamma_y needs at least one free particle");
  TermAccumulator<Y> acc;
  for_each_subset(n_prime, spec.L, NoConstraint{}, [&](const IndexSet& u) {
    const Poly<Y> w = wronskian(family, u).template map<Y>([](const Rational& v) { return Y(v); });
    const Poly<Y> integrand = prod * w;
    Y c = circular ? integrand.coefficient(static_cast<std::size_t>(shift)) : spec.weight.apply(integrand);
    if (!is_zero(c)) acc.add(u.mask(), c);
  });
  return std::move(acc).finish(n_prime, spec.L);
}

template Multivector<Rational> gamma_y_general(const EnsembleSpec&, const std::vector<Rational>&);
template Multivector<GaussianRational> gamma_y_general(const EnsembleSpec&, const std::vector<GaussianRational>&);

Multivector<Rational> gram_vector(const EnsembleSpec& spec) {
  return gamma_y_general<Rational>(spec, {});
}

Multivector<Rational> monomial_gram_vector(int L, int M, const MomentFunctional& weight,
                                           WronskianExponent convention) {
  const EnsembleSpec spec = EnsembleSpec::with_monomials(L, M, weight);
  spec.validate();
  const bool circular = weight.kind() == WeightKind::kCircular;
  const long shift = circular ? circular_shift(L, M) : 0;
  SubsetConstraint constraint = NoConstraint{};
  if (circular) {
    const long offset = convention == WronskianExponent::kShifted ? static_cast<long>(L) * (L - 1) / 2 : 0;
    constraint = SumEquals{shift + offset};
  }
  TermAccumulator<Rational> acc;
  for_each_subset(spec.N(), L, constraint, [&](const IndexSet& t) {
    const long k = monomial_wronskian_exponent(t, convention) - shift;
    Rational mk = weight.moment(k);
    if (is_zero(mk)) return;
    acc.add(t.mask(), Rational(mk * Rational(vandermonde_ratio(t))));
  });
  return std::move(acc).finish(spec.N(), L);
}

Multivector<BigInt> circular_gram_vector(int L, int M) {
  if (L < 2 || L % 2 != 0) throw ValidationError("L must be an even integer >= 2");
  if (M < 1) throw ValidationError("M must be >= 1");
  const int N = L * M;
  if (N > kMaxDimension) throw ValidationError("L*M exceeds " + std::to_string(kMaxDimension));
  TermAccumulator<BigInt> acc;
  for_each_subset(N, L, SumEquals{static_cast<long>(L) * (N - 1) / 2},
                  [&](const IndexSet& t) { acc.add(t.mask(), vandermonde_ratio(t)); });
  return std::move(acc).finish(N, L);
}

std::map<int, Multivector<BigInt>> epsilon_vectors(int n_prime, int L) {
  if (L % 2 != 0) throw ValidationError("epsilon vectors need even L");
  std::map<int, TermAccumulator<BigInt>> buckets;
  for_each_subset(n_prime, L, NoConstraint{}, [&](const IndexSet& u) {
    buckets[static_cast<int>(delta_of(u, n_prime, L))].add(u.mask(), vandermonde_ratio(u));
  });
  std::map<int, Multivector<BigInt>> out;
  for (auto& [j, acc] : buckets) out.emplace(j, std::move(acc).finish(n_prime, L));
  return out;
}

Multivector<BigInt> epsilon_vector(int j, int n_prime, int L) {
  if (L % 2 != 0) throw ValidationError("epsilon vectors need even L");
  TermAccumulator<BigInt> acc;
  // delta u = j  <=>  Sum u = j + L(N'-1)/2
  const long target = j + static_cast<long>(L) * (n_prime - 1) / 2;
  for_each_subset(n_prime, L, SumEquals{target}, [&](const IndexSet& u) { acc.add(u.mask(), vandermonde_ratio(u)); });
  return std::move(acc).finish(n_prime, L);
}

LaurentPoly<Poly<BigInt>> pair_laurent(int beta) {
  using P = Poly<BigInt>;
  const LaurentPoly<P> base(-1, {P(1), -P::x(), P(1)});
  return pow(base, static_cast<unsigned>(beta));
}

LaurentPoly<Poly<BigInt>> single_point_laurent(int beta) {
  using P = Poly<BigInt>;
  if (beta % 2 != 0) throw ValidationError("beta must be even");
  const LaurentPoly<P> base(0, {-P::x(), P(1)});
  return pow(base, static_cast<unsigned>(beta)).shifted(-beta / 2);
}

Multivector<Poly<BigInt>> gamma_y_pair_symbolic(int L, int M, DeltaConvention convention) {
  if (M < 3) throw ValidationError("gamma_y for m = 2 needs M >= 3");
  return gamma_from_laurent(pair_laurent(L * L), L * (M - 2), L, convention);
}

Multivector<Poly<BigInt>> gamma_y_single_symbolic(int L, int M, DeltaConvention convention) {
  if (M < 2) throw ValidationError("gamma_y for m = 1 needs M >= 2");
  return gamma_from_laurent(single_point_laurent(L * L), L * (M - 1), L, convention);
}

LaurentPoly<GaussianRational> circular_point_laurent(int beta, const std::vector<GaussianRational>& ys) {
  using G = GaussianRational;
  LaurentPoly<G> prod(1);
  for (const G& y : ys) {
    if (!on_unit_circle(y)) throw ValidationError("point " + to_string(y) + " is not on the unit circle");
    prod = prod * pow(LaurentPoly<G>(0, {G(-y), G(1)}), static_cast<unsigned>(beta));
  }
  return prod.shifted(-beta * static_cast<int>(ys.size()) / 2);
}

Multivector<GaussianRational> gamma_y_circular(int L, int M, const std::vector<GaussianRational>& ys,
                                               DeltaConvention convention) {
  const int m = static_cast<int>(ys.size());
  if (M - m < 1) throw ValidationError("gamma_y needs at least one free particle");
  return gamma_from_laurent(circular_point_laurent(L * L, ys), L * (M - m), L, convention);
}

}  // namespace hyperpf
