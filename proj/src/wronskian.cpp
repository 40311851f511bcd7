#include "hyperpf/wronskian.hpp"

namespace hyperpf {

PolynomialFamily::PolynomialFamily(FamilyKind kind, std::vector<QPoly> polys, Rational shift)
    : kind_(kind), polys_(std::move(polys)), shift_(std::move(shift)) {
  for (std::size_t n = 0; n < polys_.size(); ++n) {
    const auto deg = polys_[n].degree();
    if (!deg || *deg != n) throw ValidationError("family member " + std::to_string(n) + " has the wrong degree");
    if (polys_[n].leading() != 1) throw ValidationError("family member " + std::to_string(n) + " is not monic");
  }
}

PolynomialFamily PolynomialFamily::monomials(int N) {
  std::vector<QPoly> p;
  for (int n = 0; n < N; ++n) p.push_back(QPoly::monomial(Rational(1), static_cast<std::size_t>(n)));
  return {FamilyKind::kMonomial, std::move(p)};
}

PolynomialFamily PolynomialFamily::hermite(int N) {
  if (N < 1) throw ValidationError("hermite family needs N >= 1");
  std::vector<QPoly> h;
  h.emplace_back(1);
  if (N > 1) h.push_back(QPoly::x());
  for (int n = 1; n + 1 < N; ++n) {
    h.push_back(QPoly::x() * h[static_cast<std::size_t>(n)] - h[static_cast<std::size_t>(n - 1)].scaled(Rational(n)));
  }
  return {FamilyKind::kHermite, std::move(h)};
}

PolynomialFamily PolynomialFamily::shifted_monomials(int N, const Rational& shift) {
  std::vector<QPoly> p;
  const QPoly base(std::vector<Rational>{Rational(-shift), Rational(1)});
  QPoly power(1);
  for (int n = 0; n < N; ++n) {
    p.push_back(power);
    power = power * base;
  }
  return {FamilyKind::kShiftedMonomial, std::move(p), shift};
}

PolynomialFamily PolynomialFamily::custom(std::vector<QPoly> polys) {
  return {FamilyKind::kCustom, std::move(polys)};
}

std::string PolynomialFamily::name() const {
  switch (kind_) {
    case FamilyKind::kMonomial:
      return "monomial";
    case FamilyKind::kHermite:
      return "hermite";
    case FamilyKind::kShiftedMonomial:
      return "shifted_monomial(" + to_string(shift_) + ")";
    case FamilyKind::kCustom:
      break;
  }
  return "custom";
}

PolynomialFamily PolynomialFamily::truncated(int n) const {
  if (n > size()) throw ValidationError("family truncation beyond its length");
  return {kind_, std::vector<QPoly>(polys_.begin(), polys_.begin() + n), shift_};
}

QPoly renormalized_derivative(const QPoly& p, int l) {
  if (l < 0) throw ValidationError("derivative order must be >= 0");
  const auto deg = p.degree();
  if (!deg || static_cast<std::size_t>(l) > *deg) return {};
  std::vector<Rational> out(*deg - static_cast<std::size_t>(l) + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = Rational(binomial(static_cast<long>(k) + l, l)) * p.coefficient(k + static_cast<std::size_t>(l));
  }
  return QPoly(std::move(out));
}

namespace {

QPoly det_cofactor(const Matrix<QPoly>& A, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = A.rows();
  if (row == n) return QPoly(1);
  QPoly total;
  int sign = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::size_t c = cols[i];
    if (!A(row, c).zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
      QPoly minor = det_cofactor(A, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
      if (sign > 0) {
        total += A(row, c) * minor;
      } else {
        total -= A(row, c) * minor;
      }
    }
    sign = -sign;
  }
  return total;
}

QPoly det_bareiss(Matrix<QPoly> A) {
  const std::size_t n = A.rows();
  QPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k).zero()) {
      std::size_t swap = k + 1;
      while (swap < n && A(swap, k).zero()) ++swap;
      if (swap == n) return {};
      A.swap_rows(k, swap);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        A(i, j) = div_exact(A(k, k) * A(i, j) - A(i, k) * A(k, j), prev);
      }
    }
    prev = A(k, k);
  }
  QPoly d = A(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

QPoly polynomial_determinant(const Matrix<QPoly>& A) {
  if (A.rows() != A.cols()) throw ValidationError("determinant of a non-square matrix");
  if (A.rows() == 0) return QPoly(1);
  if (A.rows() <= 5) {
    std::vector<std::size_t> cols(A.cols());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return det_cofactor(A, cols, 0);
  }
  return det_bareiss(A);
}

QPoly wronskian(std::span<const QPoly> fs) {
  const std::size_t L = fs.size();
  Matrix<QPoly> A(L, L);
  for (std::size_t l = 0; l < L; ++l)
    for (std::size_t k = 0; k < L; ++k) A(l, k) = renormalized_derivative(fs[k], static_cast<int>(l));
  return polynomial_determinant(A);
}

QPoly wronskian(const PolynomialFamily& family, const IndexSet& t) {
  std::vector<QPoly> fs;
  for (int e : t.elements()) {
    if (e >= family.size()) throw ValidationError("index set exceeds the family length");
    fs.push_back(family[e]);
  }
  return wronskian(fs);
}

MonomialWronskian monomial_wronskian(const IndexSet& t) {
  const long L = t.size();
  return {vandermonde_ratio(t), sum_of(t) - L * (L - 1) / 2};
}

long monomial_wronskian_exponent(const IndexSet& t, WronskianExponent convention) {
  if (convention == WronskianExponent::kUnshifted) return sum_of(t);
  return monomial_wronskian(t).exponent;
}

namespace {

// Determinant of a small rational matrix by Gaussian elimination.
Rational rational_det(Matrix<Rational> A) {
  const std::size_t n = A.rows();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(A(p, k))) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      A.swap_rows(p, k);
      det = -det;
    }
    det *= A(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(A(i, k))) continue;
      Rational f = A(i, k) / A(k, k);
      for (std::size_t j = k; j < n; ++j) A(i, j) -= f * A(k, j);
    }
  }
  return det;
}

}  // namespace

Multivector<Rational> omega_blade(const PolynomialFamily& family, int L, const Rational& x) {
  const int N = family.size();
  if (L < 0 || L > N) throw ValidationError("omega_blade: need 0 <= L <= N");
  // values(n, l) = D^l p_n (x)
  Matrix<Rational> values(static_cast<std::size_t>(N), static_cast<std::size_t>(L));
  for (int n = 0; n < N; ++n)
    for (int l = 0; l < L; ++l)
      values(static_cast<std::size_t>(n), static_cast<std::size_t>(l)) =
          renormalized_derivative(family[n], l).eval(x);
  TermAccumulator<Rational> acc;
  for_each_subset(N, L, NoConstraint{}, [&](const IndexSet& t) {
    Matrix<Rational> minor(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l)
      for (int k = 0; k < L; ++k)
        minor(static_cast<std::size_t>(l), static_cast<std::size_t>(k)) =
            values(static_cast<std::size_t>(t[static_cast<std::size_t>(k)]), static_cast<std::size_t>(l));
    acc.add(t.mask(), rational_det(std::move(minor)));
  });
  return std::move(acc).finish(N, L);
}

Rational vandermonde_power_direct(std::span<const Rational> xs, int L) {
  Rational prod(1);
  for (std::size_t m = 0; m < xs.size(); ++m)
    for (std::size_t n = m + 1; n < xs.size(); ++n) prod *= Rational(xs[n] - xs[m]);
  return pow_int(prod, static_cast<long>(L) * L);
}

}  // namespace hyperpf
