#include "hyperpf/scalar.hpp"

#include <cctype>
#include <string>

namespace hyperpf {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (is_zero(den)) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt to_integer(const Rational& q) {
  if (!is_integral(q)) throw InvariantError("expected an integer, got " + to_string(q));
  return q.get_num();
}

BigInt div_exact(const BigInt& a, const BigInt& d) {
  if (is_zero(d)) throw ValidationError("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
    throw InvariantError("inexact integer division " + to_string(a) + " / " + to_string(d));
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (is_integral(x)) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

BigInt parse_bigint(std::string_view s) {
  std::string str(s);
  while (!str.empty() && std::isspace(static_cast<unsigned char>(str.back()))) str.pop_back();
  std::size_t start = 0;
  while (start < str.size() && std::isspace(static_cast<unsigned char>(str[start]))) ++start;
  str = str.substr(start);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  std::size_t digits_from = (!str.empty() && str[0] == '-') ? 1 : 0;
  if (str.size() == digits_from) throw ValidationError("empty integer literal");
  for (std::size_t i = digits_from; i < str.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(str[i]))) {
      throw ValidationError("malformed integer literal '" + std::string(s) + "'");
    }
  }
  return BigInt(str, 10);
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  return make_rational(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow_int(const Rational& base, long e) {
  if (e < 0) return pow_int(inverse(base), -e);
  Rational r(pow_int(BigInt(base.get_num()), static_cast<unsigned long>(e)),
             pow_int(BigInt(base.get_den()), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

BigInt multinomial_central(int beta, int M) {
  if (beta < 0 || beta % 2 != 0) throw ValidationError("multinomial_central: beta must be even and >= 0");
  if (M < 1) throw ValidationError("multinomial_central: M must be >= 1");
  const auto half = static_cast<unsigned long>(beta / 2);
  BigInt num = factorial(half * static_cast<unsigned long>(M));
  BigInt den = pow_int(factorial(half), static_cast<unsigned long>(M));
  return div_exact(num, den);
}

BigInt double_factorial_even(int k) {
  if (k < 0 || k % 2 != 0) throw ValidationError("double_factorial_even: k must be even and >= 0");
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt gaussian_moment(int k) {
  if (k < 0) throw ValidationError("gaussian_moment: k must be >= 0");
  if (k % 2 != 0) return 0;
  if (k == 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k - 1));
  return r;
}

std::pair<Poly<Rational>, Poly<Rational>> divmod(const Poly<Rational>& num,
                                                 const Poly<Rational>& den) {
  if (den.zero()) throw ValidationError("polynomial division by zero");
  auto rem_c = std::vector<Rational>(num.coefficients().begin(), num.coefficients().end());
  const std::size_t dd = *den.degree();
  if (rem_c.size() <= dd) return {Poly<Rational>(), num};
  std::vector<Rational> quot(rem_c.size() - dd, Rational(0));
  const Rational lead = den.leading();
  for (std::size_t i = rem_c.size(); i-- > dd;) {
    if (is_zero(rem_c[i])) continue;
    Rational f = rem_c[i] / lead;
    quot[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem_c[i - dd + j] -= f * den.coefficient(j);
  }
  return {Poly<Rational>(std::move(quot)), Poly<Rational>(std::move(rem_c))};
}

Poly<Rational> div_exact(const Poly<Rational>& num, const Poly<Rational>& den) {
  auto [q, r] = divmod(num, den);
  if (!r.zero()) throw InvariantError("inexact polynomial division");
  return q;
}

Poly<BigInt> to_integer(const Poly<Rational>& p) {
  return p.map<BigInt>([](const Rational& v) { return to_integer(v); });
}

GaussianRational inverse(const GaussianRational& z) {
  Rational n = z.norm2();
  if (is_zero(n)) throw ValidationError("inverse of zero");
  return {Rational(z.real() / n), Rational(-z.imag() / n)};
}

GaussianRational pow_int(const GaussianRational& z, long e) {
  if (e < 0) return pow_int(inverse(z), -e);
  GaussianRational result(1), b = z;
  auto k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1UL) result = result * b;
    k >>= 1UL;
    if (k) b = b * b;
  }
  return result;
}

std::string to_string(const GaussianRational& z) {
  if (is_zero(z.imag())) return to_string(z.real());
  std::string im = to_string(z.imag());
  if (is_zero(z.real())) return im + "*i";
  if (im[0] == '-') return to_string(z.real()) + " - " + im.substr(1) + "*i";
  return to_string(z.real()) + " + " + im + "*i";
}

GaussianRational unit_circle_point(const Rational& t) {
  Rational den = 1 + t * t;
  return {Rational((1 - t * t) / den), Rational(2 * t / den)};
}

bool on_unit_circle(const GaussianRational& z) { return z.norm2() == 1; }

}  // namespace hyperpf
