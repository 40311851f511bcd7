#pragma once

// JSON and CSV rendering of reports. Integers are decimal strings and
// rationals "num/den"; a polynomial is an array, lowest degree first.
// Correlation output carries no timings, so it is byte-stable.

#include <string>
#include <vector>

#include "json.hpp"

#include "hyperpf/correlation.hpp"
#include "hyperpf/evaluations.hpp"
#include "hyperpf/exterior.hpp"
#include "hyperpf/scalar.hpp"

namespace hyperpf {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& x) { return to_string(x); }
inline Json to_json(const Rational& x) { return to_string(x); }
inline Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.real())}, {"im", to_string(z.imag())}}; }

template <class T>
Json to_json(const Poly<T>& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

// {N, grade, term_count, sparsity, terms: [{indices, coeff}]} in stored
// (lexicographic) order; sparsity is term_count / C(N, grade).
template <class R>
Json to_json(const Multivector<R>& w) {
  Json terms = Json::array();
  for (const auto& [mask, c] : w.terms()) {
    const auto set = IndexSet::from_mask(mask);
    const auto elems = set.elements();
    terms.push_back(Json{{"indices", std::vector<int>(elems.begin(), elems.end())}, {"coeff", to_json(c)}});
  }
  return Json{{"N", w.dimension()},
              {"grade", w.grade()},
              {"term_count", w.size()},
              {"sparsity", to_string(make_rational(BigInt(static_cast<unsigned long>(w.size())),
                                                   binomial(w.dimension(), w.grade())))},
              {"terms", std::move(terms)}};
}

Json to_json(const CorrelationReport& report);
Json to_json(const IdentityReport& report);
Json to_json(const RmResult& result);

// "theta,value" with the given number of significant digits.
std::string samples_csv(const std::vector<SampleRow>& rows, int precision = 17);

}  // namespace hyperpf
