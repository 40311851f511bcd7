#include "hyperpf/moments.hpp"

#include <fstream>

#include "json.hpp"

namespace hyperpf {

Rational circular_moment(long k) { return Rational(k == 0 ? 1 : 0); }

Rational jacobi_moment(long a, long b, long k) {
  if (a < 1 || b < 1) throw ValidationError("jacobi weight needs integers a, b >= 1");
  if (k < 0) throw ValidationError("jacobi moment of negative order");
  // Gamma(a+k)Gamma(a+b) / (Gamma(a)Gamma(a+b+k)) = prod_{i<k} (a+i)/(a+b+i)
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= make_rational(BigInt(a + i), BigInt(a + b + i));
  r.canonicalize();
  return r;
}

MomentFunctional MomentFunctional::circular() { return {}; }

MomentFunctional MomentFunctional::gaussian(GaussianConvention convention) {
  MomentFunctional mf;
  mf.kind_ = WeightKind::kGaussian;
  mf.convention_ = convention;
  return mf;
}

MomentFunctional MomentFunctional::jacobi(long a, long b) {
  if (a < 1 || b < 1) throw ValidationError("jacobi weight needs integers a, b >= 1");
  MomentFunctional mf;
  mf.kind_ = WeightKind::kJacobi;
  mf.a_ = a;
  mf.b_ = b;
  return mf;
}

MomentFunctional MomentFunctional::custom(std::vector<Rational> moments) {
  MomentFunctional mf;
  mf.kind_ = WeightKind::kCustom;
  mf.custom_ = std::move(moments);
  return mf;
}

MomentFunctional MomentFunctional::custom_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open moments file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("moments file " + path + ": " + e.what());
  }
  if (!j.is_array()) throw ValidationError("moments file must hold a JSON list");
  std::vector<Rational> m;
  for (const auto& v : j) {
    if (v.is_string()) {
      m.push_back(parse_rational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      m.emplace_back(v.get<long>());
    } else {
      throw ValidationError("moments must be \"num/den\" strings or integers");
    }
  }
  return custom(std::move(m));
}

std::string MomentFunctional::name() const {
  switch (kind_) {
    case WeightKind::kCircular:
      return "circular";
    case WeightKind::kGaussian:
      return convention_ == GaussianConvention::kTrueMoment ? "gaussian" : "gaussian(k!!)";
    case WeightKind::kJacobi:
      return "jacobi(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    case WeightKind::kCustom:
      break;
  }
  return "custom";
}

Rational MomentFunctional::moment(long k) const {
  if (kind_ == WeightKind::kCircular) return circular_moment(k);
  if (k < 0) throw ValidationError("negative moment index for a non-circular weight");
  switch (kind_) {
    case WeightKind::kGaussian:
      if (k % 2 != 0) return Rational(0);
      if (convention_ == GaussianConvention::kEvenDoubleFactorial)
        return Rational(double_factorial_even(static_cast<int>(k)));
      return Rational(gaussian_moment(static_cast<int>(k)));
    case WeightKind::kJacobi:
      return jacobi_moment(a_, b_, k);
    case WeightKind::kCustom:
      if (static_cast<std::size_t>(k) >= custom_.size())
        throw ValidationError("custom moment " + std::to_string(k) + " not supplied");
      return custom_[static_cast<std::size_t>(k)];
    case WeightKind::kCircular:
      break;
  }
  return Rational(0);
}

}  // namespace hyperpf
