#include "hyperpf/report_json.hpp"

#include <cstdio>

namespace hyperpf {

Json to_json(const CorrelationReport& report) {
  const std::string num = to_string(report.falling_factorial);
  const std::string den = to_string(report.central_multinomial);
  const std::string factored =
      report.convention == DensityConvention::kAngle ? num + "/(2*pi*" + den + ")" : num + "/" + den;
  Json fourier = Json::array();
  for (const auto& f : report.fourier) fourier.push_back(to_json(f));
  return Json{{"beta", report.beta},
              {"M", report.M},
              {"m", report.m},
              {"L", report.L},
              {"convention", to_string(report.convention)},
              {"normalization", Json{{"num", num}, {"den", den}, {"factored", factored}}},
              {"r_coeffs", to_json(report.r)},
              {"fourier", std::move(fourier)},
              {"multisets", report.multisets}};
}

Json to_json(const IdentityReport& report) {
  Json params = Json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  Json out{{"id", report.id},
           {"parameters", std::move(params)},
           {"lhs", report.lhs},
           {"rhs", report.rhs},
           {"equal", report.equal},
           {"expect_equal", report.expect_equal},
           {"ok", report.ok()}};
  if (!report.note.empty()) out["note"] = report.note;
  out["seconds"] = report.seconds;
  return out;
}

Json to_json(const RmResult& result) {
  return Json{{"beta", result.beta},
              {"M", result.M},
              {"m", result.m},
              {"coincident", result.coincident},
              {"vandermonde_power", to_json(result.vandermonde_power)},
              {"phase", to_json(result.phase)},
              {"pf", to_json(result.pf)},
              {"value", to_json(result.total)},
              {"convention", "haar"}};
}

std::string samples_csv(const std::vector<SampleRow>& rows, int precision) {
  std::string out = "theta,value\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.*g,%.*g\n", precision, r.theta, precision, r.value);
    out += buf;
  }
  return out;
}

}  // namespace hyperpf
