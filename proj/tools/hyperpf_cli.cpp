// hyperpf command-line front end.
//
// Exit codes: 0 success, 2 validation error, 3 identity failure,
// 4 budget refusal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperpf/correlation.hpp"
#include "hyperpf/errors.hpp"
#include "hyperpf/evaluations.hpp"
#include "hyperpf/gram.hpp"
#include "hyperpf/oracle.hpp"
#include "hyperpf/report_json.hpp"

namespace {

using namespace hyperpf;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIdentity = 3;
constexpr int kExitBudget = 4;

struct RunConfig {
  int beta = 16;
  int M = 4;
  int m = 2;
  int L = 2;
  int N = 4;
  std::string identity = "all";
  std::string weight = "circular";
  long a = 1;
  long b = 1;
  std::string out;
  std::string format = "json";
  int samples = 181;
  int threads = 1;
  bool oracle = false;
  std::string density = "angle";
  std::vector<std::string> t;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ValidationError("cannot open " + cfg.out + " for writing");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw ValidationError("format '" + cfg.format + "' is not available for this subcommand");
}

// Points on the unit circle from Pythagorean parameters; defaults to t = 1..m.
std::vector<GaussianRational> points(const RunConfig& cfg, int m) {
  std::vector<GaussianRational> ys;
  if (cfg.t.empty()) {
    for (int k = 1; k <= m; ++k) ys.push_back(unit_circle_point(Rational(k)));
    return ys;
  }
  if (static_cast<int>(cfg.t.size()) != m) throw ValidationError("--t needs exactly m parameters");
  for (const auto& s : cfg.t) ys.push_back(unit_circle_point(parse_rational(s)));
  return ys;
}

MomentFunctional weight_of(const RunConfig& cfg) {
  if (cfg.weight == "circular") return MomentFunctional::circular();
  if (cfg.weight == "gaussian") return MomentFunctional::gaussian();
  if (cfg.weight == "jacobi") return MomentFunctional::jacobi(cfg.a, cfg.b);
  throw ValidationError("unknown weight '" + cfg.weight + "'");
}

int cmd_paircorr(const RunConfig& cfg) {
  check_format(cfg, {"json", "csv", "pretty"});
  const auto convention = cfg.density == "haar" ? DensityConvention::kHaar : DensityConvention::kAngle;
  const auto report = pair_correlation(cfg.beta, cfg.M, cfg.threads, convention);
  std::optional<bool> agreement;
  if (cfg.oracle) agreement = direct_R2_symbolic(cfg.beta, cfg.M) == report.r;
  if (cfg.format == "csv") {
    emit(cfg, samples_csv(sample_for_plot(report, cfg.samples)));
  } else if (cfg.format == "pretty") {
    std::ostringstream os;
    os << "R_2(theta) = " << to_string(report.falling_factorial) << "/("
       << (convention == DensityConvention::kAngle ? "2*pi*" : "") << to_string(report.central_multinomial)
       << ") * (2 sin theta)^" << report.beta << " * r(2 cos theta)\n";
    os << "r(y) = " << format_poly(report.r, "y") << "\n";
    os << "multisets: " << report.multisets << "\n";
    if (agreement) os << "oracle agreement: " << (*agreement ? "yes" : "NO") << "\n";
    emit(cfg, os.str());
  } else {
    Json j = to_json(report);
    if (agreement) j["oracle_agreement"] = *agreement;
    emit(cfg, dump(j));
  }
  return agreement.value_or(true) ? kExitOk : kExitIdentity;
}

int cmd_corr(const RunConfig& cfg) {
  check_format(cfg, {"json", "pretty"});
  const auto ys = points(cfg, cfg.m);
  const auto result = r_m_circular(cfg.beta, cfg.M, ys, cfg.threads);
  std::optional<bool> agreement;
  if (cfg.oracle) agreement = direct_Rm(cfg.beta, cfg.M, ys) == result.total;
  Json j = to_json(result);
  Json pts = Json::array();
  for (const auto& y : ys) pts.push_back(to_json(y));
  j["points"] = std::move(pts);
  if (agreement) j["oracle_agreement"] = *agreement;
  if (cfg.format == "pretty") {
    std::ostringstream os;
    os << "R_" << cfg.m << " = " << to_string(result.total) << "\n";
    if (agreement) os << "oracle agreement: " << (*agreement ? "yes" : "NO") << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(j));
  }
  return agreement.value_or(true) ? kExitOk : kExitIdentity;
}

int cmd_gram(const RunConfig& cfg, bool deflated) {
  check_format(cfg, {"json"});
  if (deflated) {
    if (cfg.weight != "circular") throw ValidationError("gamma_y is available for the circular weight");
    emit(cfg, dump(to_json(gamma_y_circular(cfg.L, cfg.M, points(cfg, cfg.m)))));
  } else if (cfg.weight == "circular") {
    emit(cfg, dump(to_json(circular_gram_vector(cfg.L, cfg.M))));
  } else {
    emit(cfg, dump(to_json(gram_vector(EnsembleSpec::with_monomials(cfg.L, cfg.M, weight_of(cfg))))));
  }
  return kExitOk;
}

std::vector<IdentityReport> select_identities(const RunConfig& cfg) {
  const std::string& id = cfg.identity;
  if (id == "all") return run_default_grid(cfg.threads);
  if (id == "conventions") return run_convention_checks(cfg.threads);
  if (id == "dyson") return {verify_dyson(cfg.L, cfg.M, WronskianExponent::kShifted, cfg.threads)};
  if (id == "gaussian") {
    return {verify_gaussian_monomial(cfg.L, cfg.M, GaussianConvention::kTrueMoment, WronskianExponent::kShifted,
                                     cfg.threads)};
  }
  if (id == "hermite") return {verify_hermite(cfg.L, cfg.M, cfg.threads)};
  if (id == "jacobi") {
    return {verify_jacobi(cfg.L, cfg.M, cfg.a, cfg.b, JacobiForm::kNormalized, JacobiFamily::kMonomial, cfg.threads)};
  }
  if (id == "r1") return {verify_R1(cfg.L, cfg.M, R1Form::kCorrected, cfg.threads)};
  if (id == "zero") return {verify_zero(cfg.N, cfg.L, cfg.threads)};
  if (id == "pfaffian") return {verify_pfaffian_examples()};
  throw ValidationError("unknown identity '" + id + "'");
}

int cmd_verify(const RunConfig& cfg) {
  check_format(cfg, {"json", "pretty"});
  const auto reports = select_identities(cfg);
  bool all_ok = true;
  for (const auto& r : reports) all_ok = all_ok && r.ok();
  if (cfg.format == "pretty") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.ok() ? "PASS " : "FAIL ") << r.id;
      for (const auto& [k, v] : r.parameters) os << " " << k << "=" << v;
      os << "\n";
    }
    emit(cfg, os.str());
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit(cfg, dump(arr));
  }
  return all_ok ? kExitOk : kExitIdentity;
}

int cmd_oracle(const RunConfig& cfg, bool pair_mode, bool points_mode) {
  check_format(cfg, {"json"});
  Json j{{"beta", cfg.beta}, {"M", cfg.M}};
  bool agree = true;
  if (points_mode) {
    const auto ys = points(cfg, cfg.m);
    const auto direct = direct_Rm(cfg.beta, cfg.M, ys);
    j["m"] = cfg.m;
    j["direct_Rm"] = to_json(direct);
    if (is_even_square(cfg.beta)) {
      const bool same = r_m_circular(cfg.beta, cfg.M, ys, cfg.threads).total == direct;
      j["hyperpfaffian_agreement"] = same;
      agree = same;
    }
  } else if (pair_mode) {
    const auto direct = direct_R2_symbolic(cfg.beta, cfg.M);
    j["m"] = 2;
    j["direct_r_coeffs"] = to_json(direct);
    if (is_even_square(cfg.beta)) {
      const bool same = pair_correlation(cfg.beta, cfg.M, cfg.threads).r == direct;
      j["hyperpfaffian_agreement"] = same;
      agree = same;
    }
  } else {
    const Rational z = ct_partition_circular(cfg.beta, cfg.M);
    const Rational rhs = dyson_rhs(cfg.beta, cfg.M);
    j["ct_partition"] = to_json(z);
    j["dyson_rhs"] = to_json(rhs);
    agree = z == rhs;
    if (is_even_square(cfg.beta)) {
      const int L = even_square_root(cfg.beta);
      const BigInt pf = hyperpfaffian(circular_gram_vector(L, cfg.M), cfg.M, cfg.threads);
      j["hyperpfaffian"] = to_json(pf);
      agree = agree && Rational(pf) == z;
    }
    j["agreement"] = agree;
  }
  emit(cfg, dump(j));
  return agree ? kExitOk : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperpfaffian computations for beta ensembles"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 256));
  };
  auto add_ensemble = [&](CLI::App* sub) {
    sub->add_option("--beta", cfg.beta, "beta = L^2 with L even");
    sub->add_option("--M", cfg.M, "Number of particles")->check(CLI::PositiveNumber);
  };

  auto* paircorr = app.add_subcommand("paircorr", "Pair correlation R_2 of the circular ensemble");
  add_ensemble(paircorr);
  add_common(paircorr);
  paircorr->add_option("--samples", cfg.samples, "Plot samples on [0, pi] for csv output")->check(CLI::Range(2, 1000000));
  paircorr->add_option("--density", cfg.density, "angle (with 1/(2 pi)) or haar")->check(CLI::IsMember({"angle", "haar"}));
  paircorr->add_flag("--oracle", cfg.oracle, "Compare with direct marginal integration");

  auto* corr = app.add_subcommand("corr", "R_m of the circular ensemble at exact points");
  add_ensemble(corr);
  add_common(corr);
  corr->add_option("--m", cfg.m, "Number of fixed points")->check(CLI::PositiveNumber);
  corr->add_option("--t", cfg.t, "Pythagorean parameters t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))")->delimiter(',');
  corr->add_flag("--oracle", cfg.oracle, "Compare with direct marginal integration");

  auto* gram = app.add_subcommand("gram", "Dump the Gram L-vector, or gamma_y with --m");
  add_common(gram);
  gram->add_option("--L", cfg.L, "L (even)");
  gram->add_option("--M", cfg.M, "Number of particles")->check(CLI::PositiveNumber);
  gram->add_option("--weight", cfg.weight, "circular, gaussian or jacobi")
      ->check(CLI::IsMember({"circular", "gaussian", "jacobi"}));
  gram->add_option("--a", cfg.a, "Jacobi a");
  gram->add_option("--b", cfg.b, "Jacobi b");
  auto* gram_m = gram->add_option("--m", cfg.m, "Deflate by m points on the circle")->check(CLI::PositiveNumber);
  gram->add_option("--t", cfg.t, "Pythagorean parameters of the points")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Check the evaluation identities");
  add_common(verify);
  verify->add_option("--identity", cfg.identity,
                     "all, dyson, gaussian, hermite, jacobi, r1, zero, pfaffian or conventions");
  verify->add_option("--L", cfg.L, "L (even)");
  verify->add_option("--M", cfg.M, "Number of particles")->check(CLI::PositiveNumber);
  verify->add_option("--N", cfg.N, "Dimension for the zero identity")->check(CLI::PositiveNumber);
  verify->add_option("--a", cfg.a, "Jacobi a");
  verify->add_option("--b", cfg.b, "Jacobi b");

  auto* oracle = app.add_subcommand("oracle", "Constant-term integration ground truth");
  add_ensemble(oracle);
  add_common(oracle);
  auto* oracle_m = oracle->add_option("--m", cfg.m, "Marginal order; 2 without --t gives r symbolic in c")
                       ->check(CLI::PositiveNumber);
  auto* oracle_t = oracle->add_option("--t", cfg.t, "Pythagorean parameters of the points")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*paircorr) return cmd_paircorr(cfg);
    if (*corr) return cmd_corr(cfg);
    if (*gram) return cmd_gram(cfg, gram_m->count() > 0);
    if (*verify) return cmd_verify(cfg);
    if (*oracle) {
      const bool pts = oracle_t->count() > 0 || (oracle_m->count() > 0 && cfg.m != 2);
      return cmd_oracle(cfg, oracle_m->count() > 0 && !pts, pts);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
