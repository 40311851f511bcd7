// Python bindings. Exact values cross the boundary as JSON text or decimal
// strings; the package wrapper turns them into int and Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperpf/correlation.hpp"
#include "hyperpf/evaluations.hpp"
#include "hyperpf/exterior.hpp"
#include "hyperpf/gram.hpp"
#include "hyperpf/oracle.hpp"
#include "hyperpf/report_json.hpp"

namespace py = pybind11;
using namespace hyperpf;

namespace {

DensityConvention density(const std::string& name) {
  if (name == "angle") return DensityConvention::kAngle;
  if (name == "haar") return DensityConvention::kHaar;
  throw ValidationError("convention must be 'angle' or 'haar'");
}

std::string identity_json(const IdentityReport& r) { return to_json(r).dump(); }

std::string grid_json(const std::vector<IdentityReport>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact hyperpfaffian evaluations for beta ensembles";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "pair_correlation",
      [](int beta, int M, int threads, const std::string& convention) {
        py::gil_scoped_release release;
        return to_json(pair_correlation(beta, M, threads, density(convention))).dump();
      },
      py::arg("beta"), py::arg("M"), py::arg("threads") = 1, py::arg("convention") = "angle");

  m.def(
      "pair_samples",
      [](int beta, int M, int points, const std::string& convention) {
        std::vector<std::pair<double, double>> out;
        for (const auto& r : sample_for_plot(pair_correlation(beta, M, 1, density(convention)), points))
          out.emplace_back(r.theta, r.value);
        return out;
      },
      py::arg("beta"), py::arg("M"), py::arg("points") = 181, py::arg("convention") = "angle");

  m.def(
      "r_m",
      [](int beta, int M, const std::vector<std::string>& params, int threads) {
        std::vector<GaussianRational> ys;
        for (const auto& t : params) ys.push_back(unit_circle_point(parse_rational(t)));
        return to_json(r_m_circular(beta, M, ys, threads)).dump();
      },
      py::arg("beta"), py::arg("M"), py::arg("params"), py::arg("threads") = 1);

  m.def(
      "gram_vector", [](int L, int M) { return to_json(circular_gram_vector(L, M)).dump(); }, py::arg("L"),
      py::arg("M"));
  m.def(
      "partition_function",
      [](int L, int M) { return to_string(hyperpfaffian(circular_gram_vector(L, M), M)); }, py::arg("L"),
      py::arg("M"));
  m.def(
      "dyson_rhs", [](int beta, int M) { return to_string(dyson_rhs(beta, M)); }, py::arg("beta"), py::arg("M"));
  m.def(
      "ct_partition",
      [](int beta, int M, bool signed_form) {
        return to_string(
            ct_partition_circular(beta, M, signed_form ? CtForm::kSignedVandermonde : CtForm::kModulus));
      },
      py::arg("beta"), py::arg("M"), py::arg("signed_form") = false);

  m.def(
      "hyperpfaffian_2form",
      [](const std::vector<std::vector<std::string>>& rows) {
        const std::size_t n = rows.size();
        Matrix<Rational> A(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          if (rows[i].size() != n) throw ValidationError("matrix must be square");
          for (std::size_t j = 0; j < n; ++j) A(i, j) = parse_rational(rows[i][j]);
        }
        if (n % 2 != 0) throw ValidationError("matrix size must be even");
        return to_string(hyperpfaffian(two_vector_from_matrix(A), static_cast<int>(n / 2)));
      },
      py::arg("rows"));

  m.def("verify_dyson", [](int L, int M) { return identity_json(verify_dyson(L, M)); }, py::arg("L"), py::arg("M"));
  m.def(
      "verify_jacobi", [](int L, int M, long a, long b) { return identity_json(verify_jacobi(L, M, a, b)); },
      py::arg("L"), py::arg("M"), py::arg("a"), py::arg("b"));
  m.def(
      "verify_gaussian", [](int L, int M) { return identity_json(verify_gaussian_monomial(L, M)); }, py::arg("L"),
      py::arg("M"));
  m.def("verify_hermite", [](int L, int M) { return identity_json(verify_hermite(L, M)); }, py::arg("L"), py::arg("M"));
  m.def("verify_r1", [](int L, int M) { return identity_json(verify_R1(L, M)); }, py::arg("L"), py::arg("M"));
  m.def("verify_zero", [](int N, int L) { return identity_json(verify_zero(N, L)); }, py::arg("N"), py::arg("L"));
  m.def(
      "default_grid",
      [](int threads) {
        py::gil_scoped_release release;
        return grid_json(run_default_grid(threads));
      },
      py::arg("threads") = 1);
}
