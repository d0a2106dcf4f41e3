#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "deszeta/coeff_table.hpp"
#include "deszeta/desing_values.hpp"
#include "deszeta/numeric/desing_numeric.hpp"
#include "deszeta/numeric/euler_zagier.hpp"
#include "deszeta/numeric/hurwitz.hpp"
#include "deszeta/relations.hpp"

namespace py = pybind11;
using namespace deszeta;

namespace {

std::string rat_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::vector<Cplx> to_cplx(const std::vector<std::complex<double>>& s) {
  std::vector<Cplx> out;
  out.reserve(s.size());
  for (const auto& z : s) out.emplace_back(z.real(), z.imag());
  return out;
}

EvalOptions make_opts(unsigned precision, int cutoff) {
  EvalOptions opts;
  opts.precision_bits = precision;
  opts.series_cutoff = cutoff;
  return opts;
}

py::tuple pack(const EvalResult& r) {
  return py::make_tuple(
      std::complex<double>(static_cast<double>(r.value.re), static_cast<double>(r.value.im)),
      static_cast<double>(r.err_estimate));
}

}  // namespace

PYBIND11_MODULE(_deszeta, m) {
  m.doc() = "desingularized multiple zeta-functions";

  m.def("value", [](const std::vector<unsigned>& k) { return rat_str(zeta_des_value(k)); },
        py::arg("k"), "Exact value at non-positive integers -k, as a fraction string.");

  m.def("value_gf",
        [](const std::vector<unsigned>& k) { return rat_str(zeta_des_value_gf(k)); },
        py::arg("k"), "Same value through the generating-function route.");

  m.def("coeff_table",
        [](int r) {
          py::list out;
          for (const auto& e : expand_G(r).entries)
            out.append(py::make_tuple(e.l, e.m, e.a.str()));
          return out;
        },
        py::arg("r"), "Integer coefficient table as (l, m, a) tuples.");

  m.def("evaluate",
        [](const std::vector<std::complex<double>>& s, unsigned precision, int cutoff) {
          return pack(zeta_des_numeric(to_cplx(s), make_opts(precision, cutoff)));
        },
        py::arg("s"), py::arg("precision") = 128, py::arg("cutoff") = 400,
        "Numeric value at a complex point; returns (value, err_estimate).");

  m.def("evaluate_mixed",
        [](const std::vector<std::complex<double>>& head, unsigned k, unsigned precision,
           int cutoff) {
          return pack(zeta_des_mixed(to_cplx(head), k, make_opts(precision, cutoff)));
        },
        py::arg("head"), py::arg("k"), py::arg("precision") = 128, py::arg("cutoff") = 400,
        "Value with a trailing non-positive integer -k.");

  m.def("euler_zagier",
        [](const std::vector<std::complex<double>>& s, const std::vector<double>& gamma,
           unsigned precision, int cutoff) {
          Weights w;
          for (double g : gamma) w.gamma.emplace_back(g);
          if (w.gamma.empty()) w.gamma.assign(s.size(), Real(1));
          return pack(euler_zagier(to_cplx(s), w, make_opts(precision, cutoff)));
        },
        py::arg("s"), py::arg("gamma") = std::vector<double>{}, py::arg("precision") = 128,
        py::arg("cutoff") = 400, "Generalized Euler-Zagier sum.");

  m.def("hurwitz_zeta",
        [](std::complex<double> s, double a, unsigned precision) {
          return pack(hurwitz_zeta(Cplx{s.real(), s.imag()}, Real(a),
                                   make_opts(precision, 400)));
        },
        py::arg("s"), py::arg("a") = 1.0, py::arg("precision") = 128);

  m.def("verify",
        [](const std::string& suite, unsigned precision, unsigned long long seed,
           double tolerance_scale) {
          SuiteConfig cfg;
          cfg.seed = seed;
          cfg.tolerance_scale = tolerance_scale;
          const auto reports = run_suite(suite, make_opts(precision, 400), cfg);
          const unsigned digits = digits_for_bits(precision);
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& rep : reports) arr.push_back(report_to_json(rep, digits));
          return arr.dump(2);
        },
        py::arg("suite"), py::arg("precision") = 128, py::arg("seed") = 42,
        py::arg("tolerance_scale") = 1.0,
        "Run a verification suite; returns the report list as a JSON string.");

  py::register_exception<Error>(m, "DeszetaError");
}
