#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pjts/analysis.hpp"
#include "pjts/bernstein.hpp"
#include "pjts/kernels.hpp"
#include "pjts/minpoly.hpp"
#include "pjts/model.hpp"
#include "pjts/operators.hpp"
#include "pjts/spectral.hpp"
#include "pjts/verify.hpp"

namespace py = pybind11;
using namespace pjts;

namespace {

py::dict table_dict(const CharacteristicData& t) {
  py::dict d;
  d["r"] = t.r;
  d["a"] = t.a;
  d["a_plus"] = t.a_plus;
  d["a_minus"] = t.a_minus;
  d["b"] = t.b;
  d["c"] = t.c;
  d["genus"] = t.genus();
  return d;
}

}  // namespace

PYBIND11_MODULE(_pjts, m) {
  m.doc() = "numerical verification toolkit for Jordan triple kernels";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<DimensionError>(m, "DimensionError");
  py::register_exception<NumericalDegeneracy>(m, "NumericalDegeneracy");
  py::register_exception<ConsistencyError>(m, "ConsistencyError");

  py::class_<TripleSystem>(m, "Model")
      .def(py::init([](const std::string& s) { return build_model(s); }),
           py::arg("spec"))
      .def_property_readonly("dim", [](const TripleSystem& V) { return V.dim; })
      .def_property_readonly(
          "spec", [](const TripleSystem& V) { return V.spec.str(); })
      .def_property_readonly(
          "case_tag", [](const TripleSystem& V) { return case_name(V.case_tag); })
      .def_property_readonly(
          "table", [](const TripleSystem& V) { return table_dict(V.table); })
      .def_property_readonly(
          "frame", [](const TripleSystem& V) { return V.frame; })
      .def("triple", &TripleSystem::triple)
      .def("__repr__", [](const TripleSystem& V) {
        return "Model('" + V.spec.str() + "')";
      });

  m.def("l_op", &l_op);
  m.def("q_op", &q_op);
  m.def("bergman", &bergman);
  m.def("dual_bergman", &dual_bergman);
  m.def("trace_form", &trace_form);

  m.def("validate_axioms", [](const TripleSystem& V) {
    AxiomReport r = validate_axioms(V);
    py::dict d;
    d["outer_symmetry"] = r.sym_residual;
    d["jordan_identity"] = r.jordan_residual;
    d["gram_min_eig"] = r.gram_min_eig;
    if (r.jstruct_residual) d["complex_structure"] = *r.jstruct_residual;
    d["pass"] = r.pass();
    return d;
  });

  m.def("characteristic_numbers", [](const TripleSystem& V) {
    return table_dict(characteristic_numbers(V));
  });
  m.def("is_tripotent", &is_tripotent, py::arg("model"), py::arg("c"),
        py::arg("tol") = 1e-10);

  m.def("canonical_kernel", &canonical_kernel);
  m.def("fundamental_kernel", &fundamental_kernel);
  m.def("h_kernel", &h_kernel);
  m.def("compact_kernel_pair", &compact_kernel_pair);
  m.def("verify_power_identity", &verify_power_identity, py::arg("model"),
        py::arg("samples") = 100, py::arg("seed") = 42);

  m.def("minpoly", [](const TripleSystem& V, const Element& x, const Element& y) {
    MinPolyResult r = minpoly_eval(V, x, y);
    py::dict d;
    d["degree"] = r.rho;
    d["coeffs"] = r.m;
    d["residual"] = r.residual;
    return d;
  });
  m.def("minpoly_degree", &minpoly_degree);
  m.def("absolute_rank", &absolute_rank);

  m.def("threshold", [](const TripleSystem& V) {
    Threshold t = threshold(V);
    return py::make_tuple(t.lambda_min.value(), t.s_min.value());
  });
  m.def("c_lambda", [](const TripleSystem& V, double lam, int nodes,
                       const std::string& method, uint64_t seed) {
    QuadMethod q = method == "mc" ? QuadMethod::MonteCarlo
                                  : QuadMethod::GaussJacobi;
    return c_lambda_numeric(V, lam, nodes, q, seed);
  }, py::arg("model"), py::arg("lam"), py::arg("nodes") = 64,
     py::arg("method") = "gj", py::arg("seed") = 42);
  m.def("c_lambda_gamma", &c_lambda_gamma);
  m.def("selberg_convergent", &selberg_convergent);

  m.def("pole_lattice", [](const TripleSystem& V, int depth) {
    PoleLedger L = pole_ledger(V);
    auto poles = L.poles_down_to(L.s_min - Rational(depth, 1));
    std::vector<std::pair<std::string, double>> out;
    for (const auto& p : poles) out.emplace_back(p.str(), p.value());
    return out;
  }, py::arg("model"), py::arg("depth") = 10);

  m.def("bs_residual", [](const TripleSystem& V, double s, int samples,
                          uint64_t seed) {
    BernsteinData D = bernstein_data(V);
    return bs_verify_random(D, s, samples, seed);
  }, py::arg("model"), py::arg("s"), py::arg("samples") = 10,
     py::arg("seed") = 42);

  m.def("verify_descent", &verify_descent, py::arg("model"), py::arg("s"),
        py::arg("x") = 0.7, py::arg("nodes") = 80);

  m.def("run_suite", [](const TripleSystem& V, const std::string& suite,
                        uint64_t seed, double tol, int samples) {
    SuiteOptions opt;
    opt.seed = seed;
    opt.tol = tol;
    opt.samples = samples;
    SuiteReport rep = run_suite(V, suite, opt);
    py::list records;
    for (const auto& c : rep.checks) {
      py::dict d;
      d["check"] = c.check;
      d["equation_tag"] = c.identity;
      d["residual"] = c.residual;
      d["tolerance"] = c.tolerance;
      d["pass"] = c.pass;
      records.append(d);
    }
    py::dict out;
    out["model"] = rep.model;
    out["suite"] = rep.suite;
    out["seed"] = rep.seed;
    out["wall_ms"] = rep.wall_ms;
    out["pass"] = rep.pass();
    out["records"] = records;
    return out;
  }, py::arg("model"), py::arg("suite") = "all", py::arg("seed") = 42,
     py::arg("tol") = -1.0, py::arg("samples") = -1);
}
