#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqent/bath.hpp"
#include "sqent/entanglement.hpp"
#include "sqent/error.hpp"
#include "sqent/geometry.hpp"
#include "sqent/liouvillian.hpp"
#include "sqent/reduced.hpp"
#include "sqent/sweep.hpp"

namespace py = pybind11;

namespace {

sqent::DensityMatrix as_state(const sqent::Matrix4c& rho) { return sqent::DensityMatrix(rho); }

py::dict row_to_dict(const sqent::ResultRow& row) {
  py::dict out;
  for (const auto& name : sqent::result_columns()) out[py::str(name)] = sqent::column_value(row, name);
  out["warnings"] = row.warnings;
  return out;
}

sqent::PointSpec make_point(const sqent::AtomPairConfig& cfg, const sqent::BathParams& bath, bool m_is_max,
                            const std::string& variant, const std::string& engine,
                            std::optional<double> gamma12, std::optional<double> omega12) {
  sqent::PointSpec spec;
  spec.cfg = cfg;
  spec.bath = bath;
  spec.m_is_max = m_is_max;
  spec.variant = sqent::parse_variant(variant);
  spec.engine = sqent::parse_engine(engine);
  spec.gamma12_override = gamma12;
  spec.omega12_override = omega12;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two collectively damped atoms in a broadband squeezed vacuum";

  auto base = py::register_exception<sqent::Error>(m, "SqentError", PyExc_RuntimeError);
  py::register_exception<sqent::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<sqent::UsageError>(m, "UsageError", base.ptr());
  py::register_exception<sqent::StructureError>(m, "StructureError", base.ptr());
  py::register_exception<sqent::AmbiguityError>(m, "AmbiguityError", base.ptr());
  py::register_exception<sqent::IntegrationError>(m, "IntegrationError", base.ptr());

  py::class_<sqent::AtomPairConfig>(m, "AtomPairConfig")
      .def(py::init([](double r12, double mu_dot_r, double delta, double gamma) {
             sqent::AtomPairConfig cfg{gamma, r12, mu_dot_r, delta};
             cfg.validate();
             return cfg;
           }),
           py::arg("r12_over_lambda") = 0.05, py::arg("mu_hat_dot_r_hat") = 0.0, py::arg("delta_over_gamma") = 0.0,
           py::arg("gamma") = 1.0)
      .def_readwrite("gamma", &sqent::AtomPairConfig::gamma)
      .def_readwrite("r12_over_lambda", &sqent::AtomPairConfig::r12_over_lambda)
      .def_readwrite("mu_hat_dot_r_hat", &sqent::AtomPairConfig::mu_hat_dot_r_hat)
      .def_readwrite("delta_over_gamma", &sqent::AtomPairConfig::delta_over_gamma);

  py::class_<sqent::BathParams>(m, "BathParams")
      .def(py::init([](double n, double m_abs, double phi, double carrier) {
             sqent::BathParams b{n, m_abs, phi, carrier};
             b.validate();
             return b;
           }),
           py::arg("n_mean") = 0.0, py::arg("m_abs") = 0.0, py::arg("phi_s") = 0.0,
           py::arg("carrier_detuning_over_gamma") = 0.0)
      .def_static("maximally_squeezed", &sqent::BathParams::maximally_squeezed, py::arg("n_mean"),
                  py::arg("phi_s") = 0.0)
      .def_readwrite("n_mean", &sqent::BathParams::n_mean)
      .def_readwrite("m_abs", &sqent::BathParams::m_abs)
      .def_readwrite("phi_s", &sqent::BathParams::phi_s)
      .def_readwrite("carrier_detuning_over_gamma", &sqent::BathParams::carrier_detuning_over_gamma);

  py::class_<sqent::CollectivePopulations>(m, "CollectivePopulations")
      .def_readonly("rho_ee", &sqent::CollectivePopulations::rho_ee)
      .def_readonly("rho_ss", &sqent::CollectivePopulations::rho_ss)
      .def_readonly("rho_aa", &sqent::CollectivePopulations::rho_aa)
      .def_readonly("rho_u", &sqent::CollectivePopulations::rho_u)
      .def_property_readonly("rho_gg", &sqent::CollectivePopulations::rho_gg)
      .def("to_density_matrix",
           [](const sqent::CollectivePopulations& p, double phi) { return p.to_density_matrix(phi).matrix(); },
           py::arg("phi_s") = 0.0);

  m.def("gamma12", &sqent::gamma12, py::arg("cfg"));
  m.def("omega12", &sqent::omega12, py::arg("cfg"));

  m.def(
      "build_liouvillian",
      [](const sqent::AtomPairConfig& cfg, const sqent::BathParams& bath) {
        return sqent::build_liouvillian(cfg, bath).matrix();
      },
      py::arg("cfg"), py::arg("bath"), "16x16 generator acting on column-stacked density matrices");
  m.def(
      "steady_state",
      [](const sqent::AtomPairConfig& cfg, const sqent::BathParams& bath) {
        return sqent::steady_state(sqent::build_liouvillian(cfg, bath)).matrix();
      },
      py::arg("cfg"), py::arg("bath"));
  m.def(
      "propagate",
      [](const sqent::AtomPairConfig& cfg, const sqent::BathParams& bath, const sqent::Matrix4c& rho0, double t) {
        return sqent::propagate(sqent::build_liouvillian(cfg, bath), as_state(rho0), t).matrix();
      },
      py::arg("cfg"), py::arg("bath"), py::arg("rho0"), py::arg("t"));

  m.def("steady_identical", &sqent::steady_identical, py::arg("gamma12"), py::arg("bath"));
  m.def("steady_nonidentical", py::overload_cast<double, const sqent::BathParams&>(&sqent::steady_nonidentical),
        py::arg("gamma12"), py::arg("bath"));

  m.def(
      "concurrence_general", [](const sqent::Matrix4c& rho) { return sqent::concurrence_general(as_state(rho)); },
      py::arg("rho"));
  m.def(
      "concurrence_xstate", [](const sqent::Matrix4c& rho) { return sqent::concurrence_xstate(as_state(rho)); },
      py::arg("rho"));
  m.def("c1_identical", &sqent::c1_identical, py::arg("gamma12"), py::arg("bath"));
  m.def("c1_nonidentical", &sqent::c1_nonidentical, py::arg("gamma12"), py::arg("bath"));
  m.def(
      "fidelities",
      [](const sqent::Matrix4c& rho, double phi) {
        const auto f = sqent::fidelities(as_state(rho), phi);
        return py::make_tuple(f.plus, f.minus);
      },
      py::arg("rho"), py::arg("phi_s") = 0.0);
  m.def(
      "purity", [](const sqent::Matrix4c& rho) { return sqent::purity(as_state(rho)); }, py::arg("rho"));
  m.def("tc_parameter", &sqent::tc_parameter, py::arg("bath"));
  m.def(
      "optimal_photon_number",
      [](const std::string& variant, double gamma12) {
        const auto model = sqent::parse_variant(variant) == sqent::Variant::kIdentical
                               ? sqent::ReducedModel::kIdentical
                               : sqent::ReducedModel::kNonidentical;
        return sqent::optimal_photon_number(model, gamma12);
      },
      py::arg("variant"), py::arg("gamma12"));

  m.def(
      "evaluate_point",
      [](const sqent::AtomPairConfig& cfg, const sqent::BathParams& bath, bool m_is_max, const std::string& variant,
         const std::string& engine, std::optional<double> gamma12, std::optional<double> omega12) {
        return row_to_dict(
            sqent::evaluate_point(make_point(cfg, bath, m_is_max, variant, engine, gamma12, omega12)));
      },
      py::arg("cfg"), py::arg("bath"), py::arg("m_is_max") = false, py::arg("variant") = "identical",
      py::arg("engine") = "analytic", py::arg("gamma12") = py::none(), py::arg("omega12") = py::none());

  m.def(
      "figure_table",
      [](int id, int jobs) {
        const sqent::Table t = sqent::figure_table(id, jobs);
        return py::make_tuple(t.header, t.rows);
      },
      py::arg("id"), py::arg("jobs") = 1, "Returns (header, rows) of a figure preset");

  m.def("result_columns", &sqent::result_columns);
}
