#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lipkin/meanfield.hpp"
#include "lipkin/measures.hpp"
#include "lipkin/model.hpp"
#include "lipkin/numerics.hpp"
#include "lipkin/rpa.hpp"
#include "lipkin/sweep.hpp"
#include "lipkin/verify.hpp"

namespace py = pybind11;
using namespace lipkin;

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact and approximate entanglement measures for the Lipkin model";

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](int omega, double eps, double vx, double chi) {
             ModelParams p{omega, eps, vx, chi};
             p.validate();
             return p;
           }),
           py::arg("omega"), py::arg("eps") = 1.0, py::arg("vx") = 0.0, py::arg("chi") = 0.0)
      .def_readonly("omega", &ModelParams::omega)
      .def_readonly("eps", &ModelParams::eps)
      .def_readonly("vx", &ModelParams::vx)
      .def_readonly("chi", &ModelParams::chi)
      .def("coupling_vx", &ModelParams::coupling_vx)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(omega=" + std::to_string(p.omega) + ", eps=" + std::to_string(p.eps) +
               ", vx=" + std::to_string(p.vx) + ", chi=" + std::to_string(p.chi) + ")";
      });

  py::class_<GroundState>(m, "GroundState")
      .def_readonly("coeffs", &GroundState::coeffs)
      .def_readonly("parity", &GroundState::parity)
      .def_readonly("energy", &GroundState::energy)
      .def_readonly("degenerate", &GroundState::degenerate);

  py::class_<SpinMoments>(m, "SpinMoments")
      .def_readonly("sz", &SpinMoments::sz)
      .def_readonly("sz2", &SpinMoments::sz2)
      .def_readonly("splus2", &SpinMoments::splus2)
      .def_readonly("kmean", &SpinMoments::kmean);

  py::enum_<ConcurrenceKind>(m, "ConcurrenceKind")
      .value("zero", ConcurrenceKind::zero)
      .value("parallel", ConcurrenceKind::parallel)
      .value("antiparallel", ConcurrenceKind::antiparallel);

  py::class_<Concurrence>(m, "Concurrence")
      .def_readonly("value", &Concurrence::value)
      .def_readonly("kind", &Concurrence::kind);

  py::class_<PairReducedState>(m, "PairReducedState")
      .def(py::init<>())
      .def_readwrite("a_pp", &PairReducedState::a_pp)
      .def_readwrite("a_pm", &PairReducedState::a_pm)
      .def_readwrite("a_mm", &PairReducedState::a_mm)
      .def_readwrite("b_par", &PairReducedState::b_par)
      .def_readwrite("b_anti", &PairReducedState::b_anti);

  py::class_<MeasureSet>(m, "MeasureSet")
      .def_readonly("one_body_E", &MeasureSet::one_body_E)
      .def_readonly("updown_E", &MeasureSet::updown_E)
      .def_readonly("concurrence", &MeasureSet::concurrence)
      .def_readonly("negativity", &MeasureSet::negativity)
      .def_readonly("mixed_one_body_E", &MeasureSet::mixed_one_body_E);

  m.def("ground_state", &ground_state, py::arg("params"));
  m.def("spin_moments", py::overload_cast<const std::vector<double>&, int>(&spin_moments),
        py::arg("coeffs"), py::arg("omega"));
  m.def("eigenstate_residual", &eigenstate_residual, py::arg("params"), py::arg("coeffs"));
  m.def("isotropic_gs_level",
        [](const ModelParams& p) { return isotropic_gs_level(p).level; }, py::arg("params"));

  m.def("binary_entropy", &binary_entropy, py::arg("f"));
  m.def("log_binomial", &log_binomial, py::arg("n"), py::arg("k"));
  m.def("one_body_entropy", &one_body_entropy, py::arg("kmean"), py::arg("omega"));
  m.def("updown_entropy", &updown_entropy, py::arg("coeffs"), py::arg("omega"));
  m.def("reduced_pair_state", &reduced_pair_state, py::arg("moments"), py::arg("omega"));
  m.def("concurrence_closed", &concurrence_closed, py::arg("pair_state"));
  m.def("concurrence_oracle", &concurrence_oracle, py::arg("pair_state"));
  m.def("mixed_one_body_entanglement", &mixed_one_body_entanglement, py::arg("concurrence"));
  m.def("negativity_updown", &negativity_updown, py::arg("pair_state"));
  m.def("k_state_measures", &k_state_measures, py::arg("omega"), py::arg("k"));
  m.def("measures_from_coeffs", &measures_from_coeffs, py::arg("coeffs"), py::arg("omega"));

  py::enum_<MFPhase>(m, "MFPhase").value("normal", MFPhase::normal).value("broken", MFPhase::broken);

  py::class_<MFSolution>(m, "MFSolution")
      .def_readonly("theta", &MFSolution::theta)
      .def_readonly("order_param", &MFSolution::order_param)
      .def_readonly("energy", &MFSolution::energy)
      .def_readonly("phase", &MFSolution::phase);

  py::class_<ProjectedMFState>(m, "ProjectedMFState")
      .def_readonly("theta", &ProjectedMFState::theta)
      .def_readonly("parity", &ProjectedMFState::parity)
      .def_readonly("coeffs", &ProjectedMFState::coeffs);

  m.def("mf_solve", &mf_solve, py::arg("params"));
  m.def("mf_coefficients", &mf_coefficients, py::arg("theta"), py::arg("omega"));
  m.def("mf_measures", &mf_measures, py::arg("solution"), py::arg("chi"), py::arg("omega"));
  m.def("pmf_state", &pmf_state, py::arg("theta"), py::arg("omega"), py::arg("parity"));
  m.def("pmf_measures", &pmf_measures, py::arg("theta"), py::arg("omega"), py::arg("parity"));
  m.def(
      "pmf_variational_theta",
      [](const ModelParams& p, int parity) {
        const VariationalTheta v = pmf_variational_theta(p, parity);
        return py::make_tuple(v.theta, v.energy);
      },
      py::arg("params"), py::arg("parity"));

  py::class_<RPASolution>(m, "RPASolution")
      .def_readonly("phase", &RPASolution::phase)
      .def_readonly("lambda_", &RPASolution::lambda)
      .def_readonly("alpha", &RPASolution::alpha)
      .def_readonly("beta", &RPASolution::beta)
      .def_readonly("gamma", &RPASolution::gamma)
      .def_readonly("theta", &RPASolution::theta);

  m.def("rpa_solve", &rpa_solve, py::arg("params"));
  m.def("rpa_concurrence_asymptotic", &rpa_concurrence_asymptotic, py::arg("params"));
  m.def("rpa_state", &rpa_state, py::arg("params"), py::arg("gamma"), py::arg("parity") = 0);
  m.def("variational_gamma", &variational_gamma, py::arg("params"), py::arg("parity") = 0);
  m.def("prpa_measures", &prpa_measures, py::arg("params"));

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("omega", &SweepConfig::omega)
      .def_readwrite("eps", &SweepConfig::eps)
      .def_readwrite("chi_list", &SweepConfig::chi_list)
      .def_readwrite("vx_min", &SweepConfig::vx_min)
      .def_readwrite("vx_max", &SweepConfig::vx_max)
      .def_readwrite("steps", &SweepConfig::steps)
      .def_readwrite("jobs", &SweepConfig::jobs)
      .def("set_methods", [](SweepConfig& cfg, const std::vector<std::string>& names) {
        cfg.methods.clear();
        for (const std::string& n : names) {
          const auto m2 = method_from_name(n);
          if (!m2) throw std::invalid_argument("unknown method: " + n);
          cfg.methods.push_back(*m2);
        }
      });

  m.def("figure_preset", &figure_preset, py::arg("name"));
  m.def(
      "sweep_csv", [](const SweepConfig& cfg) { return sweep_csv(cfg); }, py::arg("config"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "solve_point",
      [](int omega, double eps, double chi, double vx, const std::string& method) {
        const auto m2 = method_from_name(method);
        if (!m2) throw std::invalid_argument("unknown method: " + method);
        return format_row(evaluate_point(omega, eps, chi, vx, *m2));
      },
      py::arg("omega"), py::arg("eps"), py::arg("chi"), py::arg("vx"), py::arg("method"));
  m.def("result_header", &result_header);

  m.def(
      "verify",
      [](const std::string& level) {
        const auto results = run_verification(level == "quick" ? VerifyLevel::quick
                                                               : VerifyLevel::full);
        py::list out;
        for (const auto& r : results)
          out.append(py::make_tuple(r.id, r.pass, r.detail));
        return out;
      },
      py::arg("level") = "quick", py::call_guard<py::gil_scoped_release>());
}
