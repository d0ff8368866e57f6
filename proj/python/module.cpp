// Python bindings for the squeezed-bath dynamics engine: bath algebra,
// model builders, the integrators and the config/run front end.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqbath/runner.hpp"

namespace py = pybind11;
using namespace sqbath;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dynamics of open quantum systems coupled to non-Markovian squeezed baths";

  // ---------------------------------------------------------------- operators
  m.def("identity", &identity, py::arg("dim"));
  m.def("pauli_x", &pauli_x);
  m.def("pauli_y", &pauli_y);
  m.def("pauli_z", &pauli_z);
  m.def("matmul", &matmul);
  m.def("commutator", &commutator);
  m.def("anticommutator", &anticommutator);
  m.def("dagger", &dagger);
  m.def("kron", &kron);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<Amplitudes>(), py::arg("amplitudes"))
      .def_static("basis_state", &StateVector::basis_state, py::arg("dim"), py::arg("index"))
      .def_property_readonly("dim", &StateVector::dim)
      .def_property_readonly("amplitudes", &StateVector::amplitudes);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<Operator>(), py::arg("op"))
      .def_static("pure", &DensityMatrix::pure, py::arg("psi"))
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("op", &DensityMatrix::op);

  m.def("expectation",
        py::overload_cast<const DensityMatrix&, const StateVector&>(&expectation));

  // --------------------------------------------------------------------- bath
  py::class_<SqueezeFactors>(m, "SqueezeFactors")
      .def_readonly("u", &SqueezeFactors::u)
      .def_readonly("v", &SqueezeFactors::v)
      .def_readonly("w", &SqueezeFactors::w);
  m.def("squeeze_factors", &squeeze_factors, py::arg("r"), py::arg("theta"));

  py::class_<SqueezedBathSpec>(m, "SqueezedBathSpec")
      .def(py::init([](double Gamma, double gamma, double omega0, double r, double theta,
                       const Operator& lindblad) {
             SqueezedBathSpec spec{Gamma, gamma, omega0, r, theta, lindblad};
             spec.validate();
             return spec;
           }),
           py::arg("Gamma"), py::arg("gamma"), py::arg("omega0"), py::arg("r"), py::arg("theta"),
           py::arg("lindblad"))
      .def_readonly("Gamma", &SqueezedBathSpec::coupling_strength)
      .def_readonly("gamma", &SqueezedBathSpec::bandwidth)
      .def_readonly("omega0", &SqueezedBathSpec::center_frequency)
      .def_readonly("r", &SqueezedBathSpec::squeeze_strength)
      .def_readonly("theta", &SqueezedBathSpec::squeeze_direction)
      .def_readonly("lindblad", &SqueezedBathSpec::lindblad);

  m.def("alpha1_coeff", &alpha1_coeff);
  m.def("alpha2_coeff", &alpha2_coeff);
  m.def("alpha1_kernel", &alpha1_kernel, py::arg("spec"), py::arg("t"), py::arg("s"));
  m.def("alpha2_kernel", &alpha2_kernel, py::arg("spec"), py::arg("t"), py::arg("s"));
  m.def("variance_p_exact", &variance_p_exact, py::arg("r"), py::arg("theta"));
  m.def("variance_x_exact", &variance_x_exact, py::arg("r"), py::arg("theta"));
  m.def("variance_p_taylor", &variance_p_taylor, py::arg("r"), py::arg("theta"));
  m.def("variance_x_taylor", &variance_x_taylor, py::arg("r"), py::arg("theta"));
  m.def(
      "critical_r",
      [](double theta) {
        const CriticalR c = critical_r(theta);
        return py::make_tuple(c.value, c.peak_regime);
      },
      py::arg("theta"), "Returns (value, peak_regime)");

  // ------------------------------------------------------------------- models
  py::enum_<SiteCoupling>(m, "SiteCoupling")
      .value("sigma_x", SiteCoupling::SigmaX)
      .value("sigma_z", SiteCoupling::SigmaZ);

  py::class_<ModelInstance>(m, "ModelInstance")
      .def_readonly("dim", &ModelInstance::dim)
      .def_readonly("baths", &ModelInstance::baths)
      .def_readonly("initial_state", &ModelInstance::initial_state)
      .def_readonly("target_state", &ModelInstance::target_state)
      .def_readonly("total_time", &ModelInstance::total_time)
      .def("hamiltonian_at", [](const ModelInstance& model, double t) {
        return model.hamiltonian_at(t);
      });

  m.def("adiabatic_jz", &adiabatic_jz);
  m.def("adiabatic_jx", &adiabatic_jx);
  m.def("build_adiabatic_model", &build_adiabatic_model, py::arg("T"), py::arg("bath_template"));
  m.def("build_xy_chain_model", &build_xy_chain_model, py::arg("n_sites"), py::arg("J"),
        py::arg("T"), py::arg("bath_template"), py::arg("coupling"));
  m.def("embed_site_operator", &embed_site_operator, py::arg("op2"), py::arg("site"),
        py::arg("n_sites"));
  m.def("xy_chain_hamiltonian", &xy_chain_hamiltonian, py::arg("n_sites"), py::arg("J"));

  // ----------------------------------------------------------------- dynamics
  py::class_<IntegratorConfig>(m, "IntegratorConfig")
      .def(py::init([](double dt, int sample_every) {
             return IntegratorConfig{dt, sample_every};
           }),
           py::arg("dt") = 1e-3, py::arg("sample_every") = 10)
      .def_readonly("dt", &IntegratorConfig::dt)
      .def_readonly("sample_every", &IntegratorConfig::sample_every);

  py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
      .def_readonly("times", &TrajectoryRecord::times)
      .def_readonly("fidelity", &TrajectoryRecord::fidelity)
      .def_readonly("trace_err", &TrajectoryRecord::trace_err)
      .def_readonly("herm_err", &TrajectoryRecord::herm_err)
      .def_readonly("purity", &TrajectoryRecord::purity)
      .def_readonly("min_eigenvalue", &TrajectoryRecord::min_eigenvalue)
      .def_readonly("metadata", &TrajectoryRecord::metadata);

  m.def(
      "evolve",
      [](const ModelInstance& model, const IntegratorConfig& cfg) { return evolve(model, cfg); },
      py::arg("model"), py::arg("cfg") = IntegratorConfig{});
  m.def(
      "evolve_lindblad",
      [](const ModelInstance& model, const IntegratorConfig& cfg) {
        return evolve_lindblad(model, cfg);
      },
      py::arg("model"), py::arg("cfg") = IntegratorConfig{});
  m.def("fidelity_series", &fidelity_series);
  m.def("max_fidelity", &max_fidelity, "Returns (t_star, f_max)");

  // ------------------------------------------------------------- config + run
  py::class_<SweepAxis>(m, "SweepAxis")
      .def_readonly("parameter", &SweepAxis::parameter)
      .def_readonly("values", &SweepAxis::values);

  py::class_<RunConfig>(m, "RunConfig")
      .def_readonly("model", &RunConfig::model)
      .def_readonly("N", &RunConfig::n_sites)
      .def_readonly("T", &RunConfig::T)
      .def_readonly("J", &RunConfig::J)
      .def_readonly("lindblad_kind", &RunConfig::lindblad_kind)
      .def_readonly("Gamma", &RunConfig::Gamma)
      .def_readonly("gamma_inverse", &RunConfig::gamma_inverse)
      .def_readonly("omega0", &RunConfig::omega0)
      .def_readonly("r", &RunConfig::r)
      .def_readonly("theta", &RunConfig::theta)
      .def_readonly("dt", &RunConfig::dt)
      .def_readonly("sample_every", &RunConfig::sample_every)
      .def_readonly("snapshot_time", &RunConfig::snapshot_time)
      .def_readonly("sweep", &RunConfig::sweep)
      .def("__eq__", [](const RunConfig& a, const RunConfig& b) { return a == b; });

  m.def("parse_real", &parse_real);
  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("render_config", &render_config);
  m.def("build_model", &build_model);
  m.def("with_sweep_value", &with_sweep_value);

  py::class_<RunArtifacts>(m, "RunArtifacts")
      .def_readonly("trajectory_csv", &RunArtifacts::trajectory_csv)
      .def_readonly("sidecar", &RunArtifacts::sidecar)
      .def_readonly("record", &RunArtifacts::record);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("value", &SweepRow::value)
      .def_readonly("ok", &SweepRow::ok)
      .def_readonly("error", &SweepRow::error)
      .def_readonly("t_star", &SweepRow::t_star)
      .def_readonly("f_max", &SweepRow::f_max)
      .def_readonly("f_at", &SweepRow::f_at)
      .def_readonly("record", &SweepRow::record);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("parameter", &SweepResult::parameter)
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("sweep_csv", &SweepResult::sweep_csv)
      .def_readonly("point_csvs", &SweepResult::point_csvs)
      .def_readonly("sidecar", &SweepResult::sidecar);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("max_abs_df", &OracleReport::max_abs_df)
      .def_readonly("t_at_max", &OracleReport::t_at_max)
      .def_readonly("non_markovian", &OracleReport::non_markovian)
      .def_readonly("markovian", &OracleReport::markovian);

  m.def("run_single", &run_single, py::arg("cfg"), py::arg("out_dir"), py::arg("stem"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_sweep", &run_sweep, py::arg("cfg"), py::arg("out_dir"), py::arg("stem"),
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("compare_oracle", &compare_oracle, py::arg("cfg"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<Preset>(m, "Preset")
      .def_readonly("name", &Preset::name)
      .def_readonly("description", &Preset::description)
      .def_readonly("text", &Preset::text);
  m.def("builtin_presets", &builtin_presets);

#ifdef SQBATH_VERSION
  m.attr("__version__") = SQBATH_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
