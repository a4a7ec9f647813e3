#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eitmech/analytics.hpp"
#include "eitmech/errors.hpp"
#include "eitmech/linsys.hpp"
#include "eitmech/metrics.hpp"
#include "eitmech/model.hpp"
#include "eitmech/presets.hpp"
#include "eitmech/response.hpp"
#include "eitmech/solver.hpp"
#include "eitmech/version.hpp"

namespace py = pybind11;
using namespace eitmech;

namespace {

py::dict rates_dict(const DerivedRates& r) {
    py::dict d;
    d["C"] = r.C;
    d["Gamma_O"] = r.Gamma_O;
    d["Gamma_E"] = r.Gamma_E;
    d["gamma_O"] = r.gamma_O;
    d["gamma_E"] = r.gamma_E;
    d["kappa_eit"] = r.kappa_eit;
    d["g_eff"] = r.g_eff;
    d["g_far"] = r.g_far;
    return d;
}

std::vector<std::string> warning_names(const std::vector<RegimeWarning>& warnings) {
    std::vector<std::string> out;
    for (const auto& w : warnings) out.push_back(w.name);
    return out;
}

ModelTier tier_of(const std::string& name) { return parse_model_tier(name); }

}  // namespace

PYBIND11_MODULE(eitmech, m) {
    m.doc() = "Linearized Gaussian dynamics of an atomic ensemble, a cavity and a mechanical mirror";
    m.attr("__version__") = std::string(version());

    static py::exception<Error> error_type(m, "EitmechError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string text = std::string(to_string(e.kind())) + ": " + e.what();
            PyErr_SetString(error_type.ptr(), text.c_str());
        }
    });

    m.def("angular", &angular, "Hz to rad/s");
    m.def("thermal_occupancy", &thermal_occupancy, py::arg("temperature"), py::arg("omega"));

    py::class_<SystemParams>(m, "SystemParams", "All rates and detunings in rad/s")
        .def(py::init<>())
        .def_readwrite("omega_m", &SystemParams::omega_m)
        .def_readwrite("gamma_m", &SystemParams::gamma_m)
        .def_readwrite("n_i", &SystemParams::n_i)
        .def_readwrite("kappa", &SystemParams::kappa)
        .def_readwrite("delta_c", &SystemParams::delta_c)
        .def_readwrite("G", &SystemParams::G)
        .def_readwrite("G0", &SystemParams::G0)
        .def_readwrite("g", &SystemParams::g)
        .def_readwrite("N", &SystemParams::N)
        .def_readwrite("gamma", &SystemParams::gamma)
        .def_readwrite("gamma_c", &SystemParams::gamma_c)
        .def_readwrite("Omega", &SystemParams::Omega)
        .def_readwrite("delta", &SystemParams::delta)
        .def_readwrite("Delta", &SystemParams::Delta)
        .def("collective_coupling", &SystemParams::collective_coupling)
        .def("validate", &SystemParams::validate)
        .def("copy", [](const SystemParams& p) { return p; });

    py::module_ presets = m.def_submodule("presets", "Reference operating points");
    presets.def("cooling", &presets::cooling);
    presets.def("mapping", &presets::mapping);
    presets.def("entanglement", &presets::entanglement);
    presets.attr("cooling_amplitude") = presets::cooling_amplitude;
    presets.attr("mapping_amplitude") = presets::mapping_amplitude;

    m.def("derived_rates", [](const SystemParams& p) { return rates_dict(derived_rates(p)); });
    m.def("regime_warnings",
          [](const SystemParams& p, double amplitude) { return warning_names(validate_regime(p, amplitude)); },
          py::arg("params"), py::arg("amplitude") = 0.0);

    m.def("chi_eit", &chi_eit, py::arg("omega"), py::arg("params"));
    m.def("cavity_response", &cavity_response, py::arg("omega"), py::arg("params"));
    m.def("sample_response",
          [](const SystemParams& p, const std::vector<double>& f) { return sample_response(p, f).values; },
          py::arg("params"), py::arg("frequencies"));
    m.def("extract_halfwidth",
          [](const std::vector<double>& f, const std::vector<complex>& v) {
              return extract_halfwidth(Spectrum{f, v});
          },
          py::arg("frequencies"), py::arg("values"));
    m.def("default_spectrum_grid", &default_spectrum_grid);

    py::class_<LinearModel>(m, "LinearModel")
        .def_readonly("labels", &LinearModel::labels)
        .def_readonly("A", &LinearModel::A)
        .def_readonly("D", &LinearModel::D);
    m.def("build_model", [](const std::string& tier, const SystemParams& p) { return build_model(tier_of(tier), p); },
          py::arg("tier"), py::arg("params"), "tier: full, rwa-anti-stokes, rwa-stokes or bare");
    m.def("stability", [](const LinearModel& model) {
        const Stability s = stability(model);
        return py::make_tuple(s.spectral_abscissa, s.stable);
    });
    m.def("instability_threshold",
          [](const SystemParams& p, const std::string& tier, double lo, double hi, double rel_tol) {
              const ModelTier t = tier_of(tier);
              return instability_threshold(p, [t](const SystemParams& q) { return build_model(t, q); }, lo, hi,
                                           rel_tol);
          },
          py::arg("params"), py::arg("tier"), py::arg("G_lo"), py::arg("G_hi"), py::arg("rel_tol") = 1e-4);

    py::class_<GaussianState>(m, "GaussianState")
        .def(py::init([](std::vector<std::string> labels, Eigen::VectorXd mean, Eigen::MatrixXd covariance) {
                 return GaussianState{std::move(labels), std::move(mean), std::move(covariance)};
             }),
             py::arg("labels"), py::arg("mean"), py::arg("covariance"))
        .def_readwrite("labels", &GaussianState::labels)
        .def_readwrite("mean", &GaussianState::mean)
        .def_readwrite("covariance", &GaussianState::covariance)
        .def("mode_covariance", &GaussianState::mode_covariance)
        .def("mode_mean", &GaussianState::mode_mean)
        .def("is_physical", [](const GaussianState& s) { return is_physical(s); });

    m.def("steady_state", &steady_covariance, py::arg("model"));
    m.def("lyapunov_residual", &lyapunov_residual, py::arg("model"), py::arg("covariance"));
    m.def("uncertainty_margin", &uncertainty_margin);
    m.def("product_state",
          [](const std::vector<std::string>& labels, const std::vector<py::dict>& specs) {
              std::vector<ModeSpec> out;
              for (const py::dict& d : specs) {
                  const std::string kind = d.contains("kind") ? d["kind"].cast<std::string>() : "vacuum";
                  if (kind == "vacuum") out.push_back(ModeSpec::vacuum());
                  else if (kind == "thermal") out.push_back(ModeSpec::thermal(d["n"].cast<double>()));
                  else if (kind == "squeezed")
                      out.push_back(ModeSpec::squeezed(d["r"].cast<double>(),
                                                       d.contains("theta") ? d["theta"].cast<double>() : 0.0));
                  else fail(ErrorKind::InvalidParameter, "unknown mode kind '" + kind + "'");
              }
              return prepare_product_state(labels, out);
          },
          py::arg("labels"), py::arg("specs"),
          "specs: dicts like {'kind': 'thermal', 'n': 2} or {'kind': 'squeezed', 'r': 1, 'theta': 0}");
    m.def("propagate",
          [](const LinearModel& model, const GaussianState& initial, double t_final, std::optional<double> dt) {
              Trajectory t = propagate(model, initial, t_final, dt);
              return py::make_tuple(t.times, t.states);
          },
          py::arg("model"), py::arg("initial"), py::arg("t_final"), py::arg("dt") = py::none());

    m.def("occupancy", &occupancy, py::arg("state"), py::arg("mode"));
    m.def("log_negativity", &log_negativity, py::arg("state"), py::arg("first"), py::arg("second"));
    m.def("gaussian_fidelity",
          py::overload_cast<const Eigen::Matrix2d&, const Eigen::Vector2d&, const Eigen::Matrix2d&,
                            const Eigen::Vector2d&>(&gaussian_fidelity),
          py::arg("V1"), py::arg("mu1"), py::arg("V2"), py::arg("mu2"));

    m.def("predict_cooling",
          [](const SystemParams& p, double amplitude) {
              const CoolingPrediction c = predict_cooling(p, amplitude);
              py::dict d;
              d["n_f"] = c.n_f;
              d["cooling_rate"] = c.cooling_rate;
              d["heating_rate"] = c.heating_rate;
              d["warnings"] = warning_names(c.warnings);
              return d;
          },
          py::arg("params"), py::arg("amplitude") = 0.0);
    m.def("predict_entanglement_crossover", &predict_entanglement_crossover);
}
