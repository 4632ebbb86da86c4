#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slaumzi/eit.hpp"
#include "slaumzi/error.hpp"
#include "slaumzi/fit.hpp"
#include "slaumzi/laser.hpp"
#include "slaumzi/noise.hpp"
#include "slaumzi/optics.hpp"
#include "slaumzi/sensitivity.hpp"
#include "slaumzi/tables.hpp"

namespace py = pybind11;
using namespace slaumzi;

namespace {

py::dict table_dict(const tables::Table& t) {
  py::dict d;
  d["name"] = t.name;
  d["columns"] = t.columns;
  d["row_labels"] = t.row_labels;
  d["values"] = t.values;
  d["reference"] = t.reference;
  d["notes"] = t.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_slaumzi, m) {
  m.doc() = "Slow-light unbalanced interferometer sensitivity models";

  static py::exception<NumericalError> numerical(m, "NumericalError", PyExc_ArithmeticError);
  static py::exception<ConfigError> config(m, "ConfigError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NumericalError& e) {
      py::set_error(numerical, e.what());
    } catch (const ConfigError& e) {
      py::set_error(config, e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // optics
  py::class_<optics::TimeConstants>(m, "TimeConstants")
      .def_readonly("tau0", &optics::TimeConstants::tau0)
      .def_readonly("tau_d", &optics::TimeConstants::tau_d)
      .def_readonly("tau_vac", &optics::TimeConstants::tau_vac)
      .def_readonly("tau_nd", &optics::TimeConstants::tau_nd)
      .def_readonly("tau_sl", &optics::TimeConstants::tau_sl);
  m.def(
      "time_constants",
      [](double tau0, double tau_d, double group_index, double phase_index) {
        optics::DispersiveMedium med;
        med.group_index = group_index;
        med.phase_index = phase_index;
        return optics::time_constants(optics::InterferometerGeometry::from_delays(tau0, tau_d), med);
      },
      py::arg("tau0"), py::arg("tau_d"), py::arg("group_index") = 1.0, py::arg("phase_index") = 1.0);
  m.def(
      "group_index_from_magnification",
      [](double tau0, double tau_d, double mag) {
        return optics::group_index_from_magnification(optics::InterferometerGeometry::from_delays(tau0, tau_d),
                                                      mag);
      },
      py::arg("tau0"), py::arg("tau_d"), py::arg("magnification"));
  m.def("signal_ideal", &optics::signal_ideal, py::arg("detuning"), py::arg("tau_eff"), py::arg("peak"),
        py::arg("phase_offset") = 0.0);
  m.def("signal_with_linewidth", &optics::signal_with_linewidth, py::arg("detuning"), py::arg("tau_scale"),
        py::arg("tau_contrast"), py::arg("tau_coherence"), py::arg("peak"), py::arg("phase_offset") = 0.0);

  // laser
  py::class_<laser::LaserSpec>(m, "LaserSpec")
      .def(py::init([](double wavelength, double power, double length, double reflectivity, double henry) {
             laser::LaserSpec s;
             s.wavelength = wavelength;
             s.output_power = power;
             s.cavity_length = length;
             s.output_coupler_reflectivity = reflectivity;
             s.henry_factor = henry;
             s.validate();
             return s;
           }),
           py::arg("wavelength"), py::arg("output_power"), py::arg("cavity_length"),
           py::arg("reflectivity"), py::arg("henry_factor") = 1.0)
      .def_property_readonly("photon_flux", &laser::LaserSpec::photon_flux)
      .def_property_readonly("photon_energy", &laser::LaserSpec::photon_energy);
  py::class_<laser::CavityFigures>(m, "CavityFigures")
      .def_readonly("decay_rate", &laser::CavityFigures::decay_rate)
      .def_readonly("decay_time", &laser::CavityFigures::decay_time)
      .def_readonly("round_trip_time", &laser::CavityFigures::round_trip_time)
      .def_readonly("finesse", &laser::CavityFigures::finesse);
  m.def(
      "cavity_decay",
      [](const laser::LaserSpec& s, bool literal) {
        return laser::cavity_decay(s, literal ? laser::DecayConvention::kLiteral
                                              : laser::DecayConvention::kTableConsistent);
      },
      py::arg("spec"), py::arg("literal") = false);
  m.def(
      "schawlow_townes",
      [](const laser::LaserSpec& s, const laser::CavityFigures& c) {
        const auto r = laser::schawlow_townes(s, c);
        return py::make_tuple(r.linewidth, r.coherence_time);
      },
      py::arg("spec"), py::arg("cavity"), "Returns (linewidth rad/s, coherence time s).");
  m.def(
      "phase_jump_monte_carlo",
      [](double tau_gap, double tau_coh, std::uint64_t n, std::uint64_t seed) {
        const auto r = laser::phase_jump_monte_carlo(tau_gap, tau_coh, n, seed);
        return py::make_tuple(r.mean_cos, r.stderr_cos);
      },
      py::arg("tau_gap"), py::arg("tau_coherence"), py::arg("n_samples"), py::arg("seed"),
      "Returns (mean cos, standard error).");
  m.def("mean_cos_closed_form", &laser::mean_cos_closed_form);
  m.def(
      "langevin_beat_monte_carlo",
      [](double d2, double tau_m, std::uint64_t n, std::uint64_t seed, std::uint64_t steps) {
        const auto r = laser::langevin_beat_monte_carlo(d2, tau_m, n, seed, steps);
        return py::make_tuple(r.delta_mu, r.standard_error, r.analytic);
      },
      py::arg("diffusion_2d"), py::arg("tau_m"), py::arg("n_trajectories"), py::arg("seed"),
      py::arg("steps") = laser::kMinLangevinSteps, "Returns (delta_mu, standard error, analytic).");

  // sensitivity
  m.def("mmfs_slaumzi", &sensitivity::mmfs_slaumzi, py::arg("tau_sl"), py::arg("transmission"),
        py::arg("efficiency"), py::arg("photon_flux"), py::arg("tau_m"));
  m.def("mmfs_standard_linewidth", &sensitivity::mmfs_standard_linewidth, py::arg("linewidth"),
        py::arg("bandwidth"), py::arg("efficiency"));
  m.def("sef", &sensitivity::sef, py::arg("tau_sl"), py::arg("transmission"), py::arg("tau_coherence"),
        py::arg("photon_flux"));
  m.def("minimize_umzi_cost", &sensitivity::minimize_umzi_cost, py::arg("lo") = 1e-3, py::arg("hi") = 10.0,
        py::arg("tol") = 1e-9);
  m.def("product_check", [](double dw, double tm) {
    const auto r = sensitivity::product_check(dw, tm);
    return py::make_tuple(r.product, r.satisfies_bound);
  });

  // tables
  m.def("quantum_limit_mmfs_table", [] { return table_dict(tables::quantum_limit_mmfs_table()); });
  m.def("quantum_limit_time_table", [] { return table_dict(tables::quantum_limit_time_table()); });
  m.def("eit_summary_table", [] { return table_dict(tables::eit_summary_table()); });
  m.def("worked_numbers", [] {
    py::list out;
    for (const auto& w : tables::worked_numbers()) {
      out.append(py::make_tuple(w.name, w.value, w.reference, w.tolerance, w.pass()));
    }
    return out;
  });

  // eit
  py::class_<eit::FourLevelScheme>(m, "FourLevelScheme")
      .def(py::init<>())
      .def_static("reference", &eit::FourLevelScheme::reference)
      .def_readwrite("pump_rabi_13", &eit::FourLevelScheme::pump_rabi_13)
      .def_readwrite("pump_rabi_14", &eit::FourLevelScheme::pump_rabi_14)
      .def_readwrite("probe_rabi_23", &eit::FourLevelScheme::probe_rabi_23)
      .def_readwrite("probe_rabi_24", &eit::FourLevelScheme::probe_rabi_24)
      .def_readwrite("decay_31", &eit::FourLevelScheme::decay_31)
      .def_readwrite("decay_32", &eit::FourLevelScheme::decay_32)
      .def_readwrite("decay_41", &eit::FourLevelScheme::decay_41)
      .def_readwrite("decay_42", &eit::FourLevelScheme::decay_42)
      .def_readwrite("ground_exchange", &eit::FourLevelScheme::ground_exchange)
      .def_readwrite("pump_detuning", &eit::FourLevelScheme::pump_detuning)
      .def_readwrite("probe_detuning", &eit::FourLevelScheme::probe_detuning)
      .def_readwrite("excited_splitting", &eit::FourLevelScheme::excited_splitting);
  py::class_<eit::CellConfig>(m, "CellConfig")
      .def_static("reference", &eit::CellConfig::reference)
      .def_readwrite("temperature", &eit::CellConfig::temperature)
      .def_readwrite("length", &eit::CellConfig::length)
      .def_readwrite("slice_count", &eit::CellConfig::slice_count)
      .def_readwrite("number_density", &eit::CellConfig::number_density)
      .def_readwrite("velocity_points", &eit::CellConfig::velocity_points)
      .def_readwrite("velocity_span", &eit::CellConfig::velocity_span);
  m.def(
      "steady_state", [](const eit::FourLevelScheme& s, double v) { return Eigen::Matrix4cd(eit::steady_state(s, v)); },
      py::arg("scheme"), py::arg("velocity_shift") = 0.0);
  m.def(
      "propagate_point",
      [](const eit::FourLevelScheme& s, const eit::CellConfig& c, double offset) {
        const auto r = eit::propagate_point(s, c, offset);
        py::dict d;
        d["probe_transmission"] = r.probe_transmission;
        d["pump_transmission"] = r.pump_transmission;
        d["phase_index"] = r.phase_index;
        d["opaque"] = r.opaque;
        d["slice_probe_intensity"] = r.slice_probe_intensity;
        d["invariants_ok"] = r.invariants.ok();
        return d;
      },
      py::arg("scheme"), py::arg("cell"), py::arg("probe_offset") = 0.0);
  m.def("group_index_at_center", &eit::group_index_at_center, py::arg("scheme"), py::arg("cell"),
        py::arg("h") = eit::kGroupIndexStep);
  m.def("calibrate_density", &eit::calibrate_density, py::arg("scheme"), py::arg("cell"), py::arg("target"),
        py::arg("lo") = 1e10, py::arg("hi") = 1e22);

  // noise
  py::class_<noise::NoiseChainConfig>(m, "NoiseChainConfig")
      .def(py::init<>())
      .def_static("c0_reference", &noise::NoiseChainConfig::c0_reference)
      .def_readwrite("rms_voltage", &noise::NoiseChainConfig::rms_voltage)
      .def_readwrite("term_count", &noise::NoiseChainConfig::term_count)
      .def_readwrite("noise_bandwidth", &noise::NoiseChainConfig::noise_bandwidth)
      .def_readwrite("amplifier_gain", &noise::NoiseChainConfig::amplifier_gain)
      .def_readwrite("mixer_frequency", &noise::NoiseChainConfig::mixer_frequency)
      .def_readwrite("mixer_scale", &noise::NoiseChainConfig::mixer_scale)
      .def_readwrite("lpf_bandwidth", &noise::NoiseChainConfig::lpf_bandwidth)
      .def_readwrite("seed", &noise::NoiseChainConfig::seed);
  m.def("chain_gain_closed_form", &noise::chain_gain_closed_form);
  m.def(
      "c0_monte_carlo",
      [](const noise::NoiseChainConfig& c, std::size_t reps, double duration, double fs) {
        const auto r = noise::c0_monte_carlo(c, reps, duration, fs);
        return py::make_tuple(r.c0, r.standard_error);
      },
      py::arg("config"), py::arg("repetitions"), py::arg("duration") = 7e-3, py::arg("sample_rate") = 1e6,
      "Returns (C0, standard error).");
  m.def(
      "balanced_mmps",
      [](double s0, double phase, double alpha, double p, double extra, double g) {
        noise::BalancedPair pair{s0, phase, alpha, p, extra};
        return noise::balanced_subtract(pair, g).mmps;
      },
      py::arg("peak_signal"), py::arg("phase"), py::arg("alpha") = 0.0, py::arg("residual_fraction") = 0.0,
      py::arg("extra_noise") = 0.0, py::arg("mismatch_gain") = 1.0);

  // fit
  m.def(
      "ksum_fit",
      [](const std::vector<double>& swing, const std::vector<double>& v) {
        if (swing.size() != v.size()) throw InvalidArgument("swing and voltage arrays differ in length");
        fit::LiaSweep s;
        for (std::size_t i = 0; i < v.size(); ++i) s.samples.push_back({swing[i], v[i]});
        const auto r = fit::ksum_fit(s);
        py::dict d;
        d["slope"] = r.slope;
        d["offset"] = r.offset;
        d["mmfs"] = r.mmfs;
        d["non_physical"] = r.non_physical;
        d["warnings"] = r.warnings;
        return d;
      },
      py::arg("swing_hz"), py::arg("v_lia"));
  m.def(
      "noise_law_fit",
      [](const std::vector<double>& v0, const std::vector<double>& sigma, const std::string& model) {
        if (v0.size() != sigma.size()) throw InvalidArgument("V0 and sigma arrays differ in length");
        std::vector<fit::NoisePoint> pts;
        for (std::size_t i = 0; i < v0.size(); ++i) pts.push_back({v0[i], sigma[i]});
        fit::NoiseFit f;
        if (model == "sqrt") {
          f = fit::noise_law_fit(pts, fit::NoiseModel::kSqrt);
        } else if (model == "linear") {
          f = fit::noise_law_fit(pts, fit::NoiseModel::kLinear);
        } else if (model == "auto") {
          f = fit::select_noise_model(pts);
        } else {
          throw InvalidArgument("model must be 'sqrt', 'linear' or 'auto'");
        }
        py::dict d;
        d["model"] = fit::model_name(f.model);
        d["c0"] = f.c0;
        d["a"] = f.a;
        d["b"] = f.b;
        d["rss"] = f.rss;
        return d;
      },
      py::arg("v0"), py::arg("sigma"), py::arg("model") = "auto");
  m.def(
      "power_law_fit",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        const auto p = fit::power_law_fit(x, y);
        return py::make_tuple(p.prefactor, p.exponent);
      },
      "Returns (prefactor, exponent).");
}
