// Scenario runner: regenerates tables and worked numbers, runs the EIT model,
// the detection-noise Monte Carlo and the fits, and writes CSV plus SVG files.
//
// Exit codes: 0 success, 1 configuration or input error, 2 numerical failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "slaumzi/config.hpp"
#include "slaumzi/constants.hpp"
#include "slaumzi/csv.hpp"
#include "slaumzi/eit.hpp"
#include "slaumzi/error.hpp"
#include "slaumzi/fit.hpp"
#include "slaumzi/laser.hpp"
#include "slaumzi/noise.hpp"
#include "slaumzi/optics.hpp"
#include "slaumzi/plot.hpp"
#include "slaumzi/sensitivity.hpp"
#include "slaumzi/tables.hpp"

namespace fs = std::filesystem;
using namespace slaumzi;

namespace {

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  std::string format = "csv";
};

config::ScenarioConfig load(const Globals& g) {
  config::ScenarioConfig c = g.config_path.empty()
                                 ? config::load_scenario(config::IniFile::parse("", "<defaults>"))
                                 : config::load_scenario_file(g.config_path);
  if (g.seed) {
    c.seed = *g.seed;
  }
  c.noise.seed = c.seed;
  return c;
}

void emit(const Globals& g, const std::string& name, const std::string& content) {
  const fs::path p = fs::path(g.out_dir) / name;
  csv::write_atomic(p, content);
  fmt::print("wrote {}\n", p.string());
}

csv::Table table_csv(const tables::Table& t) {
  csv::Table out;
  out.comments = t.notes;
  if (!t.label_column.empty()) out.header.push_back(t.label_column);
  out.header.insert(out.header.end(), t.columns.begin(), t.columns.end());
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    std::vector<std::string> row;
    if (!t.label_column.empty()) row.push_back(t.row_labels[i]);
    for (double v : t.values[i]) row.push_back(csv::format_number(v));
    out.rows.push_back(std::move(row));
  }
  return out;
}

csv::Table diff_csv(const tables::Table& t) {
  csv::Table out;
  out.header = {"row", "row_label", "column", "value", "reference", "relative_deviation"};
  for (const auto& d : tables::diff(t)) {
    out.rows.push_back({std::to_string(d.row), d.row_label, d.column, csv::format_number(d.value),
                        csv::format_number(d.reference), csv::format_number(d.relative_deviation)});
  }
  return out;
}

int cmd_tables(const Globals& g, const std::string& which) {
  auto one = [&](const tables::Table& t) {
    emit(g, t.name + ".csv", table_csv(t).str());
    emit(g, t.name + "_diff.csv", diff_csv(t).str());
    double worst = 0.0;
    for (const auto& d : tables::diff(t)) worst = std::max(worst, std::abs(d.relative_deviation));
    fmt::print("{}: {} rows, largest deviation from printed values {:.2f}%\n", t.name, t.values.size(),
               100.0 * worst);
  };
  if (which == "mmfs" || which == "all") one(tables::quantum_limit_mmfs_table());
  if (which == "times" || which == "all") one(tables::quantum_limit_time_table());
  if (which == "eit" || which == "all") one(tables::eit_summary_table());
  if (which == "worked" || which == "all") {
    csv::Table t;
    t.header = {"name", "value", "reference", "tolerance", "pass"};
    for (const auto& w : tables::worked_numbers()) {
      t.rows.push_back({w.name, csv::format_number(w.value), csv::format_number(w.reference),
                        csv::format_number(w.tolerance), w.pass() ? "1" : "0"});
      fmt::print("{:<28} {:>12.5g}  (printed {:.4g}, tol {:.0f}%) {}\n", w.name, w.value, w.reference,
                 100.0 * w.tolerance, w.pass() ? "ok" : "OUTSIDE");
    }
    emit(g, "worked_numbers.csv", t.str());
  }
  return 0;
}

double coherence_time(const config::ScenarioConfig& c) {
  if (c.coherence_time) return *c.coherence_time;
  if (c.laser.measured_linewidth) return 1.0 / *c.laser.measured_linewidth;
  throw ConfigError("[laser] needs coherence_time_s or linewidth_rad_s for this command");
}

int cmd_sef(const Globals& g) {
  const auto c = load(g);
  if (!c.has("laser")) throw ConfigError("sef needs a [laser] section (wavelength_m, power_w, coherence time)");
  const double tau_l = coherence_time(c);
  const auto tc = optics::time_constants(c.geometry, c.medium);
  const double n = c.laser.photon_flux();
  const double r_enh = sensitivity::sef(tc.tau_sl, c.medium.transmission, tau_l, n);
  const auto rep = sensitivity::evaluate(tc.tau_sl, tc.tau_vac, c.medium.transmission, tau_l, n, c.detection);
  const double m = tc.tau_vac > 0.0 ? optics::fringe_magnification(c.geometry, c.medium) : 1.0;

  csv::Table t;
  t.header = {"quantity", "value"};
  auto row = [&](const std::string& k, double v) {
    t.rows.push_back({k, csv::format_number(v)});
    fmt::print("{:<22} {:.6g}\n", k, v);
  };
  row("tau0_s", tc.tau0);
  row("tau_d_s", tc.tau_d);
  row("tau_vac_s", tc.tau_vac);
  row("tau_sl_s", tc.tau_sl);
  row("group_index", c.medium.group_index);
  row("magnification", m);
  row("transmission", c.medium.transmission);
  row("photon_flux_per_s", n);
  row("sef", r_enh);
  row("mmfs_standard", rep.mmfs_standard);
  row("mmfs_slaumzi", rep.mmfs_slaumzi);
  row("sef_from_mmfs_ratio", rep.sef);
  for (const auto& note : rep.regime_notes) {
    t.comments.push_back(note);
    fmt::print("note: {}\n", note);
  }
  emit(g, "sef.csv", t.str());
  return 0;
}

int cmd_mmfs(const Globals& g) {
  const auto c = load(g);
  if (!c.has("laser")) throw ConfigError("mmfs needs a [laser] section with cavity_length_m and reflectivity");
  const auto cav = laser::cavity_decay(c.laser);
  const auto stl = laser::schawlow_townes(c.laser, cav);
  const double std_q = sensitivity::mmfs_standard_quantum(c.laser, cav, c.detection);
  const double std_v = sensitivity::mmfs_standard_vacuum_mode(c.laser, cav, c.detection);
  const double photons = c.detection.quantum_efficiency * c.laser.photon_flux() * c.detection.measurement_time;
  const auto opt = sensitivity::umzi_optimal(c.laser, cav, photons, stl.coherence_time);
  const double t_std = sensitivity::quantum_time_bound(sensitivity::BoundMode::kStandard, c.laser, cav,
                                                       stl.coherence_time);
  const double t_umzi =
      sensitivity::quantum_time_bound(sensitivity::BoundMode::kUmzi, c.laser, cav, stl.coherence_time);
  const auto check = sensitivity::product_check(std_q, c.detection.measurement_time);

  csv::Table t;
  t.header = {"quantity", "value"};
  auto row = [&](const std::string& k, double v) {
    t.rows.push_back({k, csv::format_number(v)});
    fmt::print("{:<30} {:.6g}\n", k, v);
  };
  row("cavity_decay_rate_per_s", cav.decay_rate);
  row("cavity_decay_time_s", cav.decay_time);
  row("round_trip_time_s", cav.round_trip_time);
  row("finesse_decay_over_round_trip", cav.finesse);
  row("finesse_standard", cav.finesse_standard());
  row("stl_rad_s", stl.linewidth);
  row("tau_stl_s", stl.coherence_time);
  row("mmfs_standard_rad_s", std_q);
  row("mmfs_standard_vacuum_mode_rad_s", std_v);
  row("umzi_x_opt", opt.x_opt);
  row("umzi_tau_vac_opt_s", opt.tau_vac_opt);
  row("umzi_mmfs_rad_s", opt.mmfs);
  row("umzi_ratio_to_standard", opt.ratio_to_std);
  row("tau_m_bound_standard_s", t_std);
  row("tau_m_bound_umzi_s", t_umzi);
  row("tau_m_bound_cavity_s", sensitivity::quantum_time_bound_cavity(c.laser, cav));
  row("uncertainty_product", check.product);
  row("uncertainty_bound_satisfied", check.satisfies_bound ? 1.0 : 0.0);
  emit(g, "mmfs.csv", t.str());
  return 0;
}

int cmd_eit(const Globals& g) {
  auto c = load(g);
  if (c.calibrate_transmission) {
    c.cell.number_density = eit::calibrate_density(c.scheme, c.cell, *c.calibrate_transmission);
    fmt::print("calibrated number density {:.6g} m^-3 for center transmission {:.3g}\n",
               c.cell.number_density, *c.calibrate_transmission);
  }
  const double span = c.spectrum_points ? c.spectrum_span : 2.0e7;
  const std::size_t points = c.spectrum_points ? c.spectrum_points : 81;
  const auto sp = eit::propagate_sliced(c.scheme, c.cell, eit::detuning_grid(span, points));

  csv::Table t;
  t.comments = {fmt::format("number_density_m3={}", csv::format_number(c.cell.number_density)),
                fmt::format("group_index_at_center={}", csv::format_number(sp.group_index_at_center)),
                fmt::format("transmission_at_center={}", csv::format_number(sp.transmission_at_center))};
  t.header = {"detuning_Hz", "transmission", "phase_index", "d_n_d_delta"};
  for (std::size_t i = 0; i < sp.detunings.size(); ++i) {
    t.add_row({sp.detunings[i] / constants::kTwoPi, sp.transmission[i], sp.phase_index[i], sp.dn_ddelta[i]});
  }
  emit(g, "eit_spectrum.csv", t.str());

  std::vector<double> mhz;
  for (double d : sp.detunings) mhz.push_back(d / constants::kTwoPi * 1e-6);
  std::vector<double> dn;
  for (double n : sp.phase_index) dn.push_back(n - 1.0);
  const std::vector<plot::Panel> panels{
      {"Probe transmission", "probe detuning (MHz)", "transmission", false, false,
       {{"transmission", mhz, sp.transmission}}},
      {"Phase index", "probe detuning (MHz)", "n - 1", false, false, {{"n - 1", mhz, dn}}}};
  emit(g, "eit_spectrum.svg", plot::render_svg(panels));

  fmt::print("group index at center   {:.6g}\n", sp.group_index_at_center);
  fmt::print("transmission at center  {:.6g}\n", sp.transmission_at_center);
  fmt::print("steady-state solves     {}  (max |rho - rho^H| {:.2e}, max |tr - 1| {:.2e}, min pop {:.2e})\n",
             sp.invariants.solves, sp.invariants.max_hermiticity_error, sp.invariants.max_trace_error,
             sp.invariants.min_population);
  if (sp.opaque) fmt::print("note: cell is opaque at some detunings\n");
  return 0;
}

int noise_white(const Globals& g, const config::ScenarioConfig& c) {
  const auto& run = c.noise_run;
  const auto series = noise::synth_white_noise(c.noise, run.duration, run.sample_rate);
  const double sd = noise::standard_deviation(series);
  fmt::print("white noise: sample std {:.6g} V (set {:.6g} V)\n", sd, c.noise.rms_voltage);

  csv::Table t;
  t.header = {"t_s", "s_i_volts"};
  for (std::size_t i = 0; i < series.size(); ++i) t.add_row({static_cast<double>(i) / run.sample_rate, series[i]});
  emit(g, "noise_white_series.csv", t.str());

  // Output std of the mask chain versus LPF bandwidth on one fixed draw.
  Rng rng = substream(c.seed, StreamTag::kWhiteNoise, 1);
  const auto terms = noise::synth_terms(c.noise, rng);
  std::vector<double> bws, sds;
  csv::Table sweep;
  sweep.header = {"lpf_bandwidth_hz", "sigma_out_volts", "closed_form_volts"};
  for (double f : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    auto cfg = c.noise;
    cfg.lpf_bandwidth = f * std::min(cfg.mixer_frequency, cfg.noise_bandwidth - cfg.mixer_frequency);
    if (!(cfg.lpf_bandwidth > 0.0)) throw InvalidArgument("mixer frequency must lie inside the noise band");
    const double s = noise::standard_deviation(
        noise::evaluate(noise::spectrum_analyzer_mask(terms, cfg), run.duration, run.sample_rate));
    bws.push_back(cfg.lpf_bandwidth);
    sds.push_back(s);
    sweep.add_row({cfg.lpf_bandwidth, s, noise::chain_gain_closed_form(cfg) * c.noise.rms_voltage *
                                             (cfg.dc_blocker_loading ? noise::kDcBlockerLoading : 1.0)});
  }
  const auto pl = fit::power_law_fit(bws, sds);
  sweep.comments.push_back(fmt::format("power_law_exponent={}", csv::format_number(pl.exponent)));
  fmt::print("chain output std vs LPF bandwidth: exponent {:.4f}\n", pl.exponent);
  emit(g, "noise_bandwidth_sweep.csv", sweep.str());
  emit(g, "noise_bandwidth_sweep.svg",
       plot::render_svg({{"Chain output vs LPF bandwidth", "LPF bandwidth (Hz)", "sigma(S_F) (V)", true, true,
                          {{"simulated", bws, sds, true}}}}));
  return 0;
}

int noise_shot(const Globals& g, const config::ScenarioConfig& c) {
  const auto& run = c.noise_run;
  const auto pts = noise::shot_sweep(c.noise, c.apd, run.v_dc, run.excess_coefficient, run.excess_corner,
                                     run.duration, run.sample_rate);
  csv::Table t;
  t.header = {"v0", "sigma", "shot_noise_sd_closed_form"};
  std::vector<double> x, y, yc;
  for (const auto& p : pts) {
    const double closed = c.noise.amplifier_gain * c.noise.mixer_scale *
                          noise::shot_noise_sd(p.v_dc, noise::ApdModel{c.apd.conversion, c.apd.photon_energy,
                                                                      c.apd.bandwidth, 0.0, 0.0},
                                               c.noise.lpf_bandwidth);
    t.add_row({p.v_dc, p.sigma, closed});
    x.push_back(p.v_dc);
    y.push_back(p.sigma);
    yc.push_back(closed);
  }
  std::vector<double> xp, yp;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      xp.push_back(x[i]);
      yp.push_back(y[i]);
    }
  }
  if (xp.size() >= 2) {
    const auto pl = fit::power_law_fit(xp, yp);
    t.comments.push_back(fmt::format("power_law_exponent={}", csv::format_number(pl.exponent)));
    fmt::print("sigma(S_F) vs V_DC: exponent {:.4f} at mixer frequency {:.6g} Hz\n", pl.exponent,
               c.noise.mixer_frequency);
  }
  emit(g, "noise_shot.csv", t.str());
  emit(g, "noise_shot.svg",
       plot::render_svg({{"Chain output vs DC level", "V_DC (V)", "sigma(S_F) (V)", true, true,
                          {{"simulated", x, y, true}, {"sqrt law", x, yc}}}}));
  return 0;
}

int noise_balanced(const Globals& g, const config::ScenarioConfig& c) {
  csv::Table t;
  t.header = {"phase_rad", "mean", "intensity_noise_correlated", "intensity_noise_residual", "shot_noise",
              "total_noise", "mmps"};
  std::vector<double> ph, mmps;
  for (int i = 1; i < 64; ++i) {
    auto pair = c.balanced;
    pair.phase = constants::kPi * i / 64.0;
    const auto r = noise::balanced_subtract(pair, c.mismatch_gain);
    t.add_row({pair.phase, r.mean, r.intensity_noise_correlated, r.intensity_noise_residual, r.shot_noise,
               r.total_noise, r.mmps});
    ph.push_back(pair.phase);
    mmps.push_back(r.mmps);
  }
  const auto at = noise::balanced_subtract(c.balanced, c.mismatch_gain);
  fmt::print("phase {:.4g}: mean {:.6g}, shot {:.6g}, total {:.6g}, MMPS {:.6g}\n", c.balanced.phase, at.mean,
             at.shot_noise, at.total_noise, at.mmps);
  fmt::print("MMPS with excess noise: {:.6g}\n",
             noise::mmps_with_excess(c.balanced.peak_signal, c.balanced.extra_noise));
  emit(g, "noise_balanced.csv", t.str());
  emit(g, "noise_balanced.svg", plot::render_svg({{"Balanced detection", "phase (rad)", "MMPS (rad)", false,
                                                   true, {{"MMPS", ph, mmps}}}}));
  return 0;
}

int noise_c0(const Globals& g, const config::ScenarioConfig& c) {
  // Without a [noise] section, run the calibrated reference chain.
  auto cfg = c.has("noise") ? c.noise : noise::NoiseChainConfig::c0_reference();
  cfg.seed = c.seed;
  const auto r = noise::c0_monte_carlo(cfg, c.noise_run.repetitions, c.noise_run.duration, c.noise_run.sample_rate);
  csv::Table t;
  t.comments = {fmt::format("c0={}", csv::format_number(r.c0)),
                fmt::format("standard_error={}", csv::format_number(r.standard_error)),
                fmt::format("closed_form={}", csv::format_number(noise::chain_gain_closed_form(cfg)))};
  t.header = {"repetition", "sigma_over_v_std"};
  for (std::size_t i = 0; i < r.ratios.size(); ++i) t.add_row({static_cast<double>(i), r.ratios[i]});
  emit(g, "noise_c0.csv", t.str());
  fmt::print("C0 = {:.5f} +- {:.5f} over {} repetitions (closed form {:.5f})\n", r.c0, r.standard_error,
             r.ratios.size(), noise::chain_gain_closed_form(cfg));
  if (r.warning) fmt::print("warning: {}\n", *r.warning);
  return 0;
}

int cmd_noise(const Globals& g, const std::string& which) {
  const auto c = load(g);
  if (which == "white") return noise_white(g, c);
  if (which == "shot") return noise_shot(g, c);
  if (which == "balanced") return noise_balanced(g, c);
  return noise_c0(g, c);
}

int cmd_fit(const Globals& g, const std::string& input, const std::string& kind, std::optional<double> c0,
            std::optional<double> a) {
  const auto data = csv::read_numeric(input);
  csv::Table t;
  t.header = {"quantity", "value"};
  auto row = [&](const std::string& k, double v) {
    t.rows.push_back({k, csv::format_number(v)});
    fmt::print("{:<16} {:.6g}\n", k, v);
  };
  if (kind == "lia") {
    const auto xi = csv::column(data, "swing_hz");
    const auto yi = csv::column(data, "v_lia_volts");
    fit::LiaSweep sweep;
    for (std::size_t i = 0; i < data.rows.size(); ++i) sweep.samples.push_back({data.rows[i][xi], data.rows[i][yi]});
    const auto r = fit::ksum_fit(sweep);
    row("k_volt_per_hz", r.slope);
    row("v_n_volts", r.offset);
    row("k_sum", r.objective);
    row("mmfs_per_s", r.mmfs);
    for (const auto& w : r.warnings) {
      t.comments.push_back(w);
      fmt::print("warning: {}\n", w);
    }
    std::vector<double> x, y, yf;
    for (const auto& s : sweep.samples) {
      x.push_back(s.swing_hz);
      y.push_back(s.v_lia);
      yf.push_back(r.slope * s.swing_hz + r.offset);
    }
    emit(g, "fit_lia.csv", t.str());
    emit(g, "fit_lia.svg", plot::render_svg({{"Lock-in output vs frequency swing", "swing (Hz)", "V_LIA (V)",
                                              false, false, {{"data", x, y, true}, {"fit", x, yf}}}}));
    return 0;
  }
  const auto xi = csv::column(data, "v0");
  const auto yi = csv::column(data, "sigma");
  std::vector<fit::NoisePoint> pts;
  for (const auto& r : data.rows) pts.push_back({r[xi], r[yi]});
  const auto s = fit::noise_law_fit(pts, fit::NoiseModel::kSqrt);
  const auto l = fit::noise_law_fit(pts, fit::NoiseModel::kLinear);
  const auto best = s.rss <= l.rss ? s : l;
  row("sqrt_c0", s.c0);
  row("sqrt_b", s.b);
  row("sqrt_rss", s.rss);
  row("linear_a", l.a);
  row("linear_b", l.b);
  row("linear_rss", l.rss);
  t.comments.push_back(fmt::format("selected_model={}", fit::model_name(best.model)));
  fmt::print("selected model   {}\n", fit::model_name(best.model));
  std::vector<double> x, y, ys, yl;
  for (const auto& p : pts) {
    x.push_back(p.v0);
    y.push_back(p.sigma);
    ys.push_back(fit::noise_model_value(s, p.v0));
    yl.push_back(fit::noise_model_value(l, p.v0));
  }
  std::vector<plot::Series> series{{"data", x, y, true}, {"sqrt fit", x, ys}, {"linear fit", x, yl}};
  if (c0 && a) {
    fit::NoiseFit fixed{};
    fixed.c0 = *c0;
    fixed.a = *a;
    const auto m = fit::noise_law_fit(pts, fit::NoiseModel::kMixed, fixed);
    row("mixed_p", m.p);
    row("mixed_b", m.b);
    row("mixed_rss", m.rss);
    std::vector<double> ym;
    for (const auto& p : pts) ym.push_back(fit::noise_model_value(m, p.v0));
    series.push_back({"mixed fit", x, ym});
  }
  emit(g, "fit_noise.csv", t.str());
  emit(g, "fit_noise.svg",
       plot::render_svg({{"Noise level vs DC level", "V0 (V)", "sigma", false, false, series}}));
  return 0;
}

int cmd_constants(const Globals& g) {
  csv::Table t;
  t.header = {"name", "value", "unit", "source"};
  for (const auto& c : constants::kTable) {
    t.rows.push_back({std::string(c.name), csv::format_number(c.value), std::string(c.unit), std::string(c.source)});
    fmt::print("{:<32} {:<22} {:<8} {}\n", c.name, csv::format_number(c.value), c.unit, c.source);
  }
  emit(g, "constants.csv", t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slow-light unbalanced interferometer sensitivity toolkit"};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&](CLI::App* a) {
    a->add_option("--config", g.config_path, "Scenario config file (INI)")->check(CLI::ExistingFile);
    a->add_option("--seed", g.seed, "Master seed; overrides [run] seed");
    a->add_option("--out", g.out_dir, "Output directory");
    a->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv"}));
  };

  std::string which_table = "all";
  auto* tables = app.add_subcommand("tables", "Regenerate the reference tables and worked numbers");
  tables->add_option("--which", which_table, "Table to produce (supp1, supp2, main1 are aliases)")
      ->transform(CLI::Transformer(
          std::map<std::string, std::string>{{"supp1", "mmfs"}, {"supp2", "times"}, {"main1", "eit"}}))
      ->check(CLI::IsMember({"mmfs", "times", "eit", "worked", "all"}));
  auto* sef = app.add_subcommand("sef", "Sensitivity enhancement for one interferometer configuration");
  auto* mmfs = app.add_subcommand("mmfs", "Quantum-limited MMFS and measurement-time bounds for a laser");
  auto* eit = app.add_subcommand("eit", "EIT probe spectrum, transmission and group index");
  std::string noise_case = "c0";
  auto* noise = app.add_subcommand("noise", "Detection-noise Monte Carlo");
  noise->add_option("--case", noise_case, "Simulation to run")
      ->check(CLI::IsMember({"white", "shot", "balanced", "c0"}));
  std::string fit_input, fit_kind = "lia";
  std::optional<double> fit_c0, fit_a;
  auto* fit = app.add_subcommand("fit", "Fit lock-in sweeps or noise-level data from CSV");
  fit->add_option("--input", fit_input, "Input CSV")->required()->check(CLI::ExistingFile);
  fit->add_option("--kind", fit_kind, "Data kind")->check(CLI::IsMember({"lia", "noise"}));
  fit->add_option("--c0", fit_c0, "Fixed sqrt coefficient for the mixed noise model");
  fit->add_option("--a", fit_a, "Fixed linear coefficient for the mixed noise model");
  auto* consts = app.add_subcommand("constants", "Print the physical constants table");
  for (auto* s : {tables, sef, mmfs, eit, noise, fit, consts}) add_globals(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*tables) return cmd_tables(g, which_table);
    if (*sef) return cmd_sef(g);
    if (*mmfs) return cmd_mmfs(g);
    if (*eit) return cmd_eit(g);
    if (*noise) return cmd_noise(g, noise_case);
    if (*fit) return cmd_fit(g, fit_input, fit_kind, fit_c0, fit_a);
    if (*consts) return cmd_constants(g);
  } catch (const ConfigError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return 1;
  } catch (const InvalidArgument& e) {
    fmt::print(stderr, "invalid input: {}\n", e.what());
    return 1;
  } catch (const NumericalError& e) {
    fmt::print(stderr, "numerical failure: {}\n", e.what());
    return 2;
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    fmt::print(stderr, "unexpected failure: {}\n", e.what());
    return 2;
  }
  return 0;
}
