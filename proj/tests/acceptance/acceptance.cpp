// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion, with the
// measured values and pinned tolerances, and exits non-zero if any fail.
//
//   acceptance --cli path/to/slaumzi --configs configs/ --work scratch/ [--only N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ode_oracle.hpp"
#include "slaumzi/eit.hpp"
#include "slaumzi/fit.hpp"
#include "slaumzi/laser.hpp"
#include "slaumzi/noise.hpp"
#include "slaumzi/sensitivity.hpp"
#include "slaumzi/tables.hpp"

using namespace slaumzi;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Paths {
  std::string cli;
  std::string configs;
  std::string work;
};

double max_abs_dev(const std::vector<tables::DiffEntry>& d, const std::function<bool(const tables::DiffEntry&)>& keep) {
  double worst = 0.0;
  for (const auto& e : d) {
    if (keep(e)) worst = std::max(worst, std::abs(e.relative_deviation));
  }
  return worst;
}

// 1. Ring-laser quantum-limit table, every cell within 5%.
Outcome ac1() {
  const auto d = tables::diff(tables::quantum_limit_mmfs_table());
  const double worst = max_abs_dev(d, [](const auto&) { return true; });
  return {d.size() == 16 && worst <= 0.05,
          fmt::format("{} cells, max |dev| {:.2f}% (tol 5%)", d.size(), 100 * worst)};
}

// 2. Measurement-time table: times within 5%, ratio within 10%.
Outcome ac2() {
  const auto d = tables::diff(tables::quantum_limit_time_table());
  const double times = max_abs_dev(d, [](const auto& e) { return e.column != "ratio"; });
  const double ratio = max_abs_dev(d, [](const auto& e) { return e.column == "ratio"; });
  return {d.size() == 12 && times <= 0.05 && ratio <= 0.10,
          fmt::format("times max |dev| {:.2f}% (tol 5%), ratio max |dev| {:.2f}% (tol 10%)", 100 * times,
                      100 * ratio)};
}

// 3. Worked numbers, each with its own tolerance.
Outcome ac3() {
  int bad = 0;
  std::string failures;
  const auto w = tables::worked_numbers();
  for (const auto& x : w) {
    if (!x.pass()) {
      ++bad;
      failures += fmt::format(" {}={:.4g}(ref {:.4g})", x.name, x.value, x.reference);
    }
  }
  return {bad == 0, fmt::format("{}/{} within tolerance{}", w.size() - bad, w.size(), failures)};
}

// 4. Phase-jump Monte Carlo vs exp(-r/2), 1e5 samples, 3 sigma.
Outcome ac4() {
  bool ok = true;
  std::string s;
  std::uint64_t seed = 2024;
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const auto mc = laser::phase_jump_monte_carlo(r * 1e-9, 1e-9, 100000, seed++);
    const double z = (mc.mean_cos - laser::mean_cos_closed_form(r, 1.0)) / mc.stderr_cos;
    ok = ok && std::abs(z) < 3.0;
    s += fmt::format(" r={}:z={:+.2f}", r, z);
  }
  return {ok, "deviation in sigma units (tol 3)" + s};
}

// 5. Langevin beat-note spread vs sqrt(2D'/tau_M), 1000 trajectories, 3 sigma.
Outcome ac5() {
  bool ok = true;
  std::string s;
  const double settings[3][2] = {{1.0, 1.0}, {0.02, 5.0}, {50.0, 0.1}};
  std::uint64_t seed = 7;
  for (const auto& p : settings) {
    const auto r = laser::langevin_beat_monte_carlo(p[0], p[1], 1000, seed++);
    const double z = (r.delta_mu - r.analytic) / r.standard_error;
    ok = ok && std::abs(z) < 3.0;
    s += fmt::format(" (2D'={},tau={}):z={:+.2f}", p[0], p[1], z);
  }
  return {ok, "deviation in sigma units (tol 3)" + s};
}

// 6. x_opt = 1 to 1e-6; SEF = 1 at n_g = 2F within one grid step.
Outcome ac6() {
  const double x = sensitivity::minimize_umzi_cost();
  laser::LaserSpec spec;
  spec.wavelength = tables::kRingWavelength;
  spec.output_power = tables::kRingPower;
  spec.cavity_length = tables::kRingLength;
  spec.output_coupler_reflectivity = 0.9;
  const auto cav = laser::cavity_decay(spec);
  sensitivity::DetectionSpec det;
  const double f = cav.finesse;
  const double step = f / 100.0;
  double crossing = -1.0;
  for (int i = 0; i <= 400; ++i) {
    const double ng = 1.0 + step * i;
    // Medium as long as the cavity, no free-space imbalance, sigma = 1.
    const double sef = sensitivity::mmfs_standard_quantum(spec, cav, det) /
                       sensitivity::mmfs_slaumzi(ng * cav.round_trip_time, 1.0, 1.0, spec.photon_flux(),
                                                 det.measurement_time);
    if (sef >= 1.0) {
      crossing = ng;
      break;
    }
  }
  const bool ok = std::abs(x - 1.0) < 1e-6 && crossing > 0 && std::abs(crossing - 2.0 * f) <= step;
  return {ok, fmt::format("x_opt = {:.9f} (tol 1e-6); break-even n_g = {:.2f} vs 2F = {:.2f}, grid step {:.2f}", x,
                          crossing, 2 * f, step)};
}

// 7. C0 with the reference chain, 400 repetitions: 5.26 +- 3%.
Outcome ac7() {
  const auto r = noise::c0_monte_carlo(noise::NoiseChainConfig::c0_reference(), 400);
  const double dev = (r.c0 - 5.26) / 5.26;
  return {std::abs(dev) <= 0.03,
          fmt::format("C0 = {:.4f} +- {:.4f} (ref 5.26, dev {:+.2f}%, tol 3%)", r.c0, r.standard_error, 100 * dev)};
}

// 8. EIT model: (a) calibrated group index, (b) ODE oracle, (c) invariants, (d) window and slope.
Outcome ac8() {
  const auto scheme = eit::FourLevelScheme::reference();
  auto cell = eit::CellConfig::reference();

  cell.number_density = eit::calibrate_density(scheme, cell, 0.37);
  const auto sp = eit::propagate_sliced(scheme, cell, eit::detuning_grid(4e7, 21));
  const double ng = sp.group_index_at_center;
  const double t0 = sp.transmission_at_center;
  const bool a = ng >= 1100.0 && ng <= 2100.0 && std::abs(t0 - 0.37) <= 0.1;

  const double ode_dev = (eit::steady_state(scheme) - oracle::integrate_to_steady_state(scheme, 0.0)).cwiseAbs().maxCoeff();
  const bool b = ode_dev < 1e-6;

  // One solve per velocity class per slice, for 21 offsets plus the center.
  const std::size_t expected = (21 + 1) * cell.slice_count * cell.velocity_points;
  const bool c = sp.invariants.ok(1e-10) && sp.invariants.solves == expected;

  const std::size_t mid = sp.detunings.size() / 2;
  bool peak = true;
  for (std::size_t i = 0; i < sp.transmission.size(); ++i) {
    if (i != mid && !(sp.transmission[i] < sp.transmission[mid])) peak = false;
  }
  const bool d = peak && sp.dn_ddelta[mid] > 0.0;

  return {a && b && c && d,
          fmt::format("(a) {} n_g = {:.1f} (need 1100..2100), T = {:.3f} (need 0.37 +- 0.1), density {:.3g} m^-3; "
                      "(b) {} max |rho - rho_ode| = {:.2e} (tol 1e-6); "
                      "(c) {} {} solves, herm {:.1e}, trace {:.1e}, pops [{:.2e}, {:.3f}]; "
                      "(d) {} peak at center, dn/ddelta = {:.3e} s/rad",
                      a ? "ok" : "FAIL", ng, t0, cell.number_density, b ? "ok" : "FAIL", ode_dev, c ? "ok" : "FAIL",
                      sp.invariants.solves, sp.invariants.max_hermiticity_error, sp.invariants.max_trace_error,
                      sp.invariants.min_population, sp.invariants.max_population, d ? "ok" : "FAIL",
                      sp.dn_ddelta[mid])};
}

// 9. Fit round-trips: exact when noiseless, unbiased over 1000 noisy trials.
Outcome ac9() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double k = 2.2e-10, vn = 5.4e-5;
  auto sweep = [&](double noise) {
    fit::LiaSweep s;
    for (int i = 1; i <= 12; ++i) {
      const double f = 2.5e4 * i;
      s.samples.push_back({f, (k * f + vn) * (1.0 + noise * normal(rng))});
    }
    return s;
  };
  const auto exact = fit::ksum_fit(sweep(0.0));
  const double e_k = std::abs(exact.slope / k - 1), e_v = std::abs(exact.offset / vn - 1);

  const double c0 = 0.048, b = 0.002;
  auto points = [&](double noise) {
    std::vector<fit::NoisePoint> p;
    for (int i = 1; i <= 12; ++i) {
      const double v = 0.1 * i;
      p.push_back({v, (c0 * std::sqrt(v) + b) * (1.0 + noise * normal(rng))});
    }
    return p;
  };
  const auto nexact = fit::noise_law_fit(points(0.0), fit::NoiseModel::kSqrt);
  const double e_c = std::abs(nexact.c0 / c0 - 1);

  double sk = 0, sk2 = 0, sc = 0, sc2 = 0;
  const int n = 1000;
  for (int t = 0; t < n; ++t) {
    const double kk = fit::ksum_fit(sweep(0.01)).slope;
    sk += kk;
    sk2 += kk * kk;
    const double cc = fit::noise_law_fit(points(0.02), fit::NoiseModel::kSqrt).c0;
    sc += cc;
    sc2 += cc * cc;
  }
  const double mk = sk / n, mc = sc / n;
  const double zk = (mk - k) / std::sqrt((sk2 / n - mk * mk) / n);
  const double zc = (mc - c0) / std::sqrt((sc2 / n - mc * mc) / n);
  const bool ok = e_k < 1e-9 && e_v < 1e-9 && e_c < 1e-9 && std::abs(zk) < 3 && std::abs(zc) < 3;
  return {ok, fmt::format("noiseless rel err k {:.1e}, V_N {:.1e}, c0 {:.1e} (tol 1e-9); noisy bias z: k {:+.2f}, "
                          "c0 {:+.2f} (tol 3)",
                          e_k, e_v, e_c, zk, zc)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const fs::path& p, const std::string& s) {
  fs::create_directories(p.parent_path());
  std::ofstream(p) << s;
}

// 10. Every subcommand twice with the same seed and config: identical CSVs.
Outcome ac10(const Paths& paths) {
  const fs::path work = paths.work;
  fs::remove_all(work);
  fs::create_directories(work);
  write_text(work / "eit_small.ini",
             "[cell]\nvelocity_points = 201\nslices = 4\nnumber_density = 8e15\n"
             "spectrum_span_rad_s = 4e7\nspectrum_points = 11\n");
  write_text(work / "noise_small.ini",
             "[noise]\nterms = 20000\nbandwidth_hz = 2e6\nrepetitions = 60\nduration_s = 1e-3\n"
             "sample_rate_hz = 5e6\nexcess_coefficient = 1e-3\n");
  const std::string cfg = paths.configs;
  const std::vector<std::pair<std::string, std::string>> runs{
      {"tables", "tables"},
      {"sef", "sef --config " + cfg + "/slow_light_1759.ini"},
      {"mmfs", "mmfs --config " + cfg + "/vacuum.ini"},
      {"eit", "eit --config " + (work / "eit_small.ini").string()},
      {"noise_white", "noise --case white --config " + (work / "noise_small.ini").string()},
      {"noise_shot", "noise --case shot --config " + (work / "noise_small.ini").string()},
      {"noise_balanced", "noise --case balanced --config " + cfg + "/balanced.ini"},
      {"noise_c0", "noise --case c0 --config " + (work / "noise_small.ini").string()},
      {"fit", "fit --input " + cfg + "/../data/lia_sweep_umzi.csv"},
      {"constants", "constants"},
  };
  int files = 0;
  std::string bad;
  for (const auto& [name, args] : runs) {
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = work / name / std::to_string(rep);
      const std::string cmd = fmt::format("\"{}\" {} --seed 42 --out \"{}\" > \"{}\" 2>&1", paths.cli, args,
                                          out.string(), (work / (name + ".log")).string());
      if (std::system(cmd.c_str()) != 0) bad += " " + name + "(exit)";
    }
    const fs::path a = work / name / "0", b = work / name / "1";
    if (!fs::exists(a)) continue;
    for (const auto& e : fs::directory_iterator(a)) {
      if (e.path().extension() != ".csv") continue;
      ++files;
      if (slurp(e.path()) != slurp(b / e.path().filename())) bad += " " + name + "/" + e.path().filename().string();
    }
  }
  return {bad.empty() && files > 0,
          fmt::format("{} subcommand runs, {} CSV files compared byte-for-byte{}{}", runs.size(), files,
                      bad.empty() ? "" : ", mismatches:", bad)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  Paths paths;
  int only = 0;
  app.add_option("--cli", paths.cli, "slaumzi executable")->required();
  app.add_option("--configs", paths.configs, "configs directory")->required();
  app.add_option("--work", paths.work, "scratch directory")->required();
  app.add_option("--only", only, "run a single criterion (1-10)");
  CLI11_PARSE(app, argc, argv);

  // Runtime limits in seconds; 0 means none.
  const std::vector<std::pair<double, std::function<Outcome()>>> checks{
      {1.0, ac1},   {1.0, ac2},   {1.0, ac3},   {30.0, ac4}, {60.0, ac5},
      {0.0, ac6},   {300.0, ac7}, {600.0, ac8}, {60.0, ac9}, {0.0, [&] { return ac10(paths); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double limit = checks[i].first;
    const bool in_time = limit == 0.0 || secs <= limit;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    fmt::print("AC{:<2} {}  {}; {:.2f} s{}\n", i + 1, pass ? "PASS" : "FAIL", o.detail, secs,
               limit > 0.0 ? fmt::format(" (limit {:.0f} s)", limit) : "");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
