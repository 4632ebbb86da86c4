#pragma once

#include <array>
#include <numbers>
#include <string_view>

namespace slaumzi::constants {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kE = std::numbers::e;

// CODATA 2018 exact / recommended values, SI units.
inline constexpr double kSpeedOfLight = 299792458.0;          // m/s
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kBoltzmann = 1.380649e-23;            // J/K
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m

// 85Rb reference data (D. A. Steck, "Rubidium 85 D Line Data").
inline constexpr double kRb85Mass = 84.911789738 * kAtomicMassUnit;   // kg
inline constexpr double kRbD1Wavelength = 794.979e-9;                 // m
inline constexpr double kRbD1ReducedDipole = 2.5377e-29;              // C m
inline constexpr double kRb85ExcitedSplittingHz = 361.58e6;           // 5P1/2 F'=2 -> F'=3
inline constexpr double kRb85GroundSplittingHz = 3.0357e9;            // 5S1/2 F=2 -> F=3
inline constexpr double kHeNeWavelength = 632.8e-9;                   // m

// Probe susceptibility prefactor 2 d^2 / (eps0 hbar) for the D1 reduced dipole, m^3/s.
inline constexpr double kRbD1DipoleConstant =
    2.0 * kRbD1ReducedDipole * kRbD1ReducedDipole / (kVacuumPermittivity * kHbar);

struct NamedConstant {
  std::string_view name;
  double value;
  std::string_view unit;
  std::string_view source;
};

inline constexpr std::array<NamedConstant, 13> kTable{{
    {"speed_of_light", kSpeedOfLight, "m/s", "CODATA 2018 (exact)"},
    {"hbar", kHbar, "J s", "CODATA 2018"},
    {"boltzmann", kBoltzmann, "J/K", "CODATA 2018 (exact)"},
    {"atomic_mass_unit", kAtomicMassUnit, "kg", "CODATA 2018"},
    {"vacuum_permittivity", kVacuumPermittivity, "F/m", "CODATA 2018"},
    {"rb85_mass", kRb85Mass, "kg", "Steck Rb85 data"},
    {"rb_d1_wavelength", kRbD1Wavelength, "m", "Steck Rb85 data"},
    {"rb_d1_reduced_dipole", kRbD1ReducedDipole, "C m", "Steck Rb85 data"},
    {"rb85_5p12_hyperfine_splitting", kRb85ExcitedSplittingHz, "Hz", "Steck Rb85 data (external)"},
    {"rb85_5s12_hyperfine_splitting", kRb85GroundSplittingHz, "Hz", "Steck Rb85 data"},
    {"hene_wavelength", kHeNeWavelength, "m", "He-Ne red line"},
    {"rb_d1_dipole_constant", kRbD1DipoleConstant, "m^3/s", "2 d^2 / (eps0 hbar)"},
    {"euler_e", kE, "1", "mathematical"},
}};

}  // namespace slaumzi::constants
