#ifndef WGMCOOL_CONSTANTS_HPP
#define WGMCOOL_CONSTANTS_HPP

#include <numbers>

// Physical constants (CODATA 2018 exact/recommended values) and unit
// conversions. Every module reads its constants from here.
namespace wgmcool::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double speed_of_light = 299792458.0;          // m/s, exact
inline constexpr double planck = 6.62607015e-34;               // J s, exact
inline constexpr double hbar = planck / two_pi;                // J s
inline constexpr double boltzmann = 1.380649e-23;              // J/K, exact
inline constexpr double avogadro = 6.02214076e23;              // 1/mol, exact
inline constexpr double gas_constant = boltzmann * avogadro;   // J/(mol K)

inline constexpr double pascal_per_torr = 133.322;

// Air at the reference conditions used throughout.
inline constexpr double air_viscosity = 1.81e-5;          // Pa s
inline constexpr double air_molar_mass = 0.02897;         // kg/mol
inline constexpr double air_molecule_diameter = 3.7e-10;  // m
inline constexpr double room_temperature = 288.0;         // K

inline constexpr double silica_density = 2200.0;  // kg/m^3

}  // namespace wgmcool::constants

#endif
