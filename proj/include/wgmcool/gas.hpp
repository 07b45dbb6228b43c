#ifndef WGMCOOL_GAS_HPP
#define WGMCOOL_GAS_HPP

#include <string>

#include "wgmcool/constants.hpp"

namespace wgmcool {

// Background gas. Defaults describe air at 288 K.
struct GasEnvironment {
    double pressure = 0.0;  // Pa
    double temperature = constants::room_temperature;
    double viscosity = constants::air_viscosity;
    double molar_mass = constants::air_molar_mass;
    double molecule_diameter = constants::air_molecule_diameter;

    // Ideal-gas mass density p M / (R T).
    double density() const;
    void validate() const;
};

// Stokes drag 6 pi eta a; independent of pressure.
double viscous_drag(const GasEnvironment& env, double radius);

// sqrt(8 R T / (pi M)).
double mean_thermal_speed(double temperature, double molar_mass);

// Free-molecular drag (4/3 + 3 pi/16) pi rho <v> a^2.
double epstein_drag(const GasEnvironment& env, double radius);

// Pressure where epstein_drag equals beta_target; the drag is linear in p.
double crossover_pressure(double beta_target, const GasEnvironment& env_template, double radius);

double mean_free_path(const GasEnvironment& env);
double knudsen_number(const GasEnvironment& env, double radius);

enum class DragRegime { viscous, transition, free_molecular };
std::string to_string(DragRegime regime);

struct GasDrag {
    double gamma = 0.0;  // kg/s, the selected coefficient
    DragRegime regime = DragRegime::viscous;
    double knudsen = 0.0;
    double viscous = 0.0;
    double epstein = 0.0;
};

// Epstein for Kn > 10, Stokes for Kn < 0.01, the smaller of the two in between.
GasDrag gas_drag(const GasEnvironment& env, double radius);

inline double torr_to_pascal(double torr) { return torr * constants::pascal_per_torr; }
inline double pascal_to_torr(double pa) { return pa / constants::pascal_per_torr; }

}  // namespace wgmcool

#endif
