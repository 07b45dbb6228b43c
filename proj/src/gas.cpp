#include "wgmcool/gas.hpp"

#include <algorithm>
#include <cmath>

#include "wgmcool/errors.hpp"

namespace wgmcool {

namespace {

constexpr double epstein_factor = (4.0 / 3.0 + 3.0 * constants::pi / 16.0) * constants::pi;

void check_radius(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("gas: sphere radius must be positive");
    }
}

}  // namespace

double GasEnvironment::density() const {
    return pressure * molar_mass / (constants::gas_constant * temperature);
}

void GasEnvironment::validate() const {
    if (!(pressure >= 0.0) || !std::isfinite(pressure)) {
        throw DomainError("gas: pressure must be non-negative");
    }
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
        throw DomainError("gas: temperature must be positive");
    }
    if (!(viscosity >= 0.0) || !(molar_mass > 0.0) || !(molecule_diameter > 0.0)) {
        throw DomainError("gas: viscosity, molar mass and molecule diameter must be positive");
    }
}

double viscous_drag(const GasEnvironment& env, double radius) {
    env.validate();
    check_radius(radius);
    return 6.0 * constants::pi * env.viscosity * radius;
}

double mean_thermal_speed(double temperature, double molar_mass) {
    if (!(temperature >= 0.0) || !(molar_mass > 0.0)) {
        throw DomainError("mean_thermal_speed: need T >= 0 and M > 0");
    }
    return std::sqrt(8.0 * constants::gas_constant * temperature / (constants::pi * molar_mass));
}

double epstein_drag(const GasEnvironment& env, double radius) {
    env.validate();
    check_radius(radius);
    return epstein_factor * env.density() * mean_thermal_speed(env.temperature, env.molar_mass) *
           radius * radius;
}

double crossover_pressure(double beta_target, const GasEnvironment& env_template, double radius) {
    if (!(beta_target > 0.0)) {
        throw DomainError("crossover_pressure: target damping must be positive");
    }
    GasEnvironment unit = env_template;
    unit.pressure = 1.0;
    return beta_target / epstein_drag(unit, radius);
}

double mean_free_path(const GasEnvironment& env) {
    env.validate();
    const double d = env.molecule_diameter;
    return constants::boltzmann * env.temperature /
           (std::sqrt(2.0) * constants::pi * d * d * env.pressure);
}

double knudsen_number(const GasEnvironment& env, double radius) {
    check_radius(radius);
    return mean_free_path(env) / radius;
}

std::string to_string(DragRegime regime) {
    switch (regime) {
    case DragRegime::viscous:
        return "viscous";
    case DragRegime::transition:
        return "transition";
    case DragRegime::free_molecular:
        return "free_molecular";
    }
    return "unknown";
}

GasDrag gas_drag(const GasEnvironment& env, double radius) {
    GasDrag out;
    out.viscous = viscous_drag(env, radius);
    out.epstein = epstein_drag(env, radius);
    out.knudsen = knudsen_number(env, radius);  // +inf in vacuum
    if (out.knudsen > 10.0) {
        out.regime = DragRegime::free_molecular;
        out.gamma = out.epstein;
    } else if (out.knudsen < 0.01) {
        out.regime = DragRegime::viscous;
        out.gamma = out.viscous;
    } else {
        out.regime = DragRegime::transition;
        out.gamma = std::min(out.viscous, out.epstein);
    }
    return out;
}

}  // namespace wgmcool
