#ifndef WGMCOOL_DYNAMICS_HPP
#define WGMCOOL_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgmcool/doppler.hpp"
#include "wgmcool/gas.hpp"

namespace wgmcool {

enum class TrapKind { optical_trap, cantilever };
std::string to_string(TrapKind kind);
TrapKind parse_trap_kind(const std::string& text);

struct TrapConfig {
    TrapKind kind = TrapKind::optical_trap;
    double spring_constant = 0.0;  // N/m
    double mass = 0.0;             // kg, effective

    double omega0() const;  // sqrt(kappa/m)
    void validate() const;
};

struct TrapResolution {
    TrapConfig trap;
    std::vector<std::string> warnings;
};

// Builds a trap from any two of (spring constant, angular frequency,
// mass); the third is derived. When all three are given the spring
// constant and mass win and a warning reports the mismatch.
TrapResolution resolve_trap(TrapKind kind, std::optional<double> spring_constant,
                            std::optional<double> omega0, std::optional<double> mass);

struct CoolingBeam {
    CoolingParams params;
    int sign = +1;  // propagation direction along the axis
};

struct SimConfig {
    TrapConfig trap;
    std::optional<GasEnvironment> gas;
    double sphere_radius = 0.0;           // m, needed with gas
    std::optional<double> gas_damping;    // kg/s, replaces the gas model's drag
    bool thermal_noise = true;
    std::vector<CoolingBeam> beams;       // 0, 1 or 2
    bool recoil_noise = true;
    double duration = 0.0;                // s
    double timestep = 0.0;                // s
    std::uint64_t seed = 0;
    std::uint64_t trajectory_index = 0;   // noise stream of this run
    int record_stride = 1;
    double x_initial = 0.0;               // m, measured from the equilibrium
    double v_initial = 0.0;               // m/s
};

struct TrajectoryMeta {
    std::uint64_t seed = 0;
    std::uint64_t trajectory_index = 0;
    double timestep = 0.0;
    int record_stride = 1;
    std::uint64_t config_digest = 0;
    double mass = 0.0;
    double spring_constant = 0.0;
    double omega0 = 0.0;
    double gas_damping = 0.0;          // kg/s
    double optical_damping = 0.0;      // kg/s, linearised sum over beams
    double x_equilibrium = 0.0;        // m, offset from the constant forces
    bool sideband_resolved = false;    // some beam has delta < omega0
};

struct Trajectory {
    std::vector<double> times;
    std::vector<double> positions;
    std::vector<double> velocities;
    TrajectoryMeta meta;
};

// Throws DomainError naming the first violated constraint, including
// the timestep stability bound.
void validate(const SimConfig& config);

// Canonical text of a configuration; its FNV-1a hash is the digest.
std::string describe(const SimConfig& config);
std::uint64_t config_digest(const SimConfig& config);

// Largest stable timestep: min(2 pi/omega0, m/Gamma_total)/50.
double max_stable_timestep(const SimConfig& config);

// One trajectory of
//   m x'' = -kappa x - Gamma_gas x' + sum_beams F_beam(x') + F_gas(t) + F_recoil(t)
// with a B-A-O-A-B splitting: deterministic half kicks (trap and full
// nonlinear optical force), half drifts, and an exact Ornstein-Uhlenbeck
// step for the gas drag and its noise plus the recoil kicks.
Trajectory simulate(const SimConfig& config);

// m <v^2> / kB over [t_begin, t_end]; needs at least 100 trap periods.
double estimate_temperature(const Trajectory& traj, double t_begin, double t_end);
double estimate_temperature(const Trajectory& traj);

// Positional estimate kappa <(x - x_eq)^2> / kB over the same window.
double estimate_position_temperature(const Trajectory& traj, double t_begin, double t_end);

// Decay rate of E = m v^2/2 + kappa (x - x_eq)^2/2 from a least-squares
// line through log E. For a lightly damped trapped sphere this is
// Gamma_total/m.
double fit_energy_decay(const Trajectory& traj);

// Oscillation frequency in Hz from upward zero crossings of x - x_eq.
double oscillation_frequency(const Trajectory& traj);

}  // namespace wgmcool

#endif
