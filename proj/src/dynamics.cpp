#include "wgmcool/dynamics.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "wgmcool/constants.hpp"
#include "wgmcool/errors.hpp"
#include "wgmcool/format.hpp"
#include "wgmcool/rng.hpp"

namespace wgmcool {

std::string to_string(TrapKind kind) {
    return kind == TrapKind::optical_trap ? "optical_trap" : "cantilever";
}

TrapKind parse_trap_kind(const std::string& text) {
    if (text == "optical_trap") {
        return TrapKind::optical_trap;
    }
    if (text == "cantilever") {
        return TrapKind::cantilever;
    }
    throw UsageError("unknown trap kind '" + text + "' (expected optical_trap or cantilever)");
}

double TrapConfig::omega0() const { return std::sqrt(spring_constant / mass); }

void TrapConfig::validate() const {
    if (!(spring_constant > 0.0) || !std::isfinite(spring_constant)) {
        throw DomainError("trap: spring constant must be positive");
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw DomainError("trap: mass must be positive");
    }
}

TrapResolution resolve_trap(TrapKind kind, std::optional<double> kappa, std::optional<double> omega,
                            std::optional<double> mass) {
    TrapResolution out;
    out.trap.kind = kind;
    const int given = int(kappa.has_value()) + int(omega.has_value()) + int(mass.has_value());
    if (given < 2) {
        throw UsageError("trap: give two of spring constant, frequency and mass");
    }
    if (omega && !(*omega > 0.0)) {
        throw DomainError("trap: frequency must be positive");
    }
    if (kappa && mass) {
        out.trap.spring_constant = *kappa;
        out.trap.mass = *mass;
        if (omega) {
            const double derived = out.trap.omega0();
            if (std::abs(derived - *omega) > 1e-6 * *omega) {
                std::ostringstream msg;
                msg << "trap: spring constant and mass give omega0 = " << derived
                    << " rad/s (" << derived / constants::two_pi << " Hz), not the stated "
                    << *omega << " rad/s; using the derived value";
                out.warnings.push_back(msg.str());
            }
        }
    } else if (kappa) {
        out.trap.spring_constant = *kappa;
        out.trap.mass = *kappa / (*omega * *omega);
    } else {
        out.trap.mass = *mass;
        out.trap.spring_constant = *mass * *omega * *omega;
    }
    out.trap.validate();
    return out;
}

namespace {

struct BeamTerms {
    double sign;
    double background;  // N
    double peak;        // N
    double detuning;
    double wavenumber;
    double delta2;
    double photon_rate;  // Pp / (hbar omega)
    double recoil2;      // (hbar k)^2

    double lineshape(double v) const {
        const double d = detuning - sign * wavenumber * v;
        return delta2 / (d * d + delta2);
    }
    // Force along +x.
    double force(double v) const { return sign * (background + peak * lineshape(v)); }
    double diffusion(double v) const { return recoil2 * photon_rate * lineshape(v); }
};

double bath_temperature(const SimConfig& c) {
    return c.gas ? c.gas->temperature : constants::room_temperature;
}

double gas_gamma(const SimConfig& c) {
    if (c.gas_damping) {
        return *c.gas_damping;
    }
    if (c.gas) {
        return gas_drag(*c.gas, c.sphere_radius).gamma;
    }
    return 0.0;
}

double optical_gamma(const SimConfig& c) {
    double sum = 0.0;
    for (const auto& b : c.beams) {
        sum += single_beam_beta(b.params).beta;
    }
    return sum;
}

}  // namespace

void validate(const SimConfig& c) {
    c.trap.validate();
    if (!(c.duration > 0.0) || !std::isfinite(c.duration)) {
        throw DomainError("simulate: duration must be positive");
    }
    if (!(c.timestep > 0.0) || !std::isfinite(c.timestep)) {
        throw DomainError("simulate: timestep must be positive");
    }
    if (c.record_stride < 1) {
        throw DomainError("simulate: record stride must be >= 1");
    }
    if (c.beams.size() > 2) {
        throw DomainError("simulate: at most two cooling beams");
    }
    for (const auto& b : c.beams) {
        b.params.validate();
        if (b.sign != 1 && b.sign != -1) {
            throw DomainError("simulate: beam sign must be +1 or -1");
        }
    }
    if (c.beams.size() == 2 && c.beams[0].sign == c.beams[1].sign) {
        throw DomainError("simulate: two beams must counter-propagate");
    }
    if (c.gas) {
        c.gas->validate();
        if (!c.gas_damping && !(c.sphere_radius > 0.0)) {
            throw DomainError("simulate: gas drag needs the sphere radius");
        }
    }
    if (c.gas_damping && !(*c.gas_damping >= 0.0)) {
        throw DomainError("simulate: gas damping must be non-negative");
    }
    if (!std::isfinite(c.x_initial) || !std::isfinite(c.v_initial)) {
        throw DomainError("simulate: non-finite initial state");
    }
    const double bound = max_stable_timestep(c);
    if (c.timestep > bound) {
        std::ostringstream msg;
        msg << "simulate: timestep " << c.timestep
            << " s violates the stability bound min(2 pi/omega0, m/Gamma_total)/50 = " << bound
            << " s";
        throw DomainError(msg.str());
    }
}

std::string describe(const SimConfig& c) {
    std::ostringstream s;
    s << "trap=" << to_string(c.trap.kind) << ',' << format_double(c.trap.spring_constant) << ','
      << format_double(c.trap.mass);
    if (c.gas) {
        s << ";gas=" << format_double(c.gas->pressure) << ',' << format_double(c.gas->temperature)
          << ',' << format_double(c.gas->viscosity) << ',' << format_double(c.gas->molar_mass)
          << ',' << format_double(c.gas->molecule_diameter);
    }
    s << ";radius=" << format_double(c.sphere_radius);
    if (c.gas_damping) {
        s << ";gas_damping=" << format_double(*c.gas_damping);
    }
    s << ";thermal_noise=" << c.thermal_noise;
    for (const auto& b : c.beams) {
        const auto& p = b.params;
        s << ";beam=" << b.sign << ',' << format_double(p.p_background) << ','
          << format_double(p.p_peak) << ',' << format_double(p.delta) << ','
          << format_double(p.detuning) << ',' << format_double(p.wavenumber) << ','
          << format_double(p.omega);
    }
    s << ";recoil_noise=" << c.recoil_noise << ";duration=" << format_double(c.duration)
      << ";timestep=" << format_double(c.timestep) << ";seed=" << c.seed
      << ";trajectory=" << c.trajectory_index << ";stride=" << c.record_stride
      << ";x0=" << format_double(c.x_initial) << ";v0=" << format_double(c.v_initial);
    return s.str();
}

std::uint64_t config_digest(const SimConfig& c) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : describe(c)) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

double max_stable_timestep(const SimConfig& c) {
    const double period = constants::two_pi / c.trap.omega0();
    const double gamma = gas_gamma(c) + std::abs(optical_gamma(c));
    double bound = period;
    if (gamma > 0.0) {
        bound = std::min(bound, c.trap.mass / gamma);
    }
    return bound / 50.0;
}

Trajectory simulate(const SimConfig& c) {
    validate(c);

    const double m = c.trap.mass;
    const double kappa = c.trap.spring_constant;
    const double dt = c.timestep;
    const double half = 0.5 * dt;

    std::vector<BeamTerms> beams;
    for (const auto& b : c.beams) {
        const auto& p = b.params;
        const double hk = constants::hbar * p.wavenumber;
        beams.push_back({static_cast<double>(b.sign), p.p_background / constants::speed_of_light,
                         p.p_peak / constants::speed_of_light, p.detuning, p.wavenumber,
                         p.delta * p.delta, p.p_peak / (constants::hbar * p.omega), hk * hk});
    }

    auto accel = [&](double x, double v) {
        double f = -kappa * x;
        for (const auto& b : beams) {
            f += b.force(v);
        }
        return f / m;
    };

    // Exact OU factors for the linear gas drag.
    const double gamma_gas = gas_gamma(c);
    const double decay = std::exp(-gamma_gas * dt / m);
    const double thermal_sigma =
        c.thermal_noise
            ? std::sqrt(constants::boltzmann * bath_temperature(c) / m * (1.0 - decay * decay))
            : 0.0;
    const bool recoil = c.recoil_noise && !beams.empty();

    Trajectory traj;
    auto& meta = traj.meta;
    meta.seed = c.seed;
    meta.trajectory_index = c.trajectory_index;
    meta.timestep = dt;
    meta.record_stride = c.record_stride;
    meta.config_digest = config_digest(c);
    meta.mass = m;
    meta.spring_constant = kappa;
    meta.omega0 = c.trap.omega0();
    meta.gas_damping = gamma_gas;
    meta.optical_damping = optical_gamma(c);
    double f_const = 0.0;
    for (const auto& b : beams) {
        f_const += b.force(0.0);
    }
    meta.x_equilibrium = f_const / kappa;
    for (const auto& b : c.beams) {
        meta.sideband_resolved = meta.sideband_resolved || b.params.delta < meta.omega0;
    }

    const auto steps = static_cast<std::uint64_t>(std::llround(c.duration / dt));
    const std::size_t records = static_cast<std::size_t>(steps / c.record_stride) + 1;
    traj.times.reserve(records);
    traj.positions.reserve(records);
    traj.velocities.reserve(records);

    const Philox4x32 rng(c.seed);
    double x = meta.x_equilibrium + c.x_initial;
    double v = c.v_initial;
    traj.times.push_back(0.0);
    traj.positions.push_back(x);
    traj.velocities.push_back(v);

    for (std::uint64_t step = 0; step < steps; ++step) {
        v += half * accel(x, v);
        x += half * v;

        v *= decay;
        if (thermal_sigma > 0.0 || recoil) {
            const auto [g1, g2] = gaussian_pair(rng(c.trajectory_index, step));
            v += thermal_sigma * g1;
            if (recoil) {
                double diffusion = 0.0;
                for (const auto& b : beams) {
                    diffusion += b.diffusion(v);
                }
                v += std::sqrt(diffusion * dt) / m * g2;
            }
        }

        x += half * v;
        v += half * accel(x, v);

        if ((step + 1) % static_cast<std::uint64_t>(c.record_stride) == 0) {
            traj.times.push_back(static_cast<double>(step + 1) * dt);
            traj.positions.push_back(x);
            traj.velocities.push_back(v);
        }
    }
    if (!std::isfinite(x) || !std::isfinite(v)) {
        throw DomainError("simulate: state became non-finite");
    }
    return traj;
}

namespace {

std::pair<std::size_t, std::size_t> window(const Trajectory& traj, double t_begin, double t_end) {
    if (traj.times.empty()) {
        throw DomainError("trajectory is empty");
    }
    if (!(t_end > t_begin) || t_begin < traj.times.front() || t_end > traj.times.back()) {
        throw DomainError("temperature window must lie inside the trajectory");
    }
    const double minimum = 100.0 * constants::two_pi / traj.meta.omega0;
    if (t_end - t_begin < minimum) {
        std::ostringstream msg;
        msg << "temperature window of " << t_end - t_begin << " s is too short: need at least "
            << minimum << " s (100 trap periods)";
        throw DomainError(msg.str());
    }
    std::size_t lo = 0;
    while (lo < traj.times.size() && traj.times[lo] < t_begin) {
        ++lo;
    }
    std::size_t hi = lo;
    while (hi < traj.times.size() && traj.times[hi] <= t_end) {
        ++hi;
    }
    return {lo, hi};
}

}  // namespace

double estimate_temperature(const Trajectory& traj, double t_begin, double t_end) {
    const auto [lo, hi] = window(traj, t_begin, t_end);
    double sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        sum += traj.velocities[i] * traj.velocities[i];
    }
    return traj.meta.mass * sum / static_cast<double>(hi - lo) / constants::boltzmann;
}

double estimate_temperature(const Trajectory& traj) {
    if (traj.times.empty()) {
        throw DomainError("trajectory is empty");
    }
    return estimate_temperature(traj, traj.times.front(), traj.times.back());
}

double estimate_position_temperature(const Trajectory& traj, double t_begin, double t_end) {
    const auto [lo, hi] = window(traj, t_begin, t_end);
    double sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double d = traj.positions[i] - traj.meta.x_equilibrium;
        sum += d * d;
    }
    return traj.meta.spring_constant * sum / static_cast<double>(hi - lo) / constants::boltzmann;
}

double fit_energy_decay(const Trajectory& traj) {
    const std::size_t n = traj.times.size();
    if (n < 3) {
        throw DomainError("fit_energy_decay: need at least 3 samples");
    }
    const double m = traj.meta.mass;
    const double kappa = traj.meta.spring_constant;
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = traj.positions[i] - traj.meta.x_equilibrium;
        const double v = traj.velocities[i];
        const double energy = 0.5 * m * v * v + 0.5 * kappa * dx * dx;
        if (!(energy > 0.0)) {
            throw DomainError("fit_energy_decay: energy reached zero, cannot take the logarithm");
        }
        const double t = traj.times[i];
        const double y = std::log(energy);
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    const double dn = static_cast<double>(n);
    const double slope = (dn * sty - st * sy) / (dn * stt - st * st);
    if (!(slope < 0.0)) {
        throw DomainError("fit_energy_decay: energy does not decay");
    }
    return -slope;
}

double oscillation_frequency(const Trajectory& traj) {
    std::vector<double> crossings;
    const double eq = traj.meta.x_equilibrium;
    for (std::size_t i = 1; i < traj.times.size(); ++i) {
        const double a = traj.positions[i - 1] - eq;
        const double b = traj.positions[i] - eq;
        if (a < 0.0 && b >= 0.0) {
            const double frac = -a / (b - a);
            crossings.push_back(traj.times[i - 1] + frac * (traj.times[i] - traj.times[i - 1]));
        }
    }
    if (crossings.size() < 2) {
        throw NotFoundError("oscillation_frequency: fewer than two upward zero crossings");
    }
    return static_cast<double>(crossings.size() - 1) / (crossings.back() - crossings.front());
}

}  // namespace wgmcool
