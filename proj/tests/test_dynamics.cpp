#include "doctest.h"

#include <cmath>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "wgmcool/constants.hpp"
#include "wgmcool/doppler.hpp"
#include "wgmcool/dynamics.hpp"
#include "wgmcool/ensemble.hpp"
#include "wgmcool/errors.hpp"
#include "wgmcool/gas.hpp"
#include "wgmcool/io.hpp"

using namespace wgmcool;
namespace k = wgmcool::constants;

namespace {

constexpr double mass = 4e-12;
constexpr double spring = 5e-5;

SimConfig trapped() {
    SimConfig c;
    c.trap = {TrapKind::optical_trap, spring, mass};
    c.seed = 42;
    return c;
}

double period(const SimConfig& c) { return k::two_pi / c.trap.omega0(); }

CoolingParams red_beam(double hwhm_hz = 32e6) {
    const double d = k::two_pi * hwhm_hz;
    return CoolingParams::from_wavelength(0.34, 0.1, d, -d, 773e-9);
}

double energy(const Trajectory& t, std::size_t i) {
    const double dx = t.positions[i] - t.meta.x_equilibrium;
    return 0.5 * t.meta.mass * t.velocities[i] * t.velocities[i] +
           0.5 * t.meta.spring_constant * dx * dx;
}

// Mean energy over [t0, t1).
double mean_energy(const Trajectory& t, double t0, double t1) {
    double sum = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < t.times.size(); ++i) {
        if (t.times[i] >= t0 && t.times[i] < t1) {
            sum += energy(t, i);
            ++n;
        }
    }
    return sum / n;
}

bool identical(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("trap construction from any two parameters") {
    const double w = std::sqrt(spring / mass);
    const auto a = resolve_trap(TrapKind::optical_trap, spring, std::nullopt, mass);
    CHECK(a.trap.omega0() == doctest::Approx(w).epsilon(1e-15));
    CHECK(a.warnings.empty());
    const auto b = resolve_trap(TrapKind::optical_trap, spring, w, std::nullopt);
    CHECK(b.trap.mass == doctest::Approx(mass).epsilon(1e-12));
    const auto c = resolve_trap(TrapKind::optical_trap, std::nullopt, w, mass);
    CHECK(c.trap.spring_constant == doctest::Approx(spring).epsilon(1e-12));
    CHECK(std::abs(c.trap.omega0() * c.trap.omega0() * c.trap.mass / c.trap.spring_constant - 1.0) <
          1e-12);
    // 5e-5 N/m, 4e-12 kg and 740 Hz do not fit together: 563 Hz wins, with a warning.
    const auto over = resolve_trap(TrapKind::optical_trap, spring, k::two_pi * 740.0, mass);
    CHECK(over.trap.omega0() / k::two_pi == doctest::Approx(562.7).epsilon(1e-3));
    CHECK(over.warnings.size() == 1);
    CHECK_THROWS_AS(resolve_trap(TrapKind::optical_trap, spring, std::nullopt, std::nullopt),
                    UsageError);
    CHECK(parse_trap_kind("cantilever") == TrapKind::cantilever);
    CHECK(to_string(TrapKind::optical_trap) == "optical_trap");
}

TEST_CASE("conservative limit keeps its energy") {
    auto c = trapped();
    c.x_initial = 1e-9;
    c.duration = 1e4 * period(c);
    c.timestep = period(c) / 100.0;
    c.record_stride = 10;
    const auto t = simulate(c);
    // Velocity Verlet runs fast by (omega dt)^2/24 = 1.6e-4 at 100 steps per period.
    CHECK(oscillation_frequency(t) == doctest::Approx(c.trap.omega0() / k::two_pi).epsilon(1e-3));
    // Secular drift: mean energy over the first and last 100 periods.
    const double first = mean_energy(t, 0.0, 100 * period(c));
    const double last = mean_energy(t, t.times.back() - 100 * period(c), t.times.back());
    CHECK(std::abs(last / first - 1.0) < 1e-6);
    CHECK(first == doctest::Approx(0.5 * spring * 1e-18).epsilon(1e-3));
}

TEST_CASE("cantilever oscillates at 0.99 MHz") {
    SimConfig c;
    c.trap = {TrapKind::cantilever, 77.0, 2e-12};
    c.duration = 200 * period(c);
    c.timestep = period(c) / 100.0;
    c.x_initial = 1e-10;
    const auto t = simulate(c);
    const double f = oscillation_frequency(t);
    CHECK(f == doctest::Approx(0.99e6).epsilon(0.01));
    CHECK(f == doctest::Approx(std::sqrt(77.0 / 2e-12) / k::two_pi).epsilon(1e-3));
}

TEST_CASE("gas-only equipartition at 288 K") {
    auto c = trapped();
    c.gas = GasEnvironment{};
    c.gas->pressure = 1e4;  // near-viscous: short velocity memory
    c.sphere_radius = 10e-6;
    c.duration = 1e4 * period(c);
    c.timestep = max_stable_timestep(c) / 2.0;
    c.record_stride = 10;
    const auto runs = simulate_ensemble(c, 8);
    const double t0 = 100 * period(c);
    const double t1 = runs[0].times.back();
    const auto tv = ensemble_temperature(runs, t0, t1);
    CAPTURE(tv.mean);
    CAPTURE(tv.standard_error);
    CHECK(std::abs(tv.mean - 288.0) < 0.05 * 288.0);
    CHECK(std::abs(tv.mean - 288.0) < 3.0 * tv.standard_error);
    double tx = 0.0;
    for (const auto& r : runs) {
        tx += estimate_position_temperature(r, t0, t1) / runs.size();
    }
    CHECK(std::abs(tx - 288.0) < 0.05 * 288.0);
}

TEST_CASE("timestep halving stays within the statistical error") {
    auto c = trapped();
    c.gas = GasEnvironment{};
    c.gas->pressure = 1e4;
    c.sphere_radius = 10e-6;
    c.duration = 2000 * period(c);
    c.timestep = max_stable_timestep(c);
    c.record_stride = 4;
    const auto coarse = simulate_ensemble(c, 8);
    c.timestep /= 2.0;
    c.record_stride = 8;
    const auto fine = simulate_ensemble(c, 8);
    const double t0 = 100 * period(c);
    const double t1 = std::min(coarse[0].times.back(), fine[0].times.back());
    const auto a = ensemble_temperature(coarse, t0, t1);
    const auto b = ensemble_temperature(fine, t0, t1);
    CAPTURE(a.mean);
    CAPTURE(b.mean);
    CHECK(std::abs(a.mean - b.mean) <
          3.0 * std::sqrt(a.standard_error * a.standard_error + b.standard_error * b.standard_error));
}

TEST_CASE("molasses damps the energy at beta/m") {
    auto c = trapped();
    const auto p = red_beam();
    c.beams = {{p, +1}, {p, -1}};
    c.recoil_noise = false;
    c.v_initial = 0.1;  // |k v| = delta/250
    c.duration = 1.0;
    c.timestep = max_stable_timestep(c) / 2.0;
    c.record_stride = 20;
    const auto t = simulate(c);
    const double expected = molasses_beta(p).beta / mass;
    CHECK(t.meta.optical_damping == doctest::Approx(molasses_beta(p).beta).epsilon(1e-14));
    CHECK(t.meta.x_equilibrium == 0.0);
    CHECK(fit_energy_decay(t) == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("damped oscillator energy decays at Gamma/m") {
    // Energy of a lightly damped oscillator falls as exp(-Gamma t/m); the
    // amplitude as exp(-Gamma t/(2m)).
    auto c = trapped();
    c.gas_damping = 1e-11;
    c.thermal_noise = false;
    c.x_initial = 1e-8;
    c.duration = 2.0;
    c.timestep = max_stable_timestep(c) / 2.0;
    c.record_stride = 10;
    const auto t = simulate(c);
    CHECK(fit_energy_decay(t) == doctest::Approx(2.5).epsilon(0.05));
}

TEST_CASE("a single red beam shifts the equilibrium and damps") {
    auto c = trapped();
    const auto p = red_beam();
    c.beams = {{p, +1}};
    c.recoil_noise = false;
    c.v_initial = 0.05;
    c.duration = 2.0;
    c.timestep = max_stable_timestep(c) / 2.0;
    c.record_stride = 20;
    const auto t = simulate(c);
    CHECK(t.meta.x_equilibrium == doctest::Approx(lorentzian_force(p, 0.0, +1) / spring));
    CHECK(t.positions.front() == t.meta.x_equilibrium);
    CHECK(fit_energy_decay(t) == doctest::Approx(single_beam_beta(p).beta / mass).epsilon(0.05));
    CHECK_FALSE(t.meta.sideband_resolved);
}

TEST_CASE("recoil heating against optical damping approaches the Doppler limit") {
    // Lighter sphere in a softer trap: same trap frequency, faster relaxation.
    SimConfig c;
    c.trap = {TrapKind::optical_trap, spring / 10.0, mass / 10.0};
    c.seed = 5;
    const auto p = red_beam();
    c.beams = {{p, +1}, {p, -1}};
    c.duration = 20.0;
    c.timestep = max_stable_timestep(c) / 2.0;
    c.record_stride = 10;
    const auto runs = simulate_ensemble(c, 4);
    const auto tv = ensemble_temperature(runs, 5.0, runs[0].times.back());
    const double limit = doppler_limit(p.delta, p.detuning);
    CAPTURE(tv.mean);
    CAPTURE(limit);
    CHECK(tv.mean > limit / 2.0);
    CHECK(tv.mean < limit * 2.0);
}

TEST_CASE("sideband flag") {
    auto c = trapped();
    c.beams = {{red_beam(100.0), +1}};
    c.duration = 0.01;
    c.timestep = max_stable_timestep(c);
    CHECK(simulate(c).meta.sideband_resolved);
}

TEST_CASE("identical seeds give bit-identical trajectories") {
    auto c = trapped();
    c.gas = GasEnvironment{};
    c.gas->pressure = 2.0;
    c.sphere_radius = 10e-6;
    c.beams = {{red_beam(), +1}};
    c.duration = 0.5;
    c.timestep = max_stable_timestep(c) / 2.0;
    c.record_stride = 7;
    const auto a = simulate(c);
    const auto b = simulate(c);
    CHECK(identical(a.times, b.times));
    CHECK(identical(a.positions, b.positions));
    CHECK(identical(a.velocities, b.velocities));
    CHECK(trajectory_csv(a) == trajectory_csv(b));
    CHECK(a.meta.config_digest == config_digest(c));

    auto other = c;
    other.seed = 43;
    const auto d = simulate(other);
    CHECK_FALSE(identical(a.velocities, d.velocities));
    CHECK(config_digest(other) != config_digest(c));
    other = c;
    other.trajectory_index = 1;
    CHECK_FALSE(identical(a.velocities, simulate(other).velocities));
}

TEST_CASE("parallel ensemble equals the serial reference") {
    auto c = trapped();
    c.gas = GasEnvironment{};
    c.gas->pressure = 100.0;
    c.sphere_radius = 10e-6;
    c.duration = 0.05;
    c.timestep = max_stable_timestep(c) / 2.0;
    const auto par = simulate_ensemble(c, 6);
    const auto ser = simulate_ensemble_serial(c, 6);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].meta.trajectory_index == i);
        CHECK(identical(par[i].positions, ser[i].positions));
        CHECK(identical(par[i].velocities, ser[i].velocities));
        CHECK(identical(par[i].velocities, [&] {
            auto one = c;
            one.trajectory_index = i;
            return simulate(one).velocities;
        }()));
    }
}

TEST_CASE("trajectory layout") {
    auto c = trapped();
    c.x_initial = 1e-9;
    c.duration = 1e-2;
    c.timestep = 1e-5;
    c.record_stride = 10;
    const auto t = simulate(c);
    CHECK(t.times.size() == 101);
    CHECK(t.times[0] == 0.0);
    for (std::size_t i = 1; i < t.times.size(); ++i) {
        CHECK(t.times[i] - t.times[i - 1] == doctest::Approx(1e-4).epsilon(1e-9));
    }
    CHECK(t.meta.seed == c.seed);
    CHECK(t.meta.timestep == c.timestep);
    CHECK(trajectory_csv(t).rfind("t_s,x_m,v_m_per_s\n", 0) == 0);
}

TEST_CASE("configuration errors") {
    auto c = trapped();
    c.duration = 1.0;
    c.timestep = period(c);  // far beyond the bound
    try {
        validate(c);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("stability bound") != std::string::npos);
    }
    c.timestep = max_stable_timestep(c);
    CHECK_NOTHROW(validate(c));
    CHECK(max_stable_timestep(c) == doctest::Approx(period(c) / 50.0));
    c.duration = 0.0;
    CHECK_THROWS_AS(validate(c), DomainError);
    c.duration = 1.0;
    c.beams = {{red_beam(), +1}, {red_beam(), +1}};
    CHECK_THROWS_AS(validate(c), DomainError);
    c.beams.clear();
    c.gas = GasEnvironment{};
    c.gas->pressure = 1.0;
    CHECK_THROWS_AS(validate(c), DomainError);  // no radius for the drag model
    c.gas_damping = 1e-3;  // m/Gamma tightens the bound
    CHECK(max_stable_timestep(c) == doctest::Approx(mass / 1e-3 / 50.0));
}

TEST_CASE("temperature estimator") {
    Trajectory t;
    t.meta.mass = mass;
    t.meta.spring_constant = spring;
    t.meta.omega0 = std::sqrt(spring / mass);
    const double dt = 1e-4;
    const std::size_t n = 40000;  // 4 s, 2250 periods
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g(0.0, std::sqrt(k::boltzmann * 300.0 / mass));
    for (std::size_t i = 0; i < n; ++i) {
        t.times.push_back(i * dt);
        t.positions.push_back(0.0);
        t.velocities.push_back(g(rng));
    }
    const double sigma = 300.0 * std::sqrt(2.0 / n);
    CHECK(std::abs(estimate_temperature(t) - 300.0) < 3.0 * sigma);
    std::fill(t.velocities.begin(), t.velocities.end(), 0.0);
    CHECK(estimate_temperature(t) == 0.0);
    try {
        estimate_temperature(t, 0.0, 0.05);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("100 trap periods") != std::string::npos);
    }
    CHECK_THROWS_AS(estimate_temperature(t, 0.0, 10.0), DomainError);
}

TEST_CASE("energy decay fit") {
    Trajectory t;
    t.meta.mass = mass;
    t.meta.spring_constant = spring;
    const double w = std::sqrt(spring / mass);
    const double rate = 3.7;
    for (int i = 0; i <= 5000; ++i) {
        const double s = i * 2e-4;
        const double env = 1e-8 * std::exp(-0.5 * rate * s);
        t.times.push_back(s);
        t.positions.push_back(env * std::cos(w * s));
        t.velocities.push_back(-env * w * std::sin(w * s));
    }
    CHECK(fit_energy_decay(t) == doctest::Approx(rate).epsilon(1e-4));

    Trajectory flat = t;
    for (std::size_t i = 0; i < flat.times.size(); ++i) {
        flat.positions[i] = 1e-8 * std::cos(w * flat.times[i]);
        flat.velocities[i] = -1e-8 * w * std::sin(w * flat.times[i]);
    }
    CHECK_THROWS_AS(fit_energy_decay(flat), DomainError);
}
