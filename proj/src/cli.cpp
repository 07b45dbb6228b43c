#include "wgmcool/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "wgmcool/config.hpp"
#include "wgmcool/constants.hpp"
#include "wgmcool/doppler.hpp"
#include "wgmcool/dynamics.hpp"
#include "wgmcool/embedded.hpp"
#include "wgmcool/errors.hpp"
#include "wgmcool/format.hpp"
#include "wgmcool/gas.hpp"
#include "wgmcool/io.hpp"
#include "wgmcool/lorentz_fit.hpp"
#include "wgmcool/mie.hpp"
#include "wgmcool/spectrum.hpp"
#include "wgmcool/toy_resonators.hpp"
#include "wgmcool/wgm.hpp"

namespace wgmcool::cli {

namespace {

constexpr const char* tool_version = WGMCOOL_VERSION;

struct Invocation {
    std::string preset;
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir = ".";
    bool quiet = false;
};

// A command flag that writes one configuration key.
struct Flag {
    CLI::Option* option = nullptr;
    std::string key;
    std::string value;
};

struct Artifact {
    std::string name;
    std::string content;
};

struct Outcome {
    std::string report;
    std::vector<Artifact> files;
    std::vector<std::string> warnings;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

RunConfig resolve(const Invocation& inv, const std::list<Flag>& flags) {
    RunConfig cfg;
    if (!inv.preset.empty()) {
        cfg = RunConfig::parse(preset(inv.preset), "preset " + inv.preset);
    }
    if (!inv.config_path.empty()) {
        cfg.merge(RunConfig::load(inv.config_path));
    }
    RunConfig overrides;
    for (const auto& s : inv.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw UsageError("--set expects key=value, got '" + s + "'");
        }
        overrides.set(trim(s.substr(0, eq)), s.substr(eq + 1));
    }
    for (const auto& f : flags) {
        if (f.option->count() > 0) {
            overrides.set(f.key, f.value);
        }
    }
    cfg.merge(overrides);
    return cfg;
}

// Records a default in the resolved configuration so reports are complete.
void fill(RunConfig& c, const std::string& key, const std::string& value) {
    if (!c.has(key)) {
        c.set(key, value);
    }
}

void fill(RunConfig& c, const std::string& key, double value) { fill(c, key, format_double(value)); }

int as_int(const RunConfig& c, const std::string& key) {
    const auto v = c.count(key);
    if (v > 1'000'000'000u) {
        throw UsageError("configuration key '" + key + "' is too large");
    }
    return static_cast<int>(v);
}

std::optional<double> sphere_mass(const RunConfig& c) {
    if (c.has("sphere.mass_kg")) {
        return c.real("sphere.mass_kg");
    }
    if (c.has("sphere.radius_m") && c.has("sphere.density_kg_m3")) {
        Sphere s;
        s.radius = c.real("sphere.radius_m");
        s.density = c.real("sphere.density_kg_m3");
        return s.mass();
    }
    return std::nullopt;
}

bool has_beam(const RunConfig& c) {
    return c.has("beam.wavelength_m") && c.has("beam.p_peak_w") && c.has("beam.hwhm_hz") &&
           (c.has("beam.detuning_hz") || c.has("beam.detuning_delta"));
}

CoolingParams cooling_params(const RunConfig& c, const std::string& command) {
    c.require({"beam.wavelength_m", "beam.p_peak_w", "beam.hwhm_hz"}, command);
    const bool hz = c.has("beam.detuning_hz");
    const bool rel = c.has("beam.detuning_delta");
    if (hz == rel) {
        throw UsageError(command + ": give exactly one of beam.detuning_hz, beam.detuning_delta");
    }
    const double delta = constants::two_pi * c.real("beam.hwhm_hz");
    const double detuning =
        hz ? constants::two_pi * c.real("beam.detuning_hz") : delta * c.real("beam.detuning_delta");
    auto p = CoolingParams::from_wavelength(c.real_or("beam.p_background_w", 0.0),
                                            c.real("beam.p_peak_w"), delta, detuning,
                                            c.real("beam.wavelength_m"));
    p.validate();
    return p;
}

GasEnvironment gas_environment(RunConfig& c) {
    fill(c, "gas.temperature_k", constants::room_temperature);
    fill(c, "gas.viscosity_pa_s", constants::air_viscosity);
    fill(c, "gas.molar_mass_kg_mol", constants::air_molar_mass);
    fill(c, "gas.molecule_diameter_m", constants::air_molecule_diameter);
    GasEnvironment env;
    env.pressure = c.real("gas.pressure_pa");
    env.temperature = c.real("gas.temperature_k");
    env.viscosity = c.real("gas.viscosity_pa_s");
    env.molar_mass = c.real("gas.molar_mass_kg_mol");
    env.molecule_diameter = c.real("gas.molecule_diameter_m");
    env.validate();
    return env;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Outcome cmd_spectrum(RunConfig c) {
    c.require({"spectrum.x_min", "spectrum.x_max", "spectrum.step", "sphere.index", "beam.power_w"},
              "spectrum");
    ScanRequest req;
    req.x_min = c.real("spectrum.x_min");
    req.x_max = c.real("spectrum.x_max");
    req.step = c.real("spectrum.step");
    req.refractive_index = c.real("sphere.index");
    req.power = c.real("beam.power_w");
    if (c.has("spectrum.sample_budget")) {
        req.sample_budget = c.count("spectrum.sample_budget");
    }
    const auto samples = scan_spectrum(req);

    Report rep("spectrum", tool_version, c);
    rep.add("samples", std::to_string(samples.size()));
    const auto [lo, hi] = std::minmax_element(
        samples.begin(), samples.end(),
        [](const SpectrumSample& a, const SpectrumSample& b) { return a.force < b.force; });
    rep.add("max_force", hi->force, "N");
    rep.add("x_at_max_force", hi->x);
    rep.add("min_force", lo->force, "N");
    rep.add("x_at_min_force", lo->x);
    rep.note("force_N = q_rad * P / c with P the power through the geometric cross-section");
    return {rep.str(), {{"spectrum.csv", spectrum_csv(samples)}}, {}};
}

Outcome cmd_resonance(RunConfig c) {
    c.require({"resonance.n", "resonance.l", "resonance.x_lo", "resonance.x_hi", "sphere.index"},
              "resonance");
    fill(c, "resonance.kind", "electric_a");
    fill(c, "resonance.grid_step", 1e-3);
    fill(c, "beam.power_w", 10e-3);

    ResonanceSearch s;
    s.kind = parse_mode_kind(c.text("resonance.kind"));
    s.n = as_int(c, "resonance.n");
    s.l = as_int(c, "resonance.l");
    s.refractive_index = c.real("sphere.index");
    s.x_lo = c.real("resonance.x_lo");
    s.x_hi = c.real("resonance.x_hi");
    s.grid_step = c.real("resonance.grid_step");
    s.reference_power = c.real("beam.power_w");
    const auto line = locate_resonance(s);

    Report rep("resonance", tool_version, c);
    rep.add("mode_kind", to_string(line.kind));
    rep.add("n", std::to_string(line.n));
    rep.add("l", std::to_string(line.l));
    rep.add("x0", line.x0);
    rep.add("half_width_x", line.half_width_x);
    rep.add("coefficient_half_width_x", line.coefficient_half_width_x);
    rep.add("fit_center_x", line.fit_center_x);
    rep.add("q_factor", line.q_factor());
    rep.add("peak_force", line.peak_force, "N");
    rep.add("offset_force", line.offset_force, "N");
    rep.add("fit_quality", line.fit_quality);

    std::optional<double> radius;
    if (c.has("sphere.radius_m")) {
        radius = c.real("sphere.radius_m");
        if (c.has("beam.wavelength_m")) {
            const double x = size_parameter(*radius, c.real("beam.wavelength_m"));
            if (std::abs(x - line.x0) > 1e-3 * line.x0) {
                rep.note("sphere.radius_m and beam.wavelength_m give x = " + format_double(x) +
                         ", not x0; angular values use sphere.radius_m");
            }
        }
    } else if (c.has("beam.wavelength_m")) {
        radius = line.x0 * c.real("beam.wavelength_m") / constants::two_pi;
        rep.note("radius chosen so that x0 sits at beam.wavelength_m");
    }
    if (radius) {
        const auto ang = to_angular_frequency(line, *radius);
        rep.add("binding_radius", *radius, "m");
        rep.add("omega0_rad_s", ang.omega0, "rad/s");
        rep.add("delta_rad_s", ang.delta, "rad/s");
        rep.add("delta_hz", ang.delta / constants::two_pi, "Hz");
    } else {
        rep.note("no sphere.radius_m or beam.wavelength_m: angular frequencies omitted");
    }
    return {rep.str(), {}, {}};
}

Outcome cmd_limits(RunConfig c) {
    const auto p = cooling_params(c, "limits");
    fill(c, "beam.p_background_w", 0.0);
    const auto mol = molasses_beta(p);
    const auto single = single_beam_beta(p);

    Report rep("limits", tool_version, c);
    rep.add("delta_rad_s", p.delta, "rad/s");
    rep.add("detuning_rad_s", p.detuning, "rad/s");
    rep.add("beta_molasses", mol.beta, "kg/s");
    rep.add("beta_single", single.beta, "kg/s");
    rep.add("f0_offset", single.f0_offset, "N");
    const double gamma_sc = scattering_rate(p, 0.0);
    rep.add("gamma_sc", gamma_sc, "1/s");
    rep.add("diffusion", recoil_diffusion(p.wavenumber, gamma_sc), "kg^2 m^2/s^3");
    if (p.detuning != 0.0) {
        rep.add("t_doppler", doppler_limit(p.delta, p.detuning), "K");
    } else {
        rep.note("zero detuning: no Doppler temperature");
    }
    if (const auto m = sphere_mass(c)) {
        rep.add("mass", *m, "kg");
        if (mol.beta > 0.0) {
            rep.add("tau_molasses", cooling_time(*m, mol.beta), "s");
            rep.add("tau_single", cooling_time(*m, single.beta), "s");
        } else {
            rep.note("beta <= 0: the beam heats (blue detuning); cooling times omitted");
        }
    } else {
        rep.note("no sphere mass: cooling times omitted");
    }
    rep.note("detuning = omega_laser - omega_line; negative (red) detuning damps");
    rep.note("t_doppler = hbar (detuning^2 + delta^2) / (4 kB |detuning|), hbar delta / (2 kB) "
             "at |detuning| = delta");
    rep.note("beta_single = -2 k Pp detuning delta^2 / (c (detuning^2 + delta^2)^2); "
             "beta_molasses = 2 beta_single");
    return {rep.str(), {}, {}};
}

Outcome cmd_gas(RunConfig c) {
    c.require({"sphere.radius_m", "gas.pressure_pa"}, "gas");
    const double a = c.real("sphere.radius_m");
    const auto env = gas_environment(c);
    const auto drag = gas_drag(env, a);

    Report rep("gas", tool_version, c);
    rep.add("pressure_mtorr", pascal_to_torr(env.pressure) * 1e3, "mTorr");
    rep.add("viscous_drag", drag.viscous, "kg/s");
    rep.add("epstein_drag", drag.epstein, "kg/s");
    rep.add("knudsen", drag.knudsen);
    rep.add("mean_free_path", mean_free_path(env), "m");
    rep.add("mean_thermal_speed", mean_thermal_speed(env.temperature, env.molar_mass), "m/s");
    rep.add("regime", to_string(drag.regime));
    rep.add("gamma", drag.gamma, "kg/s");
    if (has_beam(c)) {
        const double beta = single_beam_beta(cooling_params(c, "gas")).beta;
        if (beta > 0.0) {
            const double p = crossover_pressure(beta, env, a);
            rep.add("crossover_beta", beta, "kg/s");
            rep.add("crossover_pressure_pa", p, "Pa");
            rep.add("crossover_pressure_mtorr", pascal_to_torr(p) * 1e3, "mTorr");
        } else {
            rep.note("single-beam damping is not positive: no crossover pressure");
        }
    } else {
        rep.note("no complete beam.* settings: crossover pressure omitted");
    }
    rep.note("crossover: Epstein drag equal to the single-beam optical damping");
    return {rep.str(), {}, {}};
}

Outcome cmd_cool(RunConfig c) {
    c.require({"sim.duration_s", "sim.seed"}, "cool");
    fill(c, "trap.kind", "optical_trap");
    fill(c, "gas.enabled", "false");
    fill(c, "beam.count", "0");
    fill(c, "sim.trajectory", "0");
    fill(c, "sim.record_stride", "1");
    fill(c, "sim.x0_m", 0.0);
    fill(c, "sim.v0_m_s", 0.0);
    fill(c, "sim.recoil_noise", "true");
    fill(c, "sim.thermal_noise", "true");

    std::vector<std::string> warnings;
    std::optional<double> spring = c.real_or("trap.spring_n_m");
    std::optional<double> omega;
    if (c.has("trap.frequency_hz")) {
        omega = constants::two_pi * c.real("trap.frequency_hz");
    }
    std::optional<double> mass = c.real_or("trap.mass_kg");
    if (!mass) {
        mass = sphere_mass(c);
    }
    if (int(spring.has_value()) + int(omega.has_value()) + int(mass.has_value()) < 2) {
        throw UsageError("cool: the trap needs two of trap.spring_n_m, trap.frequency_hz, "
                         "trap.mass_kg (or a sphere mass)");
    }
    auto trap = resolve_trap(parse_trap_kind(c.text("trap.kind")), spring, omega, mass);
    warnings = trap.warnings;

    SimConfig sc;
    sc.trap = trap.trap;
    if (c.boolean("gas.enabled")) {
        c.require({"sphere.radius_m", "gas.pressure_pa"}, "cool");
        sc.gas = gas_environment(c);
        sc.sphere_radius = c.real("sphere.radius_m");
    }
    if (c.has("gas.damping_kg_s")) {
        sc.gas_damping = c.real("gas.damping_kg_s");
    }
    const int beams = as_int(c, "beam.count");
    if (beams > 2) {
        throw UsageError("cool: beam.count must be 0, 1 or 2");
    }
    if (beams > 0) {
        const auto p = cooling_params(c, "cool");
        sc.beams.push_back({p, +1});
        if (beams == 2) {
            sc.beams.push_back({p, -1});
        }
    }
    sc.thermal_noise = c.boolean("sim.thermal_noise");
    sc.recoil_noise = c.boolean("sim.recoil_noise");
    sc.duration = c.real("sim.duration_s");
    sc.seed = c.count("sim.seed");
    sc.trajectory_index = c.count("sim.trajectory");
    sc.record_stride = as_int(c, "sim.record_stride");
    sc.x_initial = c.real("sim.x0_m");
    sc.v_initial = c.real("sim.v0_m_s");
    fill(c, "sim.timestep_s", max_stable_timestep(sc) / 2.0);
    sc.timestep = c.real("sim.timestep_s");

    const auto traj = simulate(sc);
    const auto& meta = traj.meta;

    Report rep("cool", tool_version, c);
    rep.add("mass", meta.mass, "kg");
    rep.add("spring_constant", meta.spring_constant, "N/m");
    rep.add("omega0", meta.omega0, "rad/s");
    rep.add("trap_frequency", meta.omega0 / constants::two_pi, "Hz");
    rep.add("gas_damping", meta.gas_damping, "kg/s");
    rep.add("optical_damping", meta.optical_damping, "kg/s");
    rep.add("x_equilibrium", meta.x_equilibrium, "m");
    rep.add("sideband_resolved", meta.sideband_resolved ? "true" : "false");
    rep.add("timestep", meta.timestep, "s");
    rep.add("recorded_samples", std::to_string(traj.times.size()));
    rep.add("config_digest", hex64(meta.config_digest));

    const double t_end = traj.times.back();
    const double periods = t_end * meta.omega0 / constants::two_pi;
    if (periods / 2.0 >= 100.0) {
        const double t0 = t_end / 2.0;
        rep.add("temperature_velocity", estimate_temperature(traj, t0, t_end), "K");
        rep.add("temperature_position", estimate_position_temperature(traj, t0, t_end), "K");
        rep.note("temperatures from the second half of the run");
    } else {
        rep.note("run shorter than 200 trap periods: temperatures omitted");
    }
    const bool noise_free = (!sc.thermal_noise || meta.gas_damping == 0.0) &&
                            (!sc.recoil_noise || sc.beams.empty());
    if (noise_free) {
        try {
            rep.add("energy_decay_rate", fit_energy_decay(traj), "1/s");
            rep.add("expected_energy_decay_rate",
                    (meta.gas_damping + meta.optical_damping) / meta.mass, "1/s");
        } catch (const DomainError& e) {
            rep.note(std::string("energy decay not fitted: ") + e.what());
        }
    }
    for (const auto& w : warnings) {
        rep.note(w);
    }
    return {rep.str(), {{"cool.csv", trajectory_csv(traj)}}, warnings};
}

Outcome cmd_toy(RunConfig c) {
    c.require({"toy.model"}, "toy");
    const bool amp = c.has("toy.reflectivity");
    const bool pow = c.has("toy.reflectivity2");
    if (amp == pow) {
        throw UsageError("toy: give exactly one of toy.reflectivity, toy.reflectivity2");
    }
    const double r = amp ? c.real("toy.reflectivity") : std::sqrt(c.real("toy.reflectivity2"));
    const ToyModel model = c.text("toy.model") == "fp" ? ToyModel::fabry_perot : ToyModel::ring;
    fill(c, "toy.power_w", 1.0);
    fill(c, "toy.phase_lo", -constants::pi);
    fill(c, "toy.phase_hi", constants::pi);
    fill(c, "toy.samples", "2001");
    if (model == ToyModel::ring) {
        fill(c, "toy.mirrors", "8");
    }
    const double p = c.real("toy.power_w");
    const int mirrors = model == ToyModel::ring ? as_int(c, "toy.mirrors") : 2;
    const auto sweep = toy_sweep(model, p, r, mirrors, c.real("toy.phase_lo"),
                                 c.real("toy.phase_hi"), as_int(c, "toy.samples"));

    Report rep("toy", tool_version, c);
    rep.add("reflectivity", r);
    const double on_resonance = model == ToyModel::fabry_perot
                                    ? fabry_perot_force(p, r, 0.0)
                                    : ring_force_y(RingCavity{mirrors, r, 0.0}, p);
    rep.add("force_on_resonance", on_resonance, "N");
    const auto [lo, hi] = std::minmax_element(
        sweep.begin(), sweep.end(),
        [](const SweepSample& a, const SweepSample& b) { return a.force < b.force; });
    rep.add("max_force", hi->force, "N");
    rep.add("phase_at_max", hi->phase, "rad");
    rep.add("min_force", lo->force, "N");
    rep.add("phase_at_min", lo->phase, "rad");
    rep.add("two_p_over_c", 2.0 * p / constants::speed_of_light, "N");
    if (model == ToyModel::ring) {
        std::vector<double> xs, ys;
        for (const auto& s : sweep) {
            xs.push_back(s.phase);
            ys.push_back(s.force);
        }
        try {
            const auto fit = fit_lorentzian(xs, ys);
            rep.add("fit_center", fit.center, "rad");
            rep.add("fit_half_width", fit.half_width, "rad");
            rep.add("fit_quality", fit.r_squared);
        } catch (const std::exception& e) {
            rep.note(std::string("no Lorentzian fit: ") + e.what());
        }
        rep.note("ring phase is the round-trip phase; resonant at multiples of 2 pi");
    } else {
        rep.note("Fabry-Perot phase is the one-way phase kL; resonant at multiples of pi");
    }
    return {rep.str(), {{"toy.csv", sweep_csv(sweep)}}, {}};
}

Outcome dispatch(const std::string& command, const RunConfig& cfg) {
    if (command == "spectrum") return cmd_spectrum(cfg);
    if (command == "resonance") return cmd_resonance(cfg);
    if (command == "limits") return cmd_limits(cfg);
    if (command == "gas") return cmd_gas(cfg);
    if (command == "cool") return cmd_cool(cfg);
    if (command == "toy") return cmd_toy(cfg);
    throw UsageError("unknown command '" + command + "'");
}

std::string list_keys() {
    std::string out;
    for (const auto& k : known_keys()) {
        out += k.key + "  " + k.description;
        if (!k.choices.empty()) {
            out += " [";
            for (std::size_t i = 0; i < k.choices.size(); ++i) {
                out += (i ? "|" : "") + k.choices[i];
            }
            out += "]";
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string_view preset(const std::string& name) {
    if (name == "paper_scenario") {
        return embedded::paper_scenario;
    }
    throw UsageError("unknown preset '" + name + "' (available: paper_scenario)");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radiation-pressure forces, whispering-gallery lines and Doppler cooling of "
                 "dielectric microspheres.",
                 "wgmcool"};
    app.set_version_flag("--version", std::string("wgmcool ") + tool_version);
    app.require_subcommand(0, 1);
    bool show_keys = false;
    std::string show_preset;
    app.add_flag("--list-keys", show_keys, "Print every configuration key and exit");
    app.add_option("--show-preset", show_preset, "Print a bundled preset and exit");

    Invocation inv;
    std::list<Flag> flags;
    auto common = [&](CLI::App* sub) {
        sub->add_option("-c,--config", inv.config_path, "Configuration file (key = value)");
        sub->add_option("--preset", inv.preset, "Bundled preset applied first")
            ->check(CLI::IsMember({"paper_scenario"}));
        sub->add_option("--set", inv.sets, "Override one key: --set key=value (repeatable)")
            ->allow_extra_args(false);
        sub->add_option("-o,--out", inv.out_dir, "Output directory")->capture_default_str();
        sub->add_flag("-q,--quiet", inv.quiet, "Do not print the report");
    };
    auto flag = [&](CLI::App* sub, const std::string& name, const std::string& key,
                    const std::string& help) {
        flags.push_back({nullptr, key, {}});
        auto& f = flags.back();
        f.option = sub->add_option(name, f.value, help + " (" + key + ")");
    };

    auto* spectrum = app.add_subcommand("spectrum", "Q_ext, Q_rad and force over a size-parameter range");
    common(spectrum);
    flag(spectrum, "--x-min", "spectrum.x_min", "First size parameter");
    flag(spectrum, "--x-max", "spectrum.x_max", "Last size parameter");
    flag(spectrum, "--step", "spectrum.step", "Size-parameter step");
    flag(spectrum, "--index", "sphere.index", "Refractive index");
    flag(spectrum, "--power", "beam.power_w", "Beam power, W");

    auto* resonance = app.add_subcommand("resonance", "Locate and fit one whispering-gallery line");
    common(resonance);
    flag(resonance, "--kind", "resonance.kind", "electric_a or magnetic_b");
    flag(resonance, "--n", "resonance.n", "Mode number");
    flag(resonance, "--l", "resonance.l", "Mode order");
    flag(resonance, "--x-lo", "resonance.x_lo", "Bracket start");
    flag(resonance, "--x-hi", "resonance.x_hi", "Bracket end");
    flag(resonance, "--index", "sphere.index", "Refractive index");
    flag(resonance, "--power", "beam.power_w", "Reference power, W");
    flag(resonance, "--radius", "sphere.radius_m", "Sphere radius, m");

    auto* limits = app.add_subcommand("limits", "Damping coefficients, cooling times, Doppler limit");
    common(limits);
    flag(limits, "--p-peak", "beam.p_peak_w", "Resonant peak power, W");
    flag(limits, "--hwhm", "beam.hwhm_hz", "Line half-width, Hz");
    flag(limits, "--detuning", "beam.detuning_hz", "Detuning, Hz");
    flag(limits, "--detuning-delta", "beam.detuning_delta", "Detuning in half-widths");
    flag(limits, "--wavelength", "beam.wavelength_m", "Wavelength, m");
    flag(limits, "--mass", "sphere.mass_kg", "Sphere mass, kg");

    auto* gas = app.add_subcommand("gas", "Gas damping and the optical/gas crossover pressure");
    common(gas);
    flag(gas, "--pressure", "gas.pressure_pa", "Pressure, Pa");
    flag(gas, "--temperature", "gas.temperature_k", "Temperature, K");
    flag(gas, "--radius", "sphere.radius_m", "Sphere radius, m");

    auto* cool = app.add_subcommand("cool", "Stochastic trajectory of the trapped sphere");
    common(cool);
    flag(cool, "--duration", "sim.duration_s", "Simulated time, s");
    flag(cool, "--timestep", "sim.timestep_s", "Integration step, s");
    flag(cool, "--seed", "sim.seed", "Noise seed");
    flag(cool, "--trajectory", "sim.trajectory", "Noise stream index");
    flag(cool, "--stride", "sim.record_stride", "Record every n-th step");
    flag(cool, "--beams", "beam.count", "Cooling beams: 0, 1 or 2");
    flag(cool, "--trap", "trap.kind", "optical_trap or cantilever");
    flag(cool, "--pressure", "gas.pressure_pa", "Gas pressure, Pa");

    auto* toy = app.add_subcommand("toy", "Force sweep of a Fabry-Perot or ring toy resonator");
    common(toy);
    flag(toy, "--model", "toy.model", "fp or ring");
    flag(toy, "--reflectivity", "toy.reflectivity", "Amplitude reflectivity r");
    flag(toy, "--reflectivity2", "toy.reflectivity2", "Power reflectivity r^2");
    flag(toy, "--mirrors", "toy.mirrors", "Ring mirror count");
    flag(toy, "--power", "toy.power_w", "Incident power per ray, W");
    flag(toy, "--samples", "toy.samples", "Sweep samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? success : usage_failure;
    }

    try {
        if (show_keys) {
            out << list_keys();
            return success;
        }
        if (!show_preset.empty()) {
            out << preset(show_preset);
            return success;
        }
        const auto subs = app.get_subcommands();
        if (subs.empty()) {
            err << app.help();
            return usage_failure;
        }
        const auto result = dispatch(subs.front()->get_name(), resolve(inv, flags));
        const std::filesystem::path dir(inv.out_dir);
        std::filesystem::create_directories(dir);
        for (const auto& f : result.files) {
            write_file_atomic(dir / f.name, f.content);
        }
        write_file_atomic(dir / (subs.front()->get_name() + "_report.txt"), result.report);
        for (const auto& w : result.warnings) {
            err << "wgmcool: warning: " << w << '\n';
        }
        if (!inv.quiet) {
            out << result.report;
        }
        return success;
    } catch (const UsageError& e) {
        err << "wgmcool: usage error: " << e.what() << '\n';
        return usage_failure;
    } catch (const std::exception& e) {
        err << "wgmcool: error: " << e.what() << '\n';
        return domain_failure;
    }
}

}  // namespace wgmcool::cli
