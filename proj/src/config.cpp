#include "wgmcool/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wgmcool/errors.hpp"
#include "wgmcool/format.hpp"

namespace wgmcool {

const std::vector<KeySpec>& known_keys() {
    using T = ValueType;
    static const std::vector<KeySpec> keys = {
        {"sphere.radius_m", T::positive, "sphere radius", {}},
        {"sphere.index", T::positive, "relative refractive index (real)", {}},
        {"sphere.density_kg_m3", T::non_negative, "mass density", {}},
        {"sphere.mass_kg", T::positive, "mass override", {}},

        {"beam.power_w", T::non_negative, "incident power for spectra and line forces", {}},
        {"beam.wavelength_m", T::positive, "vacuum wavelength", {}},
        {"beam.p_background_w", T::non_negative, "non-resonant power equivalent P0", {}},
        {"beam.p_peak_w", T::non_negative, "resonant peak power equivalent Pp", {}},
        {"beam.hwhm_hz", T::positive, "line half-width at half-maximum, Hz", {}},
        {"beam.detuning_hz", T::real, "laser minus line frequency, Hz (red < 0)", {}},
        {"beam.detuning_delta", T::real, "detuning in units of the half-width", {}},
        {"beam.count", T::count, "number of cooling beams (0, 1 or 2)", {}},

        {"trap.kind", T::text, "trap type", {"optical_trap", "cantilever"}},
        {"trap.spring_n_m", T::positive, "spring constant", {}},
        {"trap.frequency_hz", T::positive, "trap frequency", {}},
        {"trap.mass_kg", T::positive, "effective mass (defaults to the sphere mass)", {}},

        {"gas.enabled", T::boolean, "include gas drag and thermal noise", {}},
        {"gas.pressure_pa", T::non_negative, "gas pressure", {}},
        {"gas.temperature_k", T::positive, "gas temperature", {}},
        {"gas.viscosity_pa_s", T::non_negative, "dynamic viscosity", {}},
        {"gas.molar_mass_kg_mol", T::positive, "molar mass", {}},
        {"gas.molecule_diameter_m", T::positive, "molecular collision diameter", {}},
        {"gas.damping_kg_s", T::non_negative, "fixed gas damping, replaces the drag model", {}},

        {"sim.duration_s", T::positive, "simulated time", {}},
        {"sim.timestep_s", T::positive, "integration step (default: half the stability bound)", {}},
        {"sim.seed", T::count, "noise seed", {}},
        {"sim.trajectory", T::count, "noise stream index", {}},
        {"sim.record_stride", T::count, "record every n-th step", {}},
        {"sim.x0_m", T::real, "initial displacement from the equilibrium position", {}},
        {"sim.v0_m_s", T::real, "initial velocity", {}},
        {"sim.recoil_noise", T::boolean, "photon recoil kicks", {}},
        {"sim.thermal_noise", T::boolean, "gas Langevin force", {}},

        {"spectrum.x_min", T::positive, "first size parameter", {}},
        {"spectrum.x_max", T::positive, "last size parameter", {}},
        {"spectrum.step", T::positive, "size-parameter step", {}},
        {"spectrum.sample_budget", T::count, "maximum number of samples", {}},

        {"resonance.kind", T::text, "partial-wave kind", {"electric_a", "magnetic_b"}},
        {"resonance.n", T::count, "mode number", {}},
        {"resonance.l", T::count, "mode order", {}},
        {"resonance.x_lo", T::positive, "bracket start", {}},
        {"resonance.x_hi", T::positive, "bracket end", {}},
        {"resonance.grid_step", T::positive, "bracketing grid step", {}},

        {"toy.model", T::text, "toy resonator", {"fp", "ring"}},
        {"toy.reflectivity", T::positive, "amplitude reflectivity r", {}},
        {"toy.reflectivity2", T::positive, "power reflectivity r^2", {}},
        {"toy.mirrors", T::count, "ring mirror count", {}},
        {"toy.power_w", T::non_negative, "incident power per ray", {}},
        {"toy.phase_lo", T::real, "first phase, rad", {}},
        {"toy.phase_hi", T::real, "last phase, rad", {}},
        {"toy.samples", T::count, "sweep samples", {}},
    };
    return keys;
}

namespace {

const KeySpec& spec_for(const std::string& key) {
    for (const auto& k : known_keys()) {
        if (k.key == key) {
            return k;
        }
    }
    throw UsageError("unknown configuration key '" + key + "'");
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_double(std::string s) {
    if (!s.empty() && s.front() == '+') {
        s.erase(0, 1);
    }
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::string normalise(const KeySpec& spec, const std::string& raw) {
    const std::string value = trim(raw);
    auto bad = [&](const std::string& why) {
        return UsageError("configuration key '" + spec.key + "': " + why + " (got '" + value + "')");
    };
    switch (spec.type) {
    case ValueType::real:
    case ValueType::positive:
    case ValueType::non_negative: {
        const auto v = parse_double(value);
        if (!v || !std::isfinite(*v)) {
            throw bad("expected a finite number");
        }
        if (spec.type == ValueType::positive && !(*v > 0.0)) {
            throw bad("must be positive");
        }
        if (spec.type == ValueType::non_negative && !(*v >= 0.0)) {
            throw bad("must be non-negative");
        }
        return format_double(*v == 0.0 ? 0.0 : *v);
    }
    case ValueType::integer:
    case ValueType::count: {
        std::int64_t i = 0;
        std::uint64_t u = 0;
        const char* end = value.data() + value.size();
        if (spec.type == ValueType::count) {
            const auto res = std::from_chars(value.data(), end, u);
            if (res.ec != std::errc{} || res.ptr != end) {
                throw bad("expected a non-negative integer");
            }
            return std::to_string(u);
        }
        const auto res = std::from_chars(value.data(), end, i);
        if (res.ec != std::errc{} || res.ptr != end) {
            throw bad("expected an integer");
        }
        return std::to_string(i);
    }
    case ValueType::boolean:
        if (value == "true" || value == "1" || value == "yes" || value == "on") {
            return "true";
        }
        if (value == "false" || value == "0" || value == "no" || value == "off") {
            return "false";
        }
        throw bad("expected true or false");
    case ValueType::text:
        if (value.empty()) {
            throw bad("empty value");
        }
        if (!spec.choices.empty() &&
            std::find(spec.choices.begin(), spec.choices.end(), value) == spec.choices.end()) {
            std::string options;
            for (const auto& c : spec.choices) {
                options += (options.empty() ? "" : ", ") + c;
            }
            throw bad("expected one of " + options);
        }
        return value;
    }
    return value;
}

}  // namespace

std::vector<KeyValueLine> read_key_values(std::string_view text, std::string_view origin) {
    std::vector<KeyValueLine> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw UsageError(std::string(origin) + ":" + std::to_string(number) +
                             ": expected 'key = value'");
        }
        out.push_back({trim(body.substr(0, eq)), trim(body.substr(eq + 1)), number});
    }
    return out;
}

RunConfig RunConfig::parse(std::string_view text, std::string_view origin) {
    RunConfig cfg;
    for (const auto& kv : read_key_values(text, origin)) {
        try {
            cfg.set(kv.key, kv.value);
        } catch (const UsageError& e) {
            throw UsageError(std::string(origin) + ":" + std::to_string(kv.line) + ": " + e.what());
        }
    }
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read configuration file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

RunConfig RunConfig::from_report(std::string_view report) {
    std::istringstream in{std::string(report)};
    std::string line;
    std::string section;
    bool inside = false;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (!t.empty() && t.front() == '[') {
            inside = t == "[config]";
            continue;
        }
        if (inside) {
            section += line;
            section += '\n';
        }
    }
    return parse(section, "<report>");
}

void RunConfig::set(const std::string& key, const std::string& value) {
    values_[key] = normalise(spec_for(key), value);
}

void RunConfig::erase(const std::string& key) { values_.erase(key); }

void RunConfig::merge(const RunConfig& overrides) {
    for (const auto& [k, v] : overrides.values_) {
        values_[k] = v;
    }
}

bool RunConfig::has(const std::string& key) const { return values_.count(key) != 0; }

std::string RunConfig::text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw UsageError("missing configuration key '" + key + "'");
    }
    return it->second;
}

double RunConfig::real(const std::string& key) const { return *parse_double(text(key)); }

std::int64_t RunConfig::integer(const std::string& key) const { return std::stoll(text(key)); }

std::uint64_t RunConfig::count(const std::string& key) const { return std::stoull(text(key)); }

bool RunConfig::boolean(const std::string& key) const { return text(key) == "true"; }

std::optional<double> RunConfig::real_or(const std::string& key) const {
    if (!has(key)) {
        return std::nullopt;
    }
    return real(key);
}

double RunConfig::real_or(const std::string& key, double fallback) const {
    return has(key) ? real(key) : fallback;
}

std::int64_t RunConfig::integer_or(const std::string& key, std::int64_t fallback) const {
    return has(key) ? static_cast<std::int64_t>(std::stoll(text(key))) : fallback;
}

bool RunConfig::boolean_or(const std::string& key, bool fallback) const {
    return has(key) ? boolean(key) : fallback;
}

std::string RunConfig::text_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? text(key) : fallback;
}

void RunConfig::require(const std::vector<std::string>& required, const std::string& command) const {
    std::string missing;
    for (const auto& k : required) {
        if (!has(k)) {
            missing += (missing.empty() ? "" : ", ") + k;
        }
    }
    if (!missing.empty()) {
        throw UsageError(command + ": missing required configuration keys: " + missing);
    }
}

std::string RunConfig::serialize() const {
    std::string out;
    for (const auto& [k, v] : values_) {
        out += k + " = " + v + "\n";
    }
    return out;
}

}  // namespace wgmcool
