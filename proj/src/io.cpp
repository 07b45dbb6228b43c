#include "wgmcool/io.hpp"

#include <fstream>

#include "wgmcool/errors.hpp"
#include "wgmcool/format.hpp"

namespace wgmcool {

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DomainError("cannot write '" + tmp.string() + "'");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw DomainError("short write to '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string spectrum_csv(const std::vector<SpectrumSample>& samples) {
    std::string out = "x,q_ext,q_rad,force_N\n";
    for (const auto& s : samples) {
        out += format_double(s.x) + ',' + format_double(s.q_ext) + ',' + format_double(s.q_rad) +
               ',' + format_double(s.force) + '\n';
    }
    return out;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t_s,x_m,v_m_per_s\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out += format_double(traj.times[i]) + ',' + format_double(traj.positions[i]) + ',' +
               format_double(traj.velocities[i]) + '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepSample>& samples) {
    std::string out = "phase_rad,force_N\n";
    for (const auto& s : samples) {
        out += format_double(s.phase) + ',' + format_double(s.force) + '\n';
    }
    return out;
}

Report::Report(std::string command, std::string tool_version, const RunConfig& config)
    : command_(std::move(command)), version_(std::move(tool_version)), config_(config) {}

void Report::add(const std::string& key, double value, const std::string& unit) {
    results_.push_back(key + " = " + format_double(value) + (unit.empty() ? "" : " " + unit));
}

void Report::add(const std::string& key, const std::string& value) {
    results_.push_back(key + " = " + value);
}

void Report::note(const std::string& text) { notes_.push_back(text); }

std::string Report::str() const {
    std::string out = "# wgmcool " + command_ + " report\n";
    out += "tool = wgmcool " + version_ + "\n";
    out += "command = " + command_ + "\n\n[config]\n";
    out += config_.serialize();
    out += "\n[results]\n";
    for (const auto& r : results_) {
        out += r + "\n";
    }
    if (!notes_.empty()) {
        out += "\n[notes]\n";
        for (const auto& n : notes_) {
            out += "# " + n + "\n";
        }
    }
    return out;
}

}  // namespace wgmcool
