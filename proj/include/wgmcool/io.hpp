#ifndef WGMCOOL_IO_HPP
#define WGMCOOL_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wgmcool/config.hpp"
#include "wgmcool/dynamics.hpp"
#include "wgmcool/spectrum.hpp"
#include "wgmcool/toy_resonators.hpp"

namespace wgmcool {

// Writes to "<path>.tmp" and renames over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// CSV bodies with exact headers; numbers in shortest round-trip form.
std::string spectrum_csv(const std::vector<SpectrumSample>& samples);    // x,q_ext,q_rad,force_N
std::string trajectory_csv(const Trajectory& traj);                       // t_s,x_m,v_m_per_s
std::string sweep_csv(const std::vector<SweepSample>& samples);          // phase_rad,force_N

// Plain-text report: header, the resolved [config], then [results].
class Report {
public:
    Report(std::string command, std::string tool_version, const RunConfig& config);

    void add(const std::string& key, double value, const std::string& unit = "");
    void add(const std::string& key, const std::string& value);
    void note(const std::string& text);

    std::string str() const;

private:
    std::string command_;
    std::string version_;
    RunConfig config_;
    std::vector<std::string> results_;
    std::vector<std::string> notes_;
};

}  // namespace wgmcool

#endif
