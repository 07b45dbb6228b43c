#ifndef WGMCOOL_SPECTRUM_HPP
#define WGMCOOL_SPECTRUM_HPP

#include <cstddef>
#include <vector>

namespace wgmcool {

struct SpectrumSample {
    double x = 0.0;
    double q_ext = 0.0;
    double q_rad = 0.0;
    double force = 0.0;  // N, at the scan's reference power
};

struct ScanRequest {
    double x_min = 0.0;
    double x_max = 0.0;
    double step = 0.0;
    double refractive_index = 1.0;
    double power = 0.0;  // W
    std::size_t sample_budget = 20'000'000;
};

// Number of grid points x_min + i*step that fit in [x_min, x_max].
// Throws DomainError on bad bounds and UsageError past the budget.
std::size_t scan_sample_count(const ScanRequest& request);

// Uniform Q_ext/Q_rad/force spectrum. The OpenMP kernel splits the grid
// into disjoint chunks; the serial version is the reference it is tested
// against (results are bit-identical).
std::vector<SpectrumSample> scan_spectrum(const ScanRequest& request);
std::vector<SpectrumSample> scan_spectrum_serial(const ScanRequest& request);

}  // namespace wgmcool

#endif
