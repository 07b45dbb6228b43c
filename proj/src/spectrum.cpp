#include "wgmcool/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "wgmcool/errors.hpp"
#include "wgmcool/mie.hpp"

namespace wgmcool {

namespace {

SpectrumSample evaluate(double x, double m, double power) {
    const MieSeries s = mie_coefficients(x, m);
    SpectrumSample out;
    out.x = x;
    out.q_ext = q_ext(s);
    out.q_rad = q_rad(s);
    out.force = radiation_force(power, out.q_rad);
    return out;
}

}  // namespace

std::size_t scan_sample_count(const ScanRequest& r) {
    if (!std::isfinite(r.x_min) || !std::isfinite(r.x_max) || !std::isfinite(r.step)) {
        throw DomainError("scan: non-finite bounds");
    }
    if (!(r.x_min > 0.0) || !(r.x_max > r.x_min)) {
        throw DomainError("scan: need 0 < x_min < x_max");
    }
    if (!(r.step > 0.0)) {
        throw DomainError("scan: step must be positive");
    }
    if (!(r.refractive_index > 0.0) || !std::isfinite(r.refractive_index)) {
        throw DomainError("scan: refractive index must be positive");
    }
    if (!(r.power >= 0.0)) {
        throw DomainError("scan: power must be non-negative");
    }
    const double intervals = (r.x_max - r.x_min) / r.step;
    if (intervals + 1.0 > static_cast<double>(r.sample_budget)) {
        std::ostringstream msg;
        msg << "scan: " << intervals + 1.0 << " samples exceed the sample budget of "
            << r.sample_budget;
        throw UsageError(msg.str());
    }
    return static_cast<std::size_t>(std::floor(intervals + 1e-9)) + 1;
}

std::vector<SpectrumSample> scan_spectrum_serial(const ScanRequest& r) {
    const std::size_t count = scan_sample_count(r);
    std::vector<SpectrumSample> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = evaluate(r.x_min + static_cast<double>(i) * r.step, r.refractive_index, r.power);
    }
    return out;
}

std::vector<SpectrumSample> scan_spectrum(const ScanRequest& r) {
    const std::size_t count = scan_sample_count(r);
    std::vector<SpectrumSample> out(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = evaluate(r.x_min + static_cast<double>(i) * r.step, r.refractive_index, r.power);
    }
    return out;
}

}  // namespace wgmcool
