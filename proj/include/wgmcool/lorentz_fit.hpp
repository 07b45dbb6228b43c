#ifndef WGMCOOL_LORENTZ_FIT_HPP
#define WGMCOOL_LORENTZ_FIT_HPP

#include <span>

namespace wgmcool {

// y(x) = offset + peak * w^2 / ((x - center)^2 + w^2), w the HWHM.
struct LorentzianFit {
    double center = 0.0;
    double half_width = 0.0;
    double peak = 0.0;
    double offset = 0.0;
    double r_squared = 0.0;  // clamped to [0, 1]
    int iterations = 0;

    double operator()(double x) const;
};

// Levenberg-Marquardt least squares on a single dominant peak (or dip).
// Requires >= 7 samples spanning >= 4 fitted half-widths. Throws
// NotFoundError for flat data, ConvergenceError (carrying the residual
// norm) when the iteration budget runs out.
LorentzianFit fit_lorentzian(std::span<const double> x, std::span<const double> y);

}  // namespace wgmcool

#endif
