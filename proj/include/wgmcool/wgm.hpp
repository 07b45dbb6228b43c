#ifndef WGMCOOL_WGM_HPP
#define WGMCOOL_WGM_HPP

#include <complex>
#include <string>
#include <vector>

namespace wgmcool {

enum class ModeKind { electric_a, magnetic_b };

std::string to_string(ModeKind kind);
ModeKind parse_mode_kind(const std::string& text);

// Coefficient c_n (a_n or b_n) of a single partial wave.
std::complex<double> partial_wave(ModeKind kind, double x, double refractive_index, int n);

struct ResonanceSearch {
    ModeKind kind = ModeKind::electric_a;
    int n = 1;
    int l = 1;
    double refractive_index = 1.0;
    double x_lo = 0.0;
    double x_hi = 0.0;
    // Power used for the force lineshape (peak_force / offset_force).
    double reference_power = 10e-3;
    // First bracketing grid; refined tenfold (twice) when too few lines show.
    double grid_step = 1e-3;
};

struct ResonanceLine {
    ModeKind kind = ModeKind::electric_a;
    int n = 0;
    int l = 0;
    double x0 = 0.0;             // root of Im c_n with |c_n|^2 = 1
    double half_width_x = 0.0;   // HWHM of the fitted force line
    double coefficient_half_width_x = 0.0;  // HWHM of |c_n|^2
    double fit_center_x = 0.0;
    double peak_force = 0.0;     // N, resonant part above offset
    double offset_force = 0.0;   // N, non-resonant background
    double fit_quality = 0.0;    // R^2 of the Lorentzian fit
    double reference_power = 0.0;

    double q_factor() const { return x0 / (2.0 * half_width_x); }
};

struct AngularLine {
    double omega0 = 0.0;  // rad/s
    double delta = 0.0;   // rad/s, HWHM
};

// Resonance positions of partial wave n inside [x_lo, x_hi], ascending.
// Each is a sign change of Im c_n at which |c_n|^2 reaches 1;
// anti-resonances (c_n = 0) are discarded.
std::vector<double> resonance_positions(const ResonanceSearch& search);

// The l-th resonance (ascending x) of the bracket, with its force
// lineshape fitted over an 8 HWHM window. Throws NotFoundError listing
// the resonances seen when there are fewer than l.
ResonanceLine locate_resonance(const ResonanceSearch& search);

// omega = c x / a for the line centre and the HWHM.
AngularLine to_angular_frequency(const ResonanceLine& line, double radius);

struct IndexCalibration {
    double refractive_index = 0.0;
    double x0 = 0.0;
    int iterations = 0;
};

// Refractive index in [index_lo, index_hi] that places the selected line
// at target_x0. The line position falls monotonically with the index;
// solved by bisection.
IndexCalibration calibrate_index(ModeKind kind, int n, int l, double target_x0, double index_lo,
                                 double index_hi, double x_lo, double x_hi);

}  // namespace wgmcool

#endif
