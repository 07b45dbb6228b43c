#include "wgmcool/wgm.hpp"

#include <cmath>
#include <sstream>

#include "wgmcool/constants.hpp"
#include "wgmcool/errors.hpp"
#include "wgmcool/lorentz_fit.hpp"
#include "wgmcool/mie.hpp"

namespace wgmcool {

std::string to_string(ModeKind kind) {
    return kind == ModeKind::electric_a ? "electric_a" : "magnetic_b";
}

ModeKind parse_mode_kind(const std::string& text) {
    if (text == "electric_a" || text == "a") {
        return ModeKind::electric_a;
    }
    if (text == "magnetic_b" || text == "b") {
        return ModeKind::magnetic_b;
    }
    throw UsageError("unknown mode kind '" + text + "' (expected electric_a or magnetic_b)");
}

std::complex<double> partial_wave(ModeKind kind, double x, double m, int n) {
    return kind == ModeKind::electric_a ? mie_a_n(x, m, n) : mie_b_n(x, m, n);
}

namespace {

constexpr double peak_tolerance = 1e-6;

void check_search(const ResonanceSearch& s) {
    if (s.n < 1 || s.l < 1) {
        throw DomainError("resonance: n and l must be >= 1");
    }
    if (!(s.x_lo > 0.0) || !(s.x_hi > s.x_lo)) {
        throw DomainError("resonance: need 0 < x_lo < x_hi");
    }
    if (!(s.refractive_index > 0.0)) {
        throw DomainError("resonance: refractive index must be positive");
    }
    if (!(s.grid_step > 0.0)) {
        throw DomainError("resonance: grid step must be positive");
    }
}

// Bisection on the sign of Im c_n down to adjacent doubles.
double refine_root(ModeKind kind, double m, int n, double lo, double hi) {
    double f_lo = partial_wave(kind, lo, m, n).imag();
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double f_mid = partial_wave(kind, mid, m, n).imag();
        if (f_mid == 0.0) {
            return mid;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> scan_for_resonances(const ResonanceSearch& s, double step) {
    std::vector<double> roots;
    const auto count = static_cast<std::size_t>(std::ceil((s.x_hi - s.x_lo) / step));
    double x_prev = s.x_lo;
    double f_prev = partial_wave(s.kind, x_prev, s.refractive_index, s.n).imag();
    for (std::size_t i = 1; i <= count; ++i) {
        const double x = std::min(s.x_lo + static_cast<double>(i) * step, s.x_hi);
        const double f = partial_wave(s.kind, x, s.refractive_index, s.n).imag();
        if ((f > 0.0) != (f_prev > 0.0) && f != 0.0 && f_prev != 0.0) {
            const double root = refine_root(s.kind, s.refractive_index, s.n, x_prev, x);
            if (std::norm(partial_wave(s.kind, root, s.refractive_index, s.n)) > 0.5) {
                roots.push_back(root);
            }
        }
        x_prev = x;
        f_prev = f;
    }
    return roots;
}

// Distance from x0 to where |c_n|^2 drops to 1/2 in direction dir.
double half_power_distance(ModeKind kind, double m, int n, double x0, double dir) {
    auto excess = [&](double d) { return std::norm(partial_wave(kind, x0 + dir * d, m, n)) - 0.5; };
    double lo = 0.0;
    double hi = 1e-9;
    while (excess(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 10.0) {
            throw NotFoundError("resonance: line has no half-power point within 10 in x");
        }
    }
    for (int i = 0; i < 100 && hi - lo > 1e-15 * x0; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> resonance_positions(const ResonanceSearch& s) {
    check_search(s);
    if (s.refractive_index == 1.0) {
        return {};
    }
    return scan_for_resonances(s, std::min(s.grid_step, (s.x_hi - s.x_lo) / 10.0));
}

ResonanceLine locate_resonance(const ResonanceSearch& s) {
    check_search(s);
    std::vector<double> roots;
    if (s.refractive_index != 1.0) {
        double step = std::min(s.grid_step, (s.x_hi - s.x_lo) / 10.0);
        for (int pass = 0; pass < 3; ++pass, step /= 10.0) {
            roots = scan_for_resonances(s, step);
            if (static_cast<int>(roots.size()) >= s.l) {
                break;
            }
        }
    }
    if (static_cast<int>(roots.size()) < s.l) {
        std::ostringstream msg;
        msg << "resonance: " << to_string(s.kind) << " n=" << s.n << " has " << roots.size()
            << " resonance(s) in [" << s.x_lo << ", " << s.x_hi << "], l=" << s.l
            << " requested; seen at x =";
        msg.precision(12);
        for (double r : roots) {
            msg << ' ' << r;
        }
        if (roots.empty()) {
            msg << " (none)";
        }
        throw NotFoundError(msg.str());
    }

    ResonanceLine line;
    line.kind = s.kind;
    line.n = s.n;
    line.l = s.l;
    line.x0 = roots[static_cast<std::size_t>(s.l - 1)];
    line.reference_power = s.reference_power;

    const double m = s.refractive_index;
    const double peak = std::norm(partial_wave(s.kind, line.x0, m, s.n));
    if (std::abs(peak - 1.0) > peak_tolerance) {
        std::ostringstream msg;
        msg << "resonance: |c_n|^2 = " << peak << " at the root, expected 1";
        throw NotFoundError(msg.str());
    }

    const double left = half_power_distance(s.kind, m, s.n, line.x0, -1.0);
    const double right = half_power_distance(s.kind, m, s.n, line.x0, +1.0);
    line.coefficient_half_width_x = 0.5 * (left + right);

    // Im c_n must change sign through the line centre.
    const double h = line.coefficient_half_width_x;
    const double im_lo = partial_wave(s.kind, line.x0 - h, m, s.n).imag();
    const double im_hi = partial_wave(s.kind, line.x0 + h, m, s.n).imag();
    if ((im_lo > 0.0) == (im_hi > 0.0)) {
        throw NotFoundError("resonance: Im c_n does not cross zero at the located maximum");
    }

    // Force lineshape over +-4 HWHM.
    constexpr int samples = 161;
    std::vector<double> xs(samples), fs(samples);
    for (int i = 0; i < samples; ++i) {
        const double x = line.x0 + h * (-4.0 + 8.0 * i / (samples - 1));
        xs[i] = x;
        fs[i] = radiation_force(s.reference_power, q_rad(mie_coefficients(x, m)));
    }
    const LorentzianFit fit = fit_lorentzian(xs, fs);
    line.fit_center_x = fit.center;
    line.half_width_x = fit.half_width;
    line.peak_force = fit.peak;
    line.offset_force = fit.offset;
    line.fit_quality = fit.r_squared;
    return line;
}

AngularLine to_angular_frequency(const ResonanceLine& line, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("to_angular_frequency: radius must be positive");
    }
    const double c = constants::speed_of_light;
    return {c * line.x0 / radius, c * line.half_width_x / radius};
}

IndexCalibration calibrate_index(ModeKind kind, int n, int l, double target_x0, double index_lo,
                                 double index_hi, double x_lo, double x_hi) {
    if (!(index_lo > 1.0) || !(index_hi > index_lo)) {
        throw DomainError("calibrate_index: need 1 < index_lo < index_hi");
    }
    auto position = [&](double m) {
        ResonanceSearch s;
        s.kind = kind;
        s.n = n;
        s.l = l;
        s.refractive_index = m;
        s.x_lo = x_lo;
        s.x_hi = x_hi;
        const std::vector<double> roots = resonance_positions(s);
        if (static_cast<int>(roots.size()) < l) {
            std::ostringstream msg;
            msg << "calibrate_index: line l=" << l << " not in [" << x_lo << ", " << x_hi
                << "] at index " << m;
            throw NotFoundError(msg.str());
        }
        return roots[static_cast<std::size_t>(l - 1)];
    };

    double lo = index_lo;
    double hi = index_hi;
    // x0 decreases with m: lo gives the upper position.
    if (!(position(lo) >= target_x0 && position(hi) <= target_x0)) {
        throw NotFoundError("calibrate_index: target position not bracketed by the index range");
    }
    IndexCalibration out;
    for (out.iterations = 0; out.iterations < 100 && hi - lo > 1e-15; ++out.iterations) {
        const double mid = 0.5 * (lo + hi);
        (position(mid) > target_x0 ? lo : hi) = mid;
    }
    out.refractive_index = 0.5 * (lo + hi);
    out.x0 = position(out.refractive_index);
    return out;
}

}  // namespace wgmcool
