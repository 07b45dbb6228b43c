#include "wgmcool/doppler.hpp"

#include <cmath>

#include "wgmcool/constants.hpp"
#include "wgmcool/errors.hpp"

namespace wgmcool {

namespace {

constexpr double c = constants::speed_of_light;

double lorentzian(double detuning, double delta) {
    const double d2 = delta * delta;
    return d2 / (detuning * detuning + d2);
}

// -2 k Pp D d^2 / (c (D^2 + d^2)^2): single-beam slope magnitude.
double single_beam_coefficient(const CoolingParams& p) {
    const double d2 = p.delta * p.delta;
    const double s = p.detuning * p.detuning + d2;
    return -2.0 * p.wavenumber * p.p_peak * p.detuning * d2 / (c * s * s);
}

void check_sign(int beam_sign) {
    if (beam_sign != 1 && beam_sign != -1) {
        throw DomainError("beam_sign must be +1 or -1");
    }
}

}  // namespace

CoolingParams CoolingParams::from_wavelength(double p_background, double p_peak, double delta,
                                             double detuning, double wavelength) {
    if (!(wavelength > 0.0)) {
        throw DomainError("cooling: wavelength must be positive");
    }
    CoolingParams p;
    p.p_background = p_background;
    p.p_peak = p_peak;
    p.delta = delta;
    p.detuning = detuning;
    p.wavenumber = constants::two_pi / wavelength;
    p.omega = c * p.wavenumber;
    return p;
}

void CoolingParams::validate() const {
    if (!std::isfinite(p_background) || !std::isfinite(p_peak) || !std::isfinite(delta) ||
        !std::isfinite(detuning) || !std::isfinite(wavenumber) || !std::isfinite(omega)) {
        throw DomainError("cooling: non-finite parameter");
    }
    if (!(delta > 0.0)) {
        throw DomainError("cooling: line half-width delta must be positive");
    }
    if (!(wavenumber > 0.0) || !(omega > 0.0)) {
        throw DomainError("cooling: wavenumber and optical frequency must be positive");
    }
    if (p_background < 0.0 || p_peak < 0.0) {
        throw DomainError("cooling: powers must be non-negative");
    }
}

double lorentzian_force(const CoolingParams& p, double v, int beam_sign) {
    p.validate();
    check_sign(beam_sign);
    const double apparent = p.detuning - beam_sign * p.wavenumber * v;
    return p.p_background / c + p.p_peak / c * lorentzian(apparent, p.delta);
}

double molasses_net_force(const CoolingParams& p, double v) {
    return lorentzian_force(p, v, +1) - lorentzian_force(p, v, -1);
}

DampingResult molasses_beta(const CoolingParams& p) {
    p.validate();
    return {2.0 * single_beam_coefficient(p), lorentzian_force(p, 0.0, +1),
            DampingRegime::molasses_two_beam};
}

DampingResult single_beam_beta(const CoolingParams& p) {
    p.validate();
    return {single_beam_coefficient(p), lorentzian_force(p, 0.0, +1), DampingRegime::single_beam};
}

double cooling_time(double mass, double beta) {
    if (!(mass > 0.0)) {
        throw DomainError("cooling_time: mass must be positive");
    }
    if (!(beta > 0.0)) {
        throw DomainError("cooling_time: beta must be positive (no damping)");
    }
    return mass / beta;
}

double scattering_rate(const CoolingParams& p, double v, int beam_sign) {
    p.validate();
    check_sign(beam_sign);
    const double apparent = p.detuning - beam_sign * p.wavenumber * v;
    return p.p_peak / (constants::hbar * p.omega) * lorentzian(apparent, p.delta);
}

double recoil_diffusion(double wavenumber, double gamma_sc) {
    if (!(gamma_sc >= 0.0)) {
        throw DomainError("recoil_diffusion: scattering rate must be non-negative");
    }
    const double hk = constants::hbar * wavenumber;
    return hk * hk * gamma_sc;
}

double doppler_limit(double delta, double detuning) {
    if (!(delta > 0.0)) {
        throw DomainError("doppler_limit: delta must be positive");
    }
    if (detuning == 0.0) {
        throw DomainError("doppler_limit: no damping on resonance, limit undefined");
    }
    return constants::hbar * (detuning * detuning + delta * delta) /
           (4.0 * constants::boltzmann * std::abs(detuning));
}

LinearizedForce linearized_force(const CoolingParams& p, double v) {
    p.validate();
    LinearizedForce out;
    out.f0 = lorentzian_force(p, 0.0, +1);
    out.velocity_term = -single_beam_coefficient(p) * v;
    out.out_of_range = std::abs(p.wavenumber * v) >= p.delta / 10.0;
    return out;
}

}  // namespace wgmcool
