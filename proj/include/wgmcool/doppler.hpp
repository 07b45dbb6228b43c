#ifndef WGMCOOL_DOPPLER_HPP
#define WGMCOOL_DOPPLER_HPP

namespace wgmcool {

// Lorentzian force model of one beam near a narrow WGM line.
// Sign convention: detuning = omega_laser - omega_0, red is negative.
struct CoolingParams {
    double p_background = 0.0;  // W, non-resonant part; force offset P0/c
    double p_peak = 0.0;        // W, resonant peak; peak force Pp/c
    double delta = 0.0;         // rad/s, HWHM of the line
    double detuning = 0.0;      // rad/s
    double wavenumber = 0.0;    // rad/m
    double omega = 0.0;         // rad/s, optical angular frequency

    // Fills wavenumber and omega from the vacuum wavelength.
    static CoolingParams from_wavelength(double p_background, double p_peak, double delta,
                                         double detuning, double wavelength);
    void validate() const;
};

enum class DampingRegime { molasses_two_beam, single_beam };

struct DampingResult {
    double beta = 0.0;       // kg/s, positive means damping (force -beta v)
    double f0_offset = 0.0;  // N, velocity-independent force of one beam
    DampingRegime regime = DampingRegime::single_beam;
};

// Force along the beam's own propagation direction. beam_sign = +1 for a
// beam travelling towards +x, -1 towards -x. A sphere moving against the
// beam sees the light blue-shifted: effective detuning = detuning - sign*k*v.
double lorentzian_force(const CoolingParams& p, double v, int beam_sign);

// Net force along +x of two counter-propagating equal beams.
double molasses_net_force(const CoolingParams& p, double v);

DampingResult molasses_beta(const CoolingParams& p);
DampingResult single_beam_beta(const CoolingParams& p);

// e^-1 velocity damping time m/beta.
double cooling_time(double mass, double beta);

// Photons per second scattered from one beam. The default beam_sign = -1
// gives the (detuning + k v) form.
double scattering_rate(const CoolingParams& p, double v, int beam_sign = -1);

// Momentum diffusion hbar^2 k^2 Gamma_sc.
double recoil_diffusion(double wavenumber, double gamma_sc);

// One-dimensional Doppler temperature hbar (D^2 + d^2) / (4 kB |D|),
// i.e. hbar*delta/(2 kB) at |detuning| = delta.
double doppler_limit(double delta, double detuning);

struct LinearizedForce {
    double f0 = 0.0;             // N
    double velocity_term = 0.0;  // N, -beta v
    bool out_of_range = false;   // |k v| >= delta/10
};

// First-order expansion of lorentzian_force(p, v, +1) about v = 0.
LinearizedForce linearized_force(const CoolingParams& p, double v);

}  // namespace wgmcool

#endif
