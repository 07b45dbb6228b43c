#ifndef WGMCOOL_TOY_RESONATORS_HPP
#define WGMCOOL_TOY_RESONATORS_HPP

#include <vector>

namespace wgmcool {

// Lossless two-mirror cavity, amplitude reflectivity r per mirror and
// one-way phase kL. Resonant at kL = q*pi.
struct FabryPerotPowers {
    double reflected = 0.0;
    double transmitted = 0.0;
};
FabryPerotPowers fabry_perot_powers(double incident_power, double reflectivity, double phase);

// Force along the beam: the reflected power leaves backwards, so
// F = (P_i + P_r - P_t)/c.
double fabry_perot_force(double incident_power, double reflectivity, double phase);

// Regular n-gon of identical lossless mirrors with one input coupler.
struct RingCavity {
    int n_mirrors = 8;
    double reflectivity = 0.99;  // amplitude r, transmission t = sqrt(1 - r^2)
    double phase = 0.0;          // round-trip phase kL; resonant at 2 pi q

    void validate() const;
};

// Reflected power of one input ray,
//   P_r = P_i |r - t^2 r^(n-1) e^(-ikL) / (1 - r^n e^(-ikL))|^2.
// Light that enters the ring leaks out through the other n-1 mirrors.
double ring_reflected_power(const RingCavity& cavity, double incident_power);

// Leaked power through mirrors 1..n-1 counted downstream of the coupler.
std::vector<double> ring_leaked_powers(const RingCavity& cavity, double incident_power);

// y-force of the two mirror-symmetric side-coupled rays, taking the
// leaked light as cancelling: F = (2/c)(P_i d_in - P_r d_out).y with the
// in/out directions of the ring path at the side mirror.
double ring_force_y(const RingCavity& cavity, double incident_power_per_ray);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Momentum bookkeeping of both rays against the n-gon geometry. Each ray
// is built from its own mirror coordinates, so the x cancellation between
// them is a numerical result, not an identity.
struct RingForceBreakdown {
    Vec2 incident;   // N, +P_i d_in / c summed over the two rays
    Vec2 reflected;  // N, -P_r d_out / c
    Vec2 leaked;     // N, -sum P_leak d_leak / c
    Vec2 total;
    double power_balance = 0.0;  // (P_r + sum P_leak)/P_i, 1 when lossless
};
RingForceBreakdown ring_force_breakdown(const RingCavity& cavity, double incident_power_per_ray);

struct SweepSample {
    double phase = 0.0;
    double force = 0.0;
};

enum class ToyModel { fabry_perot, ring };

// Uniform sweep of the phase over [phase_lo, phase_hi].
std::vector<SweepSample> toy_sweep(ToyModel model, double incident_power, double reflectivity,
                                   int n_mirrors, double phase_lo, double phase_hi,
                                   int samples);

}  // namespace wgmcool

#endif
