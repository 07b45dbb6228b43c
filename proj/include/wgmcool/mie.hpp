#ifndef WGMCOOL_MIE_HPP
#define WGMCOOL_MIE_HPP

#include <complex>
#include <optional>
#include <vector>

namespace wgmcool {

// Homogeneous dielectric sphere. Mass follows from radius and density
// unless an explicit override is given.
struct Sphere {
    double radius = 0.0;            // m
    double refractive_index = 1.0;  // relative to the surrounding vacuum
    double density = 0.0;           // kg/m^3
    std::optional<double> mass_override;

    double mass() const;
    // Throws DomainError when a field violates its physical range.
    void validate() const;
};

// 2*pi*a/lambda
double size_parameter(double radius, double wavelength);

// Number of partial waves needed for convergence at size parameter x:
// ceil(x + 4 x^(1/3) + 2).
int wiscombe_cutoff(double x);

// Default series length: cutoff plus enough guard terms that the tail
// coefficients sit below 1e-14.
int default_series_length(double x);

struct MieSeries {
    double x = 0.0;
    double refractive_index = 1.0;
    // a[i], b[i] hold the coefficients of partial wave n = i + 1.
    std::vector<std::complex<double>> a;
    std::vector<std::complex<double>> b;
    // Set when the caller asked for fewer terms than the cutoff.
    bool truncated = false;

    int n_max() const { return static_cast<int>(a.size()); }
    const std::complex<double>& a_n(int n) const { return a[n - 1]; }
    const std::complex<double>& b_n(int n) const { return b[n - 1]; }
};

struct Efficiencies {
    double q_ext = 0.0;
    double q_rad = 0.0;
};

// External coefficients a_n, b_n for n = 1..n_max of a non-absorbing
// sphere. Log-derivative D_n(mx) by downward recurrence, Riccati-Bessel
// psi_n(x), chi_n(x) by upward recurrence.
MieSeries mie_coefficients(double x, double refractive_index, int n_max);
MieSeries mie_coefficients(double x, double refractive_index);
// Only real indices are supported; a nonzero imaginary part throws.
MieSeries mie_coefficients(double x, std::complex<double> refractive_index, int n_max);

// Single partial wave, cheaper than a full series when only one mode is
// needed (resonance search).
std::complex<double> mie_a_n(double x, double refractive_index, int n);
std::complex<double> mie_b_n(double x, double refractive_index, int n);

// Extinction efficiency (2/x^2) sum (2n+1) Re(a_n + b_n).
double q_ext(const MieSeries& series);
// Radiation-pressure efficiency Q_ext - g Q_sca.
double q_rad(const MieSeries& series);
Efficiencies efficiencies(double x, double refractive_index);

// F = (P/c) Q_rad.
double radiation_force(double power, double q_rad);

}  // namespace wgmcool

#endif
