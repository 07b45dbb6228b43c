#include "wgmcool/mie.hpp"

#include <cmath>
#include <sstream>

#include "wgmcool/constants.hpp"
#include "wgmcool/errors.hpp"

namespace wgmcool {

namespace {

constexpr double tail_tolerance = 1e-14;

void check_inputs(double x, double m, int n_max) {
    if (!std::isfinite(x) || !std::isfinite(m)) {
        throw DomainError("mie: non-finite size parameter or refractive index");
    }
    if (x <= 0.0) {
        throw DomainError("mie: size parameter must be positive");
    }
    if (m <= 0.0) {
        throw DomainError("mie: refractive index must be positive");
    }
    if (n_max < 1) {
        throw DomainError("mie: n_max must be at least 1");
    }
}

// D_n(z) = psi_n'(z)/psi_n(z) for n = 0..n_max, downward from n_start
// seeded with zero.
std::vector<double> log_derivative(double z, int n_max, int n_start) {
    std::vector<double> d(static_cast<std::size_t>(n_start) + 1, 0.0);
    for (int n = n_start; n > 0; --n) {
        const double nz = n / z;
        d[n - 1] = nz - 1.0 / (d[n] + nz);
    }
    d.resize(static_cast<std::size_t>(n_max) + 1);
    return d;
}

int recurrence_start(double x, double m, int n_max) {
    const int top = std::max(wiscombe_cutoff(x), static_cast<int>(std::ceil(m * x)));
    return std::max(top, n_max) + 15;
}

}  // namespace

double Sphere::mass() const {
    if (mass_override) {
        return *mass_override;
    }
    return 4.0 / 3.0 * constants::pi * radius * radius * radius * density;
}

void Sphere::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("sphere: radius must be positive");
    }
    if (!(refractive_index > 0.0) || !std::isfinite(refractive_index)) {
        throw DomainError("sphere: refractive index must be positive");
    }
    if (!(mass() > 0.0) || !std::isfinite(mass())) {
        throw DomainError("sphere: mass must be positive (set density or mass)");
    }
}

double size_parameter(double radius, double wavelength) {
    if (!(radius > 0.0) || !(wavelength > 0.0)) {
        throw DomainError("size_parameter: radius and wavelength must be positive");
    }
    return constants::two_pi * radius / wavelength;
}

int wiscombe_cutoff(double x) {
    return static_cast<int>(std::ceil(x + 4.0 * std::cbrt(x) + 2.0));
}

int default_series_length(double x) { return wiscombe_cutoff(x) + 15; }

MieSeries mie_coefficients(double x, double m, int n_max) {
    check_inputs(x, m, n_max);

    MieSeries s;
    s.x = x;
    s.refractive_index = m;
    s.truncated = n_max < wiscombe_cutoff(x);
    s.a.assign(static_cast<std::size_t>(n_max), {0.0, 0.0});
    s.b.assign(static_cast<std::size_t>(n_max), {0.0, 0.0});
    if (m == 1.0) {
        return s;  // index matched: nothing scatters
    }

    const std::vector<double> d = log_derivative(m * x, n_max, recurrence_start(x, m, n_max));

    // psi_{-1}, psi_0 and chi_{-1}, chi_0; xi_n = psi_n - i chi_n.
    double psi_prev = std::cos(x);
    double psi = std::sin(x);
    double chi_prev = -std::sin(x);
    double chi = std::cos(x);

    for (int n = 1; n <= n_max; ++n) {
        const double f = (2.0 * n - 1.0) / x;
        const double psi_n = f * psi - psi_prev;
        const double chi_n = f * chi - chi_prev;
        const std::complex<double> xi_n(psi_n, -chi_n);
        const std::complex<double> xi_nm1(psi, -chi);

        const double ga = d[n] / m + n / x;
        const double gb = d[n] * m + n / x;
        s.a[n - 1] = (ga * psi_n - psi) / (ga * xi_n - xi_nm1);
        s.b[n - 1] = (gb * psi_n - psi) / (gb * xi_n - xi_nm1);

        psi_prev = psi;
        psi = psi_n;
        chi_prev = chi;
        chi = chi_n;
    }
    return s;
}

MieSeries mie_coefficients(double x, double m) {
    return mie_coefficients(x, m, default_series_length(x));
}

MieSeries mie_coefficients(double x, std::complex<double> m, int n_max) {
    if (m.imag() != 0.0) {
        std::ostringstream msg;
        msg << "mie: absorbing spheres are not supported (refractive index " << m.real()
            << (m.imag() < 0 ? " - " : " + ") << std::abs(m.imag()) << "i)";
        throw DomainError(msg.str());
    }
    return mie_coefficients(x, m.real(), n_max);
}

std::complex<double> mie_a_n(double x, double m, int n) {
    return mie_coefficients(x, m, n).a_n(n);
}

std::complex<double> mie_b_n(double x, double m, int n) {
    return mie_coefficients(x, m, n).b_n(n);
}

namespace {

void require_converged(const MieSeries& s) {
    if (s.a.empty()) {
        throw DomainError("mie: empty series");
    }
    const double last = std::max(std::abs(s.a.back()), std::abs(s.b.back()));
    if (last >= tail_tolerance) {
        std::ostringstream msg;
        msg << "mie: series not converged at n_max = " << s.n_max()
            << " (last term magnitude " << last << ")";
        throw ConvergenceError(msg.str(), last);
    }
}

}  // namespace

double q_ext(const MieSeries& s) {
    require_converged(s);
    double sum = 0.0;
    for (int n = 1; n <= s.n_max(); ++n) {
        sum += (2.0 * n + 1.0) * (s.a_n(n).real() + s.b_n(n).real());
    }
    return 2.0 / (s.x * s.x) * sum;
}

double q_rad(const MieSeries& s) {
    require_converged(s);
    double ext = 0.0;
    double asym = 0.0;
    const int n_max = s.n_max();
    for (int n = 1; n <= n_max; ++n) {
        const auto& a = s.a_n(n);
        const auto& b = s.b_n(n);
        ext += (2.0 * n + 1.0) * (a.real() + b.real());
        asym += (2.0 * n + 1.0) / (n * (n + 1.0)) * (a * std::conj(b)).real();
        if (n < n_max) {
            const auto& a1 = s.a_n(n + 1);
            const auto& b1 = s.b_n(n + 1);
            asym += n * (n + 2.0) / (n + 1.0) * (a * std::conj(a1) + b * std::conj(b1)).real();
        }
    }
    const double x2 = s.x * s.x;
    return 2.0 / x2 * ext - 4.0 / x2 * asym;
}

Efficiencies efficiencies(double x, double m) {
    const MieSeries s = mie_coefficients(x, m);
    return {q_ext(s), q_rad(s)};
}

double radiation_force(double power, double q) {
    if (!(power >= 0.0)) {
        throw DomainError("radiation_force: power must be non-negative");
    }
    return power / constants::speed_of_light * q;
}

}  // namespace wgmcool
