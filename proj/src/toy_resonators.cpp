#include "wgmcool/toy_resonators.hpp"

#include <cmath>
#include <complex>

#include "wgmcool/constants.hpp"
#include "wgmcool/errors.hpp"

namespace wgmcool {

namespace {

constexpr double c = constants::speed_of_light;

void check_reflectivity(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("reflectivity must lie in (0, 1)");
    }
}

void check_power(double p) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw DomainError("incident power must be non-negative");
    }
}

Vec2 vertex(int n, int j) {
    const double angle = constants::pi / 2.0 + constants::two_pi * j / n;
    return {std::cos(angle), std::sin(angle)};
}

Vec2 unit(Vec2 from, Vec2 to) {
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double len = std::hypot(dx, dy);
    return {dx / len, dy / len};
}

// Vertex nearest the +x axis; its mirror image about the y axis is -j.
int right_side_mirror(int n) {
    int best = 0;
    double best_x = -2.0;
    for (int j = 0; j < n; ++j) {
        const Vec2 p = vertex(n, j);
        if (p.x > best_x + 1e-12) {
            best = j;
            best_x = p.x;
        }
    }
    return best;
}

int wrap(int j, int n) { return ((j % n) + n) % n; }

// Ray coupled at mirror `input` circulating with step `dir` (+1 ccw, -1 cw).
void add_ray(const RingCavity& cav, double p_in, int input, int dir, RingForceBreakdown& acc,
             double& balance) {
    const int n = cav.n_mirrors;
    const Vec2 at = vertex(n, input);
    const Vec2 d_in = unit(at, vertex(n, wrap(input + dir, n)));
    const Vec2 d_out = unit(vertex(n, wrap(input - dir, n)), at);
    const double p_r = ring_reflected_power(cav, p_in);
    acc.incident.x += p_in * d_in.x / c;
    acc.incident.y += p_in * d_in.y / c;
    acc.reflected.x -= p_r * d_out.x / c;
    acc.reflected.y -= p_r * d_out.y / c;

    const std::vector<double> leaks = ring_leaked_powers(cav, p_in);
    double leaked = 0.0;
    for (int j = 1; j < n; ++j) {
        const int here = wrap(input + j * dir, n);
        const int before = wrap(input + (j - 1) * dir, n);
        const Vec2 d = unit(vertex(n, before), vertex(n, here));
        const double p = leaks[static_cast<std::size_t>(j - 1)];
        acc.leaked.x -= p * d.x / c;
        acc.leaked.y -= p * d.y / c;
        leaked += p;
    }
    balance += p_in > 0.0 ? (p_r + leaked) / p_in : 1.0;
}

}  // namespace

FabryPerotPowers fabry_perot_powers(double p_i, double r, double phase) {
    check_power(p_i);
    check_reflectivity(r);
    const double r2 = r * r;
    const double s = std::sin(phase);
    const double finesse_term = 4.0 * r2 * s * s;
    const double loss = (1.0 - r2) * (1.0 - r2);
    const double den = loss + finesse_term;
    return {p_i * finesse_term / den, p_i * loss / den};
}

double fabry_perot_force(double p_i, double r, double phase) {
    const FabryPerotPowers p = fabry_perot_powers(p_i, r, phase);
    return (p_i + p.reflected - p.transmitted) / c;
}

void RingCavity::validate() const {
    if (n_mirrors < 3) {
        throw DomainError("ring cavity needs at least 3 mirrors");
    }
    check_reflectivity(reflectivity);
    if (!std::isfinite(phase)) {
        throw DomainError("ring cavity phase must be finite");
    }
}

double ring_reflected_power(const RingCavity& cav, double p_i) {
    cav.validate();
    check_power(p_i);
    const double r = cav.reflectivity;
    const double t2 = 1.0 - r * r;
    const int n = cav.n_mirrors;
    const std::complex<double> z = std::polar(1.0, -cav.phase);
    const std::complex<double> amp = r - t2 * std::pow(r, n - 1) * z / (1.0 - std::pow(r, n) * z);
    return p_i * std::norm(amp);
}

std::vector<double> ring_leaked_powers(const RingCavity& cav, double p_i) {
    cav.validate();
    check_power(p_i);
    const double r = cav.reflectivity;
    const double t2 = 1.0 - r * r;
    const int n = cav.n_mirrors;
    const std::complex<double> z = std::polar(1.0, -cav.phase);
    // Circulating power just inside the coupler.
    const double circulating = p_i * t2 / std::norm(1.0 - std::pow(r, n) * z);
    std::vector<double> out;
    double remaining = circulating;
    for (int j = 1; j < n; ++j) {
        out.push_back(t2 * remaining);
        remaining *= r * r;
    }
    return out;
}

double ring_force_y(const RingCavity& cav, double p_i) {
    const double p_r = ring_reflected_power(cav, p_i);
    const int n = cav.n_mirrors;
    const int right = right_side_mirror(n);
    const Vec2 at = vertex(n, right);
    const Vec2 d_in = unit(at, vertex(n, wrap(right + 1, n)));
    const Vec2 d_out = unit(vertex(n, wrap(right - 1, n)), at);
    // The mirror-image ray contributes the same y component.
    return 2.0 * (p_i * d_in.y - p_r * d_out.y) / c;
}

RingForceBreakdown ring_force_breakdown(const RingCavity& cav, double p_i) {
    cav.validate();
    check_power(p_i);
    const int n = cav.n_mirrors;
    const int right = right_side_mirror(n);
    const int left = wrap(-right, n);
    RingForceBreakdown out;
    double balance = 0.0;
    add_ray(cav, p_i, right, +1, out, balance);
    add_ray(cav, p_i, left, -1, out, balance);
    out.total = {out.incident.x + out.reflected.x + out.leaked.x,
                 out.incident.y + out.reflected.y + out.leaked.y};
    out.power_balance = 0.5 * balance;
    return out;
}

std::vector<SweepSample> toy_sweep(ToyModel model, double p_i, double r, int n_mirrors,
                                   double phase_lo, double phase_hi, int samples) {
    if (samples < 2 || !(phase_hi > phase_lo)) {
        throw DomainError("toy_sweep: need >= 2 samples over a non-empty phase range");
    }
    std::vector<SweepSample> out(static_cast<std::size_t>(samples));
    RingCavity ring{n_mirrors, r, 0.0};
    for (int i = 0; i < samples; ++i) {
        const double phase = phase_lo + (phase_hi - phase_lo) * i / (samples - 1);
        double f = 0.0;
        if (model == ToyModel::fabry_perot) {
            f = fabry_perot_force(p_i, r, phase);
        } else {
            ring.phase = phase;
            f = ring_force_y(ring, p_i);
        }
        out[static_cast<std::size_t>(i)] = {phase, f};
    }
    return out;
}

}  // namespace wgmcool
