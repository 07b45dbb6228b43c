#include "wgmcool/ensemble.hpp"

#include <cmath>

#include "wgmcool/errors.hpp"

namespace wgmcool {

namespace {

SimConfig member(const SimConfig& base, std::size_t i) {
    SimConfig c = base;
    c.trajectory_index = base.trajectory_index + i;
    return c;
}

}  // namespace

std::vector<Trajectory> simulate_ensemble_serial(const SimConfig& base, std::size_t count) {
    validate(base);
    std::vector<Trajectory> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = simulate(member(base, i));
    }
    return out;
}

std::vector<Trajectory> simulate_ensemble(const SimConfig& base, std::size_t count) {
    validate(base);  // nothing below may throw inside the parallel region
    std::vector<Trajectory> out(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = simulate(member(base, static_cast<std::size_t>(i)));
    }
    return out;
}

EnsembleTemperature ensemble_temperature(const std::vector<Trajectory>& runs, double t_begin,
                                         double t_end) {
    if (runs.size() < 2) {
        throw DomainError("ensemble_temperature: need at least two trajectories");
    }
    EnsembleTemperature out;
    for (const auto& r : runs) {
        out.per_trajectory.push_back(estimate_temperature(r, t_begin, t_end));
    }
    const double n = static_cast<double>(runs.size());
    double sum = 0.0;
    for (double t : out.per_trajectory) {
        sum += t;
    }
    out.mean = sum / n;
    double var = 0.0;
    for (double t : out.per_trajectory) {
        var += (t - out.mean) * (t - out.mean);
    }
    out.standard_error = std::sqrt(var / (n - 1.0) / n);
    return out;
}

}  // namespace wgmcool
