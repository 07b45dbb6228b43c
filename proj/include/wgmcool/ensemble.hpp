#ifndef WGMCOOL_ENSEMBLE_HPP
#define WGMCOOL_ENSEMBLE_HPP

#include <cstddef>
#include <vector>

#include "wgmcool/dynamics.hpp"

namespace wgmcool {

// count trajectories of base with noise streams base.trajectory_index + i.
// The OpenMP kernel distributes trajectories over threads; each stream is
// counter-based so the result is bit-identical to the serial reference.
std::vector<Trajectory> simulate_ensemble(const SimConfig& base, std::size_t count);
std::vector<Trajectory> simulate_ensemble_serial(const SimConfig& base, std::size_t count);

struct EnsembleTemperature {
    double mean = 0.0;            // K
    double standard_error = 0.0;  // K, from the spread between trajectories
    std::vector<double> per_trajectory;
};

EnsembleTemperature ensemble_temperature(const std::vector<Trajectory>& runs, double t_begin,
                                         double t_end);

}  // namespace wgmcool

#endif
