#pragma once

#include <span>
#include <vector>

#include "qrabi/model.hpp"

// <σz(t)> starting from |+z>|0>, by BGRWA eigen-expansion and by the exact
// spectral propagator. Times are in inverse units of the energies in params.
namespace qrabi::dynamics {

struct Sample {
    double t = 0.0;
    double sigma_z = 0.0;
};

struct TimeSeries {
    Method method = Method::ED;
    std::vector<Sample> samples;
    ModelParams params;
    int truncation = 0;
    double completeness = 1.0; // sum over retained modes of |<Ψ|φ(0)>|²
    int modes = 0;             // BGRWA: number of blocks kept (plus the ground state)
    double max_norm_drift = 0.0;
};

/// |+z>|0> on truncation N. Throws TruncationTooSmall if N < 1.
StateVector initial_state(int truncation);

/// sum_n |c_{+z,n}|² - |c_{-z,n}|²
double sigma_z_expectation(const StateVector& state);

/// count samples uniformly on [0, tmax], both ends included (one sample means t = 0).
std::vector<double> uniform_grid(double tmax, int count);

/// Fock truncation large enough for the BGRWA blocks 0..n_modes-1 to be
/// represented with tail mass below 1e-10.
int bgrwa_truncation(const ModelParams& params, int n_modes);

/// Expansion over the BGRWA ground state and blocks n < n_modes.
/// Throws IncompleteBasis if the retained overlap weight is below 1 - 1e-4.
TimeSeries evolve_bgrwa(const ModelParams& params, std::span<const double> t_grid, int n_modes, int truncation);

/// e^{-iHt} = V e^{-iEt} V† from a full diagonalization at truncation N.
TimeSeries evolve_ed(const ModelParams& params, std::span<const double> t_grid, int truncation);

/// Truncation picked by exact::converge on the lowest levels, never below bgrwa_truncation().
int ed_truncation(const ModelParams& params, int n_modes);

} // namespace qrabi::dynamics
