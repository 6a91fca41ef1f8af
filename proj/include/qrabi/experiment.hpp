#pragma once

#include <vector>

#include "qrabi/model.hpp"

// Flux-qubit spectroscopy: physical units in, transition frequencies out.
// All four frequencies are linear frequencies in GHz; only their ratios
// reach the engines.
namespace qrabi::experiment {

inline constexpr double elementary_charge = 1.602176634e-19; // C
inline constexpr double planck = 6.62607015e-34;             // J s
inline constexpr double flux_quantum = planck / (2.0 * elementary_charge); // Wb

struct FluxQubitParams {
    double g_ghz = 0.82;
    double omega_ghz = 8.13;
    double delta_ghz = 4.25;
    double ip_na = 510.0;
    std::vector<double> flux_grid; // Φ/Φ₀ values

    /// Fitted device values with a 121-point grid over Φ/Φ₀ = 0.5 ± 0.003.
    static FluxQubitParams defaults();
};

/// Throws InvalidArgument unless all frequencies and I_p are positive and the grid finite.
void validate(const FluxQubitParams& fq);

/// ε = 2 I_p Φ₀ (Φ/Φ₀ - 1/2), as a frequency ε/h in GHz.
double bias_from_flux(double ip_na, double flux_ratio);

/// Dimensionless (ω = 1) model at bias epsilon_ghz.
ModelParams to_model(const FluxQubitParams& fq, double epsilon_ghz);

/// Inverse of to_model for the energy scale: GHz values of a dimensionless model.
ModelParams to_ghz(const ModelParams& dimensionless, double omega_ghz);

/// Lowest n transitions E_k - E_g, k = 1..n, in units of the model's ω.
std::vector<double> transitions(const ModelParams& params, int n, Method method);

struct FluxRow {
    double flux_ratio = 0.5;
    double epsilon_ghz = 0.0;
    std::vector<double> transitions_ghz;
};

struct FluxScan {
    Method method = Method::BGRWA;
    std::vector<FluxRow> rows;
};

/// One row per grid point; method is BGRWA or ED.
FluxScan flux_scan(const FluxQubitParams& fq, int n_transitions, Method method, int jobs = 1);

} // namespace qrabi::experiment
