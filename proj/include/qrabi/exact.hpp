#pragma once

#include <Eigen/Dense>

#include "qrabi/model.hpp"

// Numerically exact diagonalization of H = -Δ/2 σx - ε/2 σz + ω a†a + g(a†+a)σz
// in the truncated basis {+z, -z} ⊗ {|0>..|N>} (qubit-major, as StateVector).
namespace qrabi::exact {

struct TruncatedHamiltonian {
    int truncation = 0;
    Eigen::MatrixXd matrix;
    ModelParams params;

    int dimension() const { return 2 * (truncation + 1); }
};

/// Throws TruncationTooSmall if truncation < 1.
TruncatedHamiltonian build_hamiltonian(const ModelParams& params, int truncation);

struct EdResult {
    Eigen::VectorXd energies; // ascending
    Eigen::MatrixXd vectors;  // column j belongs to energies[j]
    int truncation_used = 0;
    bool converged = false;   // set only by converge()
    double tail_estimate = 0.0;
};

/// Lowest n_levels eigenpairs. Throws InvalidArgument if n_levels exceeds the
/// basis size, EigensolverFailure if the QR iteration does not converge.
EdResult diagonalize(const TruncatedHamiltonian& h, int n_levels);

/// max(20, ceil(8 (g/ω)² + 10)): the polaron displacement populates ~(2g/ω)² quanta.
int starting_truncation(const ModelParams& params);

/// Doubles the truncation from starting_truncation() until the lowest
/// n_levels energies move by less than tol; returns the larger truncation's
/// result. Throws NoConvergence once the truncation would exceed 2000.
EdResult converge(const ModelParams& params, int n_levels, double tol);

SpectrumTable to_table(const EdResult& result, const ModelParams& params);

/// <ψ|H|ψ> for a state on the same truncation.
double expectation(const TruncatedHamiltonian& h, const StateVector& state);

} // namespace qrabi::exact
