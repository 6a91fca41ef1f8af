#pragma once

#include <array>

#include "qrabi/model.hpp"

// Closed-form spectrum and eigenstates of the biased generalized
// rotating-wave approximation.
//
// Frames: the lab Hamiltonian is displaced by W = |+z><+z| D(-g/ω) +
// |-z><-z| D(+g/ω), then the qubit is rotated into the eigenbasis of
// -Δη/2 σx - ε/2 σz. In that frame only one-excitation terms survive and
// the Hamiltonian splits into a ground level |-,0> plus 2x2 blocks on
// (|+,n>, |-,n+1>), n = 0, 1, ...
namespace qrabi::bgrwa {

/// exp(-2g²/ω²) L_n(4g²/ω²) = <n|cosh(2g/ω (a†-a))|n>.
double g0_coefficient(const ModelParams& params, int n);

/// 2g/(ω(n+1)) exp(-2g²/ω²) L_n^1(4g²/ω²) = <n+1|sinh(2g/ω (a†-a))|n> / sqrt(n+1).
double f1_coefficient(const ModelParams& params, int n);

/// ε(n) = (ε² + Δ²η G0(n)) / (2 sqrt(ε² + Δ²η²)). Throws DegenerateNorm if ε = Δ = 0.
double renormalized_bias(const ModelParams& params, int n);

/// R_r(n) = Δ F1(n) / 2.
double effective_coupling(const ModelParams& params, int n);

/// Everything that does not depend on the block index.
struct Coefficients {
    double eta = 1.0;
    double y = 0.0; // sqrt(ε² + Δ²η²)
    double u = 0.0; // sqrt((1 - ε/y)/2)
    double v = 0.0; // sqrt((1 + ε/y)/2)

    static Coefficients of(const ModelParams& params);
};

using Block = std::array<std::array<double, 2>, 2>;

/// The 2x2 block on (|+,n>, |-,n+1>):
///   [ ωn - g²/ω + ε(n)          R_r(n) sqrt(n+1)          ]
///   [ R_r(n) sqrt(n+1)          ω(n+1) - g²/ω - ε(n+1)    ]
Block block(const ModelParams& params, int n);

struct EigenPair {
    double plus = 0.0;
    double minus = 0.0;
};

/// Closed-form roots of block(params, n); plus >= minus.
EigenPair eigenvalues(const ModelParams& params, int n);

/// -sqrt(ε² + Δ²η²)/2 - g²/ω.
double ground_energy(const ModelParams& params);

struct Eigenstate {
    int n = 0;
    Branch branch = Branch::Ground;
    double theta = 0.0;     // in [0, π]; NaN for the ground state
    double delta_gap = 0.0; // diagonal difference of the block; NaN for the ground state
    double coupling = 0.0;  // off-diagonal R_r sqrt(n+1); its sign enters the spinor
    double energy = 0.0;
};

Eigenstate eigenstate(const ModelParams& params, int n, Branch branch);
Eigenstate ground_state(const ModelParams& params);

/// (c1, c2) amplitudes of the state on (|+,n>, |-,n+1>) in the rotated frame.
std::array<double, 2> block_spinor(const Eigenstate& state);

/// Eigenstate expanded in the lab Fock basis {±z} ⊗ {0..N}, normalized.
/// Throws TruncationTooSmall if more than 1e-8 of a displaced Fock state
/// falls outside the truncation.
StateVector lab_frame_vector(const Eigenstate& state, const ModelParams& params, int truncation);

/// Ground entry plus (plus, minus) for n = 0..n_max.
SpectrumTable spectrum(const ModelParams& params, int n_max);

/// Smallest n_max for which spectrum(params, n_max) is guaranteed to contain
/// the k lowest levels of the full (infinite) BGRWA ladder.
int pair_count_for_levels(const ModelParams& params, int k);

} // namespace qrabi::bgrwa
