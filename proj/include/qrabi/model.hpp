#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qrabi/error.hpp"

namespace qrabi {

/// Physical parameters of H = -Δ/2 σx - ε/2 σz + ω a†a + g(a†+a)σz.
///
/// All four are energies in the same (arbitrary) unit. Every engine only
/// depends on the ratios to ω, and returns energies in the input unit.
struct ModelParams {
    double delta = 1.0;
    double epsilon = 0.0;
    double omega = 1.0;
    double g = 0.0;

    double g_ratio() const { return g / omega; }
    double delta_ratio() const { return delta / omega; }
    double epsilon_ratio() const { return epsilon / omega; }

    /// exp(-2 g²/ω²), the vacuum expectation of cosh(2g/ω (a†-a)).
    double eta() const { return std::exp(-2.0 * g_ratio() * g_ratio()); }

    /// Same physics with ω = 1.
    ModelParams dimensionless() const { return {delta / omega, epsilon / omega, 1.0, g / omega}; }

    bool operator==(const ModelParams&) const = default;
};

/// Returns `params` unchanged or throws NonPositiveOmega / NegativeCoupling / NonFiniteInput.
ModelParams validate(const ModelParams& params);

enum class Method { BGRWA, VVP, ED };

/// Branch label of a level. `Plus`/`Minus` are the two roots of a 2x2 block
/// attached to the block's fixed basis order, not to energy order. `Single`
/// marks a non-degenerate perturbative level with no partner state.
enum class Branch { Ground, Plus, Minus, Single };

std::string_view to_string(Method method);
std::string_view to_string(Branch branch);
Method parse_method(std::string_view name);

struct Level {
    int index = 0;
    Branch branch = Branch::Ground;
    double energy = 0.0;
    // VVP only: the mixing offset l used for this level.
    std::optional<int> mixing;
};

struct SpectrumTable {
    Method method = Method::BGRWA;
    std::vector<Level> entries;
    ModelParams params;
    std::optional<int> truncation;

    /// Entries reordered by ascending energy (stable).
    SpectrumTable sorted() const;
};

/// The k smallest energies, ascending. Throws InsufficientLevels.
std::vector<double> sorted_levels(const SpectrumTable& table, std::size_t k);

enum class Qubit { Up = 0, Down = 1 }; // σz = +1 / -1

/// Complex amplitudes over {+z, -z} ⊗ {|0>..|N>}, qubit-major.
struct StateVector {
    Eigen::VectorXcd coeffs;
    int truncation = 0;

    StateVector() = default;
    explicit StateVector(int n_max);

    static constexpr std::size_t index(Qubit q, int n, int n_max) {
        return static_cast<std::size_t>(q) * static_cast<std::size_t>(n_max + 1) + static_cast<std::size_t>(n);
    }

    std::complex<double>& at(Qubit q, int n) { return coeffs[static_cast<Eigen::Index>(index(q, n, truncation))]; }
    const std::complex<double>& at(Qubit q, int n) const {
        return coeffs[static_cast<Eigen::Index>(index(q, n, truncation))];
    }

    int dimension() const { return 2 * (truncation + 1); }
    double norm_squared() const { return coeffs.squaredNorm(); }
    void normalize();
};

} // namespace qrabi
