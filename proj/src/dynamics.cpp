#include "qrabi/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qrabi/bgrwa.hpp"
#include "qrabi/exact.hpp"

namespace qrabi::dynamics {

using cplx = std::complex<double>;

StateVector initial_state(int truncation)
{
    if (truncation < 1)
        throw Error(ErrorCode::TruncationTooSmall, "Fock truncation must be >= 1");
    StateVector s(truncation);
    s.at(Qubit::Up, 0) = 1.0;
    return s;
}

double sigma_z_expectation(const StateVector& state)
{
    const auto n = static_cast<Eigen::Index>(state.truncation + 1);
    return state.coeffs.head(n).squaredNorm() - state.coeffs.tail(n).squaredNorm();
}

std::vector<double> uniform_grid(double tmax, int count)
{
    if (count < 1 || !(tmax >= 0.0) || !std::isfinite(tmax))
        throw Error(ErrorCode::InvalidArgument, "time grid needs count >= 1 and finite tmax >= 0");
    std::vector<double> grid(static_cast<std::size_t>(count));
    if (count == 1) {
        grid[0] = 0.0;
        return grid;
    }
    const double dt = tmax / (count - 1);
    for (int i = 0; i < count; ++i)
        grid[static_cast<std::size_t>(i)] = dt * i;
    return grid;
}

int bgrwa_truncation(const ModelParams& params, int n_modes)
{
    // a displaced |k> spreads over roughly k ± few·(1 + sqrt(k))·α + α² quanta
    const double alpha = params.g_ratio();
    const double k = n_modes + 1.0;
    const double spread = alpha * alpha + 8.0 * alpha * std::sqrt(k + 1.0) + 12.0;
    return static_cast<int>(std::ceil(k + spread));
}

int ed_truncation(const ModelParams& params, int n_modes)
{
    const exact::EdResult ed = exact::converge(params, std::max(8, n_modes), 1e-10);
    return std::max(ed.truncation_used, bgrwa_truncation(params, n_modes));
}

namespace {

void check_grid(std::span<const double> t_grid)
{
    if (t_grid.empty())
        throw Error(ErrorCode::InvalidArgument, "time grid is empty");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "time grid must be strictly increasing");
    }
}

} // namespace

TimeSeries evolve_bgrwa(const ModelParams& params, std::span<const double> t_grid, int n_modes, int truncation)
{
    validate(params);
    check_grid(t_grid);
    if (n_modes < 1)
        throw Error(ErrorCode::InvalidArgument, "n_modes must be >= 1");

    std::vector<bgrwa::Eigenstate> states;
    states.push_back(bgrwa::ground_state(params));
    for (int n = 0; n < n_modes; ++n) {
        states.push_back(bgrwa::eigenstate(params, n, Branch::Plus));
        states.push_back(bgrwa::eigenstate(params, n, Branch::Minus));
    }

    const auto count = static_cast<Eigen::Index>(states.size());
    const StateVector phi0 = initial_state(truncation);
    Eigen::MatrixXcd basis(phi0.dimension(), count);
    Eigen::VectorXd energies(count);
    Eigen::VectorXcd weights(count);
    for (Eigen::Index j = 0; j < count; ++j) {
        const StateVector psi = bgrwa::lab_frame_vector(states[static_cast<std::size_t>(j)], params, truncation);
        basis.col(j) = psi.coeffs;
        energies[j] = states[static_cast<std::size_t>(j)].energy;
        weights[j] = psi.coeffs.dot(phi0.coeffs);
    }

    TimeSeries out;
    out.method = Method::BGRWA;
    out.params = params;
    out.truncation = truncation;
    out.modes = n_modes;
    out.completeness = weights.squaredNorm();
    if (out.completeness < 1.0 - 1e-4)
        throw Error(ErrorCode::IncompleteBasis, "BGRWA modes capture only " + std::to_string(out.completeness) +
                                                    " of the initial state; raise n_modes");

    StateVector phi(truncation);
    for (double t : t_grid) {
        Eigen::VectorXcd amp(count);
        for (Eigen::Index j = 0; j < count; ++j)
            amp[j] = std::polar(1.0, -energies[j] * t) * weights[j];
        phi.coeffs = basis * amp;
        out.max_norm_drift = std::max(out.max_norm_drift, std::abs(phi.norm_squared() - out.completeness));
        out.samples.push_back({t, sigma_z_expectation(phi)});
    }
    return out;
}

TimeSeries evolve_ed(const ModelParams& params, std::span<const double> t_grid, int truncation)
{
    check_grid(t_grid);
    const exact::TruncatedHamiltonian h = exact::build_hamiltonian(params, truncation);
    const exact::EdResult ed = exact::diagonalize(h, h.dimension());

    const StateVector phi0 = initial_state(truncation);
    // V† φ(0) is real: the Hamiltonian is real symmetric
    const Eigen::VectorXd weights = ed.vectors.transpose() * phi0.coeffs.real();
    const Eigen::MatrixXcd vectors = ed.vectors.cast<cplx>();

    TimeSeries out;
    out.method = Method::ED;
    out.params = params;
    out.truncation = truncation;
    out.completeness = weights.squaredNorm();

    StateVector phi(truncation);
    Eigen::VectorXcd amp(weights.size());
    for (double t : t_grid) {
        for (Eigen::Index j = 0; j < weights.size(); ++j)
            amp[j] = weights[j] * std::polar(1.0, -ed.energies[j] * t);
        phi.coeffs = vectors * amp;
        out.max_norm_drift = std::max(out.max_norm_drift, std::abs(phi.norm_squared() - 1.0));
        out.samples.push_back({t, sigma_z_expectation(phi)});
    }
    return out;
}

} // namespace qrabi::dynamics
