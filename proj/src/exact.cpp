#include "qrabi/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qrabi::exact {

TruncatedHamiltonian build_hamiltonian(const ModelParams& params, int truncation)
{
    validate(params);
    if (truncation < 1)
        throw Error(ErrorCode::TruncationTooSmall, "Fock truncation must be >= 1, got " + std::to_string(truncation));

    TruncatedHamiltonian h;
    h.truncation = truncation;
    h.params = params;
    h.matrix = Eigen::MatrixXd::Zero(h.dimension(), h.dimension());

    const auto idx = [truncation](Qubit q, int n) {
        return static_cast<Eigen::Index>(StateVector::index(q, n, truncation));
    };
    for (Qubit q : {Qubit::Up, Qubit::Down}) {
        const double sz = q == Qubit::Up ? 1.0 : -1.0;
        for (int n = 0; n <= truncation; ++n) {
            h.matrix(idx(q, n), idx(q, n)) = params.omega * n - sz * params.epsilon / 2.0;
            if (n < truncation) {
                const double hop = sz * params.g * std::sqrt(n + 1.0);
                h.matrix(idx(q, n + 1), idx(q, n)) = hop;
                h.matrix(idx(q, n), idx(q, n + 1)) = hop;
            }
        }
    }
    for (int n = 0; n <= truncation; ++n) {
        h.matrix(idx(Qubit::Up, n), idx(Qubit::Down, n)) = -params.delta / 2.0;
        h.matrix(idx(Qubit::Down, n), idx(Qubit::Up, n)) = -params.delta / 2.0;
    }
    return h;
}

EdResult diagonalize(const TruncatedHamiltonian& h, int n_levels)
{
    if (n_levels < 1 || n_levels > h.dimension())
        throw Error(ErrorCode::InvalidArgument, "cannot return " + std::to_string(n_levels) + " levels from a basis of " +
                                                    std::to_string(h.dimension()));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::EigensolverFailure,
                    "symmetric QR iteration did not converge at N=" + std::to_string(h.truncation));

    EdResult out;
    out.energies = solver.eigenvalues().head(n_levels);
    out.vectors = solver.eigenvectors().leftCols(n_levels);
    out.truncation_used = h.truncation;
    return out;
}

int starting_truncation(const ModelParams& params)
{
    const double r = params.g_ratio();
    return std::max(20, static_cast<int>(std::ceil(8.0 * r * r + 10.0)));
}

EdResult converge(const ModelParams& params, int n_levels, double tol)
{
    if (!(tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "convergence tolerance must be > 0");
    constexpr int max_truncation = 2000;

    int n = std::max(starting_truncation(params), n_levels);
    EdResult previous = diagonalize(build_hamiltonian(params, n), n_levels);
    while (2 * n <= max_truncation) {
        n *= 2;
        EdResult next = diagonalize(build_hamiltonian(params, n), n_levels);
        const double shift = (next.energies - previous.energies).cwiseAbs().maxCoeff();
        next.tail_estimate = shift;
        if (shift < tol) {
            next.converged = true;
            return next;
        }
        previous = std::move(next);
    }
    throw Error(ErrorCode::NoConvergence, "lowest " + std::to_string(n_levels) + " levels still moved by " +
                                              std::to_string(previous.tail_estimate) + " at N=" + std::to_string(n));
}

SpectrumTable to_table(const EdResult& result, const ModelParams& params)
{
    SpectrumTable table;
    table.method = Method::ED;
    table.params = params;
    table.truncation = result.truncation_used;
    for (Eigen::Index i = 0; i < result.energies.size(); ++i)
        table.entries.push_back({static_cast<int>(i), Branch::Single, result.energies[i], std::nullopt});
    return table;
}

double expectation(const TruncatedHamiltonian& h, const StateVector& state)
{
    if (state.truncation != h.truncation)
        throw Error(ErrorCode::InvalidArgument, "state and Hamiltonian truncations differ");
    const Eigen::VectorXcd hv = h.matrix.cast<std::complex<double>>() * state.coeffs;
    return state.coeffs.dot(hv).real();
}

} // namespace qrabi::exact
