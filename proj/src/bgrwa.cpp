#include "qrabi/bgrwa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qrabi/specfun.hpp"

namespace qrabi::bgrwa {

namespace {

void require_index(int n)
{
    if (n < 0)
        throw Error(ErrorCode::NegativeIndex, "block index must be >= 0, got " + std::to_string(n));
}

double norm_y(const ModelParams& params)
{
    const double eta = params.eta();
    const double y = std::hypot(params.epsilon, params.delta * eta);
    if (!(y > 0.0))
        throw Error(ErrorCode::DegenerateNorm, "epsilon = delta = 0 leaves sqrt(eps^2 + delta^2 eta^2) = 0");
    return y;
}

} // namespace

double g0_coefficient(const ModelParams& params, int n)
{
    require_index(n);
    const double r = params.g_ratio();
    return std::exp(-2.0 * r * r) * specfun::laguerre(n, 0, 4.0 * r * r);
}

double f1_coefficient(const ModelParams& params, int n)
{
    require_index(n);
    const double r = params.g_ratio();
    return 2.0 * r / (n + 1.0) * std::exp(-2.0 * r * r) * specfun::laguerre(n, 1, 4.0 * r * r);
}

double renormalized_bias(const ModelParams& params, int n)
{
    const double y = norm_y(params);
    const double eps = params.epsilon;
    const double delta = params.delta;
    return (eps * eps + delta * delta * params.eta() * g0_coefficient(params, n)) / (2.0 * y);
}

double effective_coupling(const ModelParams& params, int n)
{
    return 0.5 * params.delta * f1_coefficient(params, n);
}

Coefficients Coefficients::of(const ModelParams& params)
{
    Coefficients c;
    c.eta = params.eta();
    c.y = norm_y(params);
    const double ratio = params.epsilon / c.y;
    // clamp: ratio can exceed 1 by an ulp when Δη underflows
    c.u = std::sqrt(std::max(0.0, 0.5 * (1.0 - ratio)));
    c.v = std::sqrt(std::max(0.0, 0.5 * (1.0 + ratio)));
    return c;
}

Block block(const ModelParams& params, int n)
{
    require_index(n);
    const double w = params.omega;
    const double shift = params.g * params.g / w;
    const double off = effective_coupling(params, n) * std::sqrt(n + 1.0);
    return {{{w * n - shift + renormalized_bias(params, n), off},
             {off, w * (n + 1) - shift - renormalized_bias(params, n + 1)}}};
}

EigenPair eigenvalues(const ModelParams& params, int n)
{
    require_index(n);
    const double w = params.omega;
    const double g = params.g;
    const double eps = params.epsilon;
    const double d2 = params.delta * params.delta;
    const double eta = params.eta();
    const double y = norm_y(params);

    const double x = 4.0 * g * g / (w * w);
    const double damp = std::exp(-2.0 * g * g / (w * w));
    const double ln = specfun::laguerre(n, 0, x);
    const double ln1 = specfun::laguerre(n + 1, 0, x);
    const double l1n = specfun::laguerre(n, 1, x);

    const double center = w * (n + 0.5) - g * g / w + d2 * eta / (4.0 * y) * damp * (ln - ln1);
    const double detune = w / 2.0 - (2.0 * eps * eps + d2 * eta * damp * (ln + ln1)) / (4.0 * y);
    const double mix = g * g * d2 * damp * damp / (w * w * (n + 1.0)) * l1n * l1n;
    const double root = std::sqrt(detune * detune + mix);
    return {center + root, center - root};
}

double ground_energy(const ModelParams& params)
{
    const double y = std::hypot(params.epsilon, params.delta * params.eta());
    return -0.5 * y - params.g * params.g / params.omega;
}

Eigenstate ground_state(const ModelParams& params)
{
    norm_y(params);
    Eigenstate s;
    s.n = 0;
    s.branch = Branch::Ground;
    s.theta = std::numeric_limits<double>::quiet_NaN();
    s.delta_gap = std::numeric_limits<double>::quiet_NaN();
    s.coupling = 0.0;
    s.energy = ground_energy(params);
    return s;
}

Eigenstate eigenstate(const ModelParams& params, int n, Branch branch)
{
    if (branch == Branch::Ground)
        return ground_state(params);
    if (branch != Branch::Plus && branch != Branch::Minus)
        throw Error(ErrorCode::InvalidArgument, "BGRWA states carry ground, plus or minus branches");

    const Block h = block(params, n);
    Eigenstate s;
    s.n = n;
    s.branch = branch;
    s.delta_gap = h[0][0] - h[1][1];
    s.coupling = h[0][1];
    const double r = std::hypot(s.delta_gap, 2.0 * s.coupling);
    // exact degeneracy: take the g -> 0+ limit of equal mixing
    s.theta = r > 0.0 ? std::acos(std::clamp(s.delta_gap / r, -1.0, 1.0)) : std::numbers::pi / 2.0;
    const EigenPair e = eigenvalues(params, n);
    s.energy = branch == Branch::Plus ? e.plus : e.minus;
    return s;
}

std::array<double, 2> block_spinor(const Eigenstate& state)
{
    if (state.branch == Branch::Ground)
        return {0.0, 1.0};
    const double c = std::cos(state.theta / 2.0);
    const double s = std::sin(state.theta / 2.0);
    const double sign = state.coupling < 0.0 ? -1.0 : 1.0;
    if (state.branch == Branch::Plus)
        return {c, sign * s};
    return {s, -sign * c};
}

StateVector lab_frame_vector(const Eigenstate& state, const ModelParams& params, int truncation)
{
    if (truncation < 1)
        throw Error(ErrorCode::TruncationTooSmall, "Fock truncation must be >= 1");

    const Coefficients c = Coefficients::of(params);
    const double us = params.delta < 0.0 ? -c.u : c.u;
    // rotated-frame qubit states in the lab σz basis (Up, Down)
    const std::array<double, 2> upper = {us, -c.v};
    const std::array<double, 2> lower = {c.v, us};

    // polaron-frame amplitudes: (rotated qubit, Fock k)
    struct Term {
        const std::array<double, 2>* spinor;
        int fock;
        double amplitude;
    };
    std::vector<Term> terms;
    if (state.branch == Branch::Ground) {
        terms.push_back({&lower, 0, 1.0});
    } else {
        const auto amp = block_spinor(state);
        terms.push_back({&upper, state.n, amp[0]});
        terms.push_back({&lower, state.n + 1, amp[1]});
    }

    const double alpha = params.g_ratio();
    const std::array<double, 2> displacement = {-alpha, alpha}; // Up, Down

    StateVector out(truncation);
    for (int q = 0; q < 2; ++q) {
        const Qubit qubit = static_cast<Qubit>(q);
        for (const Term& t : terms) {
            const double weight = t.amplitude * (*t.spinor)[q];
            if (weight == 0.0)
                continue;
            double kept = 0.0;
            for (int m = 0; m <= truncation; ++m) {
                const double overlap = specfun::displaced_fock_overlap(m, t.fock, displacement[q]);
                kept += overlap * overlap;
                out.at(qubit, m) += weight * overlap;
            }
            if (1.0 - kept > 1e-8)
                throw Error(ErrorCode::TruncationTooSmall,
                            "displaced Fock state |" + std::to_string(t.fock) + "> loses " + std::to_string(1.0 - kept) +
                                " of its weight beyond N=" + std::to_string(truncation));
        }
    }
    out.normalize();
    return out;
}

SpectrumTable spectrum(const ModelParams& params, int n_max)
{
    require_index(n_max);
    SpectrumTable table;
    table.method = Method::BGRWA;
    table.params = params;
    table.entries.reserve(2 * static_cast<std::size_t>(n_max) + 3);
    table.entries.push_back({0, Branch::Ground, ground_energy(params), std::nullopt});
    for (int n = 0; n <= n_max; ++n) {
        const EigenPair e = eigenvalues(params, n);
        table.entries.push_back({n, Branch::Plus, e.plus, std::nullopt});
        table.entries.push_back({n, Branch::Minus, e.minus, std::nullopt});
    }
    return table;
}

int pair_count_for_levels(const ModelParams& params, int k)
{
    if (k < 1)
        return 0;
    // |ε(n)| <= (ε² + Δ²η)/(2y) and |R_r sqrt(n+1)| <= |Δ|/2 bound every
    // block's roots to within that margin of its diagonal
    const Coefficients c = Coefficients::of(params);
    const double bias_bound = (params.epsilon * params.epsilon + params.delta * params.delta * c.eta) / (2.0 * c.y);
    const double spread = (2.0 * bias_bound + std::abs(params.delta)) / params.omega;
    return k + static_cast<int>(std::ceil(spread));
}

} // namespace qrabi::bgrwa
