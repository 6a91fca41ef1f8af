#include "qrabi/vvp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qrabi/exact.hpp"
#include "qrabi/specfun.hpp"

namespace qrabi::vvp {

namespace {

constexpr double resonance_tol = 1e-9;

// works in ω = 1 units
double d_element(const ModelParams& p, int m, int n)
{
    if (m > n)
        std::swap(m, n);
    const double r = p.g_ratio();
    double power = 1.0; // (2r)^(n-m) sqrt(m!/n!)
    for (int j = m + 1; j <= n; ++j)
        power *= 2.0 * r / std::sqrt(static_cast<double>(j));
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    return 0.5 * p.delta_ratio() * sign * power * std::exp(-2.0 * r * r) * specfun::laguerre(m, n - m, 4.0 * r * r);
}

double denominator(double value, int k)
{
    if (std::abs(value) < resonance_tol)
        throw Error(ErrorCode::ResonantDenominator, "zero energy denominator at k=" + std::to_string(k));
    return value;
}

} // namespace

double d_matrix_element(const ModelParams& params, int m, int n)
{
    if (m < 0 || n < 0)
        throw Error(ErrorCode::NegativeIndex, "D_mn indices must be >= 0");
    if (n < m)
        throw Error(ErrorCode::IndexOrder, "D_mn needs n >= m (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    return params.omega * d_element(params.dimensionless(), m, n);
}

EigenPair vvp_eigenvalues(const ModelParams& params, int m, int l, int k_cutoff)
{
    if (m < 0 || l < 0)
        throw Error(ErrorCode::NegativeIndex, "VVP needs m, l >= 0");
    if (k_cutoff <= m + l)
        throw Error(ErrorCode::InvalidArgument, "k_cutoff must exceed m + l");

    const ModelParams p = params.dimensionless();
    const int n = m + l;
    const double eps = p.epsilon;

    double sum_m = 0.0; // shift of |-z, m>, partner k = n skipped
    double sum_n = 0.0; // shift of |+z, n> (sign folded in below), partner k = m skipped
    for (int k = 0; k < k_cutoff; ++k) {
        if (k != n) {
            const double d = d_element(p, m, k);
            sum_m += d * d / denominator(eps + (m - k), k);
        }
        if (k != m) {
            const double d = d_element(p, n, k);
            sum_n += d * d / denominator(eps + (k - n), k);
        }
    }

    const double dmn = d_element(p, m, n);
    const double center = m + 0.5 * l - p.g * p.g + 0.5 * (sum_m - sum_n);
    const double split = eps - l + p.delta * p.delta * (sum_m + sum_n);
    const double half = 0.5 * std::sqrt(split * split + 4.0 * dmn * dmn);
    return {params.omega * (center + half), params.omega * (center - half)};
}

double single_level(const ModelParams& params, int j, int k_cutoff)
{
    if (j < 0)
        throw Error(ErrorCode::NegativeIndex, "VVP level index must be >= 0");
    if (k_cutoff <= j)
        throw Error(ErrorCode::InvalidArgument, "k_cutoff must exceed the level index");
    const ModelParams p = params.dimensionless();
    double shift = 0.0;
    for (int k = 0; k < k_cutoff; ++k) {
        const double d = d_element(p, j, k);
        shift -= d * d / denominator(p.epsilon + (k - j), k);
    }
    return params.omega * (j - 0.5 * p.epsilon - p.g * p.g + shift);
}

LPolicy LPolicy::fixed(int l)
{
    if (l < 0)
        throw Error(ErrorCode::InvalidArgument, "mixing offset l must be >= 0");
    LPolicy policy;
    policy.kind = Kind::Fixed;
    policy.l = l;
    return policy;
}

LPolicy LPolicy::best_of_ed(std::vector<int> candidates)
{
    if (candidates.empty())
        throw Error(ErrorCode::InvalidArgument, "best-of policy needs at least one candidate l");
    for (int l : candidates) {
        if (l < 0)
            throw Error(ErrorCode::InvalidArgument, "mixing offset l must be >= 0");
    }
    LPolicy policy;
    policy.kind = Kind::BestOfEd;
    policy.candidates = std::move(candidates);
    return policy;
}

std::string LPolicy::describe() const
{
    if (kind == Kind::Fixed)
        return "fixed l=" + std::to_string(l);
    std::string out = "best-of-ed l in {";
    for (std::size_t i = 0; i < candidates.size(); ++i)
        out += (i ? "," : "") + std::to_string(candidates[i]);
    return out + "}";
}

namespace {

SpectrumTable fixed_spectrum(const ModelParams& params, int n_levels, int l, int k_cutoff)
{
    const double reach = (std::abs(params.epsilon) + std::abs(params.delta)) / params.omega;
    const int m_max = n_levels + l + 2 + static_cast<int>(std::ceil(reach));

    SpectrumTable table;
    table.method = Method::VVP;
    table.params = params;
    for (int j = 0; j < l; ++j)
        table.entries.push_back({j, Branch::Single, single_level(params, j, k_cutoff), l});
    for (int m = 0; m <= m_max; ++m) {
        const EigenPair e = vvp_eigenvalues(params, m, l, k_cutoff);
        table.entries.push_back({m, Branch::Plus, e.plus, l});
        table.entries.push_back({m, Branch::Minus, e.minus, l});
    }
    table = table.sorted();
    table.entries.resize(static_cast<std::size_t>(n_levels));
    return table;
}

} // namespace

SpectrumTable vvp_spectrum(const ModelParams& params, int n_levels, const LPolicy& policy, int k_cutoff)
{
    validate(params);
    if (n_levels < 1)
        throw Error(ErrorCode::InvalidArgument, "n_levels must be >= 1");
    if (policy.kind == LPolicy::Kind::Fixed)
        return fixed_spectrum(params, n_levels, policy.l, k_cutoff);

    const exact::EdResult ed = exact::converge(params, n_levels, 1e-8);
    std::vector<SpectrumTable> tables;
    ErrorCode last_failure = ErrorCode::ResonantDenominator;
    for (int l : policy.candidates) {
        try {
            tables.push_back(fixed_spectrum(params, n_levels, l, k_cutoff));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ResonantDenominator)
                throw;
            last_failure = e.code();
        }
    }
    if (tables.empty())
        throw Error(last_failure, "every candidate l hits a resonant denominator");

    SpectrumTable out;
    out.method = Method::VVP;
    out.params = params;
    for (int i = 0; i < n_levels; ++i) {
        const Level* best = nullptr;
        double best_dev = std::numeric_limits<double>::infinity();
        for (const auto& t : tables) {
            const Level& level = t.entries[static_cast<std::size_t>(i)];
            const double dev = std::abs(level.energy - ed.energies[i]);
            if (dev < best_dev) {
                best_dev = dev;
                best = &level;
            }
        }
        out.entries.push_back(*best);
    }
    return out.sorted();
}

} // namespace qrabi::vvp
