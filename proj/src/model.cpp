#include "qrabi/model.hpp"

#include <algorithm>
#include <string>

namespace qrabi {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonPositiveOmega: return "NonPositiveOmega";
    case ErrorCode::NegativeCoupling: return "NegativeCoupling";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::InsufficientLevels: return "InsufficientLevels";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::DegenerateNorm: return "DegenerateNorm";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::IndexOrder: return "IndexOrder";
    case ErrorCode::ResonantDenominator: return "ResonantDenominator";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::IncompleteBasis: return "IncompleteBasis";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

ModelParams validate(const ModelParams& params)
{
    const double values[] = {params.delta, params.epsilon, params.omega, params.g};
    for (double v : values) {
        if (!std::isfinite(v))
            throw Error(ErrorCode::NonFiniteInput, "model parameters must be finite");
    }
    if (!(params.omega > 0.0))
        throw Error(ErrorCode::NonPositiveOmega, "omega must be > 0, got " + std::to_string(params.omega));
    if (params.g < 0.0)
        throw Error(ErrorCode::NegativeCoupling, "g must be >= 0, got " + std::to_string(params.g));
    // ratios can still overflow for denormal omega
    if (!std::isfinite(params.g_ratio()) || !std::isfinite(params.delta_ratio()) ||
        !std::isfinite(params.epsilon_ratio()))
        throw Error(ErrorCode::NonFiniteInput, "parameter ratios to omega are not finite");
    return params;
}

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::BGRWA: return "bgrwa";
    case Method::VVP: return "vvp";
    case Method::ED: return "ed";
    }
    return "?";
}

std::string_view to_string(Branch branch)
{
    switch (branch) {
    case Branch::Ground: return "ground";
    case Branch::Plus: return "plus";
    case Branch::Minus: return "minus";
    case Branch::Single: return "single";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    if (name == "bgrwa") return Method::BGRWA;
    if (name == "vvp") return Method::VVP;
    if (name == "ed") return Method::ED;
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

SpectrumTable SpectrumTable::sorted() const
{
    SpectrumTable out = *this;
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const Level& a, const Level& b) { return a.energy < b.energy; });
    return out;
}

std::vector<double> sorted_levels(const SpectrumTable& table, std::size_t k)
{
    if (table.entries.size() < k)
        throw Error(ErrorCode::InsufficientLevels, "requested " + std::to_string(k) + " levels, table holds " +
                                                       std::to_string(table.entries.size()));
    std::vector<double> energies;
    energies.reserve(table.entries.size());
    for (const auto& level : table.entries)
        energies.push_back(level.energy);
    std::partial_sort(energies.begin(), energies.begin() + static_cast<std::ptrdiff_t>(k), energies.end());
    energies.resize(k);
    return energies;
}

StateVector::StateVector(int n_max) : coeffs(Eigen::VectorXcd::Zero(2 * (n_max + 1))), truncation(n_max) {}

void StateVector::normalize()
{
    const double n = coeffs.norm();
    if (n > 0.0)
        coeffs /= n;
}

} // namespace qrabi
