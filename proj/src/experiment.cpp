#include "qrabi/experiment.hpp"

#include <cmath>
#include <string>

#include "qrabi/bgrwa.hpp"
#include "qrabi/exact.hpp"
#include "qrabi/sweep.hpp"

namespace qrabi::experiment {

FluxQubitParams FluxQubitParams::defaults()
{
    FluxQubitParams fq;
    for (int i = -60; i <= 60; ++i)
        fq.flux_grid.push_back(0.5 + 5e-5 * i);
    return fq;
}

void validate(const FluxQubitParams& fq)
{
    const double values[] = {fq.g_ghz, fq.omega_ghz, fq.delta_ghz, fq.ip_na};
    for (double v : values) {
        if (!std::isfinite(v) || !(v > 0.0))
            throw Error(ErrorCode::InvalidArgument, "flux-qubit frequencies and I_p must be finite and > 0");
    }
    for (double f : fq.flux_grid) {
        if (!std::isfinite(f))
            throw Error(ErrorCode::InvalidArgument, "flux grid values must be finite");
    }
}

double bias_from_flux(double ip_na, double flux_ratio)
{
    if (!(ip_na > 0.0))
        throw Error(ErrorCode::InvalidArgument, "persistent current must be > 0");
    const double joules = 2.0 * ip_na * 1e-9 * flux_quantum * (flux_ratio - 0.5);
    return joules / planck * 1e-9;
}

ModelParams to_model(const FluxQubitParams& fq, double epsilon_ghz)
{
    return validate(ModelParams{fq.delta_ghz, epsilon_ghz, fq.omega_ghz, fq.g_ghz}).dimensionless();
}

ModelParams to_ghz(const ModelParams& dimensionless, double omega_ghz)
{
    const double s = omega_ghz / dimensionless.omega;
    return {dimensionless.delta * s, dimensionless.epsilon * s, omega_ghz, dimensionless.g * s};
}

std::vector<double> transitions(const ModelParams& params, int n, Method method)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "need at least one transition");
    std::vector<double> levels;
    switch (method) {
    case Method::BGRWA:
        levels = sorted_levels(bgrwa::spectrum(params, bgrwa::pair_count_for_levels(params, n + 1)),
                               static_cast<std::size_t>(n + 1));
        break;
    case Method::ED: {
        const exact::EdResult ed = exact::converge(params, n + 1, 1e-10 * params.omega);
        levels.assign(ed.energies.data(), ed.energies.data() + ed.energies.size());
        break;
    }
    case Method::VVP:
        throw Error(ErrorCode::InvalidArgument, "flux scans run on bgrwa or ed");
    }
    std::vector<double> out;
    for (int k = 1; k <= n; ++k)
        out.push_back(levels[static_cast<std::size_t>(k)] - levels[0]);
    return out;
}

FluxScan flux_scan(const FluxQubitParams& fq, int n_transitions, Method method, int jobs)
{
    validate(fq);
    FluxScan scan;
    scan.method = method;
    scan.rows = parallel_map(fq.flux_grid.size(), jobs, [&](std::size_t i) {
        FluxRow row;
        row.flux_ratio = fq.flux_grid[i];
        row.epsilon_ghz = bias_from_flux(fq.ip_na, row.flux_ratio);
        for (double t : transitions(to_model(fq, row.epsilon_ghz), n_transitions, method))
            row.transitions_ghz.push_back(t * fq.omega_ghz);
        return row;
    });
    return scan;
}

} // namespace qrabi::experiment
