#pragma once

#include <string>
#include <vector>

#include "qrabi/model.hpp"

// Van Vleck perturbation spectrum. Unperturbed states live in the polaron
// frame: |-z, m> at mω + ε/2 and |+z, n> at nω - ε/2. Level m is mixed with
// n = m + l exactly; every other state enters at second order through the
// Franck-Condon weights D_mk.
namespace qrabi::vvp {

/// D_mn = (Δ/2)(-1)^m (2g/ω)^(n-m) e^{-2g²/ω²} sqrt(m!/n!) L_m^(n-m)(4g²/ω²).
/// Throws IndexOrder if n < m.
double d_matrix_element(const ModelParams& params, int m, int n);

struct EigenPair {
    double plus = 0.0;
    double minus = 0.0;
};

/// Levels of the (m, n = m+l) doublet with both k-sums truncated to k < k_cutoff.
/// Throws ResonantDenominator if an included k hits a zero energy denominator.
EigenPair vvp_eigenvalues(const ModelParams& params, int m, int l, int k_cutoff);

/// Second-order level of |+z, j> for j < l, which has no degenerate partner.
double single_level(const ModelParams& params, int j, int k_cutoff);

/// How the mixing offset l is chosen. It is always explicit and is echoed
/// into output metadata.
struct LPolicy {
    enum class Kind { Fixed, BestOfEd };
    Kind kind = Kind::Fixed;
    int l = 0;
    std::vector<int> candidates;

    static LPolicy fixed(int l);
    /// Per sorted level, use the candidate l whose level lies closest to ED.
    static LPolicy best_of_ed(std::vector<int> candidates = {0, 1, 2});

    std::string describe() const;
};

inline constexpr int default_k_cutoff = 60;

/// The n_levels lowest VVP levels, ascending; each entry records its l.
SpectrumTable vvp_spectrum(const ModelParams& params, int n_levels, const LPolicy& policy,
                           int k_cutoff = default_k_cutoff);

} // namespace qrabi::vvp
