#include "qrabi/specfun.hpp"

#include <cmath>
#include <string>

#include "qrabi/error.hpp"

namespace qrabi::specfun {

double laguerre(int n, int k, double x)
{
    if (n < 0 || k < 0)
        throw Error(ErrorCode::NegativeDegree,
                    "laguerre needs n, k >= 0 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    if (n == 0)
        return 1.0;

    // (j+1) L_{j+1} = (2j+k+1-x) L_j - (j+k) L_{j-1}
    double prev = 1.0;
    double curr = 1.0 + k - x;
    for (int j = 1; j < n; ++j) {
        const double next = ((2.0 * j + k + 1.0 - x) * curr - (j + k) * prev) / (j + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

double displaced_fock_overlap(int m, int n, double alpha)
{
    if (m < 0 || n < 0)
        throw Error(ErrorCode::NegativeIndex,
                    "displaced_fock_overlap needs m, n >= 0 (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    if (m < n)
        return ((m + n) % 2 == 0 ? 1.0 : -1.0) * displaced_fock_overlap(n, m, alpha);

    // sqrt(n!/m!) alpha^(m-n) as a running product
    double prefactor = 1.0;
    for (int j = n + 1; j <= m; ++j)
        prefactor *= alpha / std::sqrt(static_cast<double>(j));

    const double x = alpha * alpha;
    return prefactor * std::exp(-0.5 * x) * laguerre(n, m - n, x);
}

} // namespace qrabi::specfun
