#include "qrabi/sweep.hpp"

#include <cmath>

#include "qrabi/error.hpp"

namespace qrabi {

std::vector<double> inclusive_range(double start, double stop, double step)
{
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw Error(ErrorCode::InvalidArgument, "sweep bounds must be finite");
    if (!(step > 0.0))
        throw Error(ErrorCode::InvalidArgument, "sweep step must be > 0");
    if (start > stop)
        throw Error(ErrorCode::InvalidArgument, "sweep start must not exceed stop");

    const auto count = static_cast<long>(std::floor((stop - start) / step + 0.5)) + 1;
    if (count > 10'000'000)
        throw Error(ErrorCode::InvalidArgument, "sweep has too many points");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
        values.push_back(start + step * static_cast<double>(i));
    return values;
}

} // namespace qrabi
