#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrabi/model.hpp"

namespace qrabi::cli {

enum class Command { Spectrum, Dynamics, FluxScan, Compare };
enum class Format { Csv, Json };

std::string_view to_string(Command command);

/// Bad user input; maps to exit code 2. Engine failures stay qrabi::Error (exit 3).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `start:stop:step` (inclusive within half a step) or a single value.
struct Sweep {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    std::string text;

    std::vector<double> values() const;
};

Sweep parse_sweep(std::string_view text);

struct RunConfig {
    Command command = Command::Spectrum;
    // unset values fall back to per-command defaults (dimensionless for the
    // model commands, fitted device values in GHz for flux-scan)
    std::optional<double> delta, epsilon, omega;
    std::optional<std::string> g;
    std::vector<Method> methods;
    std::optional<int> levels;
    std::optional<int> truncation;
    double tol = 1e-8;
    double tmax = 50.0;
    int samples = 1000;
    int n_modes = 0; // 0 = automatic
    double ip_na = 510.0;
    std::string flux = "0.497:0.503:0.00005";
    std::string vvp_l = "0"; // fixed l, or "best"
    std::string out;         // empty = stdout
    Format format = Format::Csv;
    int jobs = 1;
};

/// Throws ConfigError on any violated invariant.
void validate(const RunConfig& config);

/// Numeric output table; cells are already rounded to 12 significant digits.
struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    bool operator==(const Table&) const = default;
};

/// x rounded to 12 significant digits (what the writers print).
double round12(double x);
std::string format_number(double x);

Table run_spectrum(const RunConfig& config);
Table run_compare(const RunConfig& config);
Table run_dynamics(const RunConfig& config);
Table run_flux_scan(const RunConfig& config);
Table run(const RunConfig& config);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
Table table_from_csv(std::string_view text);
Table table_from_json(std::string_view text);

/// Builds a RunConfig from argv (including an optional --config key = value file).
/// Throws ConfigError; returns nullopt when help was printed.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Full command-line entry point: 0 success, 2 bad config, 3 engine error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qrabi::cli
