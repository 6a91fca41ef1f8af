#include "qrabi/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrabi/bgrwa.hpp"
#include "qrabi/dynamics.hpp"
#include "qrabi/exact.hpp"
#include "qrabi/experiment.hpp"
#include "qrabi/sweep.hpp"
#include "qrabi/vvp.hpp"

namespace qrabi::cli {

namespace {

constexpr double default_delta = 1.0;
constexpr double default_epsilon = 0.0;
constexpr double default_omega = 1.0;

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = text.find(sep, begin);
        parts.emplace_back(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
        if (end == std::string_view::npos)
            break;
        begin = end + 1;
    }
    return parts;
}

double parse_double(const std::string& s, std::string_view what)
{
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (s.empty() || end != begin + s.size() || !std::isfinite(v))
        throw ConfigError("invalid number '" + s + "' in " + std::string(what));
    return v;
}

std::vector<Method> default_methods(Command command)
{
    switch (command) {
    case Command::Spectrum: return {Method::BGRWA, Method::ED, Method::VVP};
    case Command::Compare: return {Method::BGRWA, Method::ED, Method::VVP};
    case Command::Dynamics: return {Method::BGRWA, Method::ED};
    case Command::FluxScan: return {Method::BGRWA};
    }
    return {};
}

std::vector<Method> methods_of(const RunConfig& c)
{
    std::vector<Method> methods = c.methods.empty() ? default_methods(c.command) : c.methods;
    if (c.command == Command::Compare && std::find(methods.begin(), methods.end(), Method::ED) == methods.end())
        methods.push_back(Method::ED);
    return methods;
}

bool has(const std::vector<Method>& methods, Method m)
{
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

int levels_of(const RunConfig& c)
{
    return c.levels.value_or(c.command == Command::FluxScan ? 3 : 8);
}

ModelParams model_at(const RunConfig& c, double g)
{
    return {c.delta.value_or(default_delta), c.epsilon.value_or(default_epsilon), c.omega.value_or(default_omega), g};
}

vvp::LPolicy vvp_policy(const RunConfig& c)
{
    if (c.vvp_l == "best")
        return vvp::LPolicy::best_of_ed();
    const double l = parse_double(c.vvp_l, "--vvp-l");
    if (l < 0 || l != std::floor(l) || l > 64)
        throw ConfigError("--vvp-l must be a small non-negative integer or 'best'");
    return vvp::LPolicy::fixed(static_cast<int>(l));
}

std::string join_methods(const std::vector<Method>& methods)
{
    std::string out;
    for (std::size_t i = 0; i < methods.size(); ++i)
        out += (i ? "," : "") + std::string(to_string(methods[i]));
    return out;
}

experiment::FluxQubitParams flux_params(const RunConfig& c)
{
    experiment::FluxQubitParams fq;
    fq.delta_ghz = c.delta.value_or(fq.delta_ghz);
    fq.omega_ghz = c.omega.value_or(fq.omega_ghz);
    if (c.g)
        fq.g_ghz = parse_double(*c.g, "--g");
    fq.ip_na = c.ip_na;
    fq.flux_grid = parse_sweep(c.flux).values();
    return fq;
}

std::vector<double> level_energies(const ModelParams& p, Method method, int k, const RunConfig& c, int* ed_truncation)
{
    switch (method) {
    case Method::BGRWA:
        return sorted_levels(bgrwa::spectrum(p, bgrwa::pair_count_for_levels(p, k)), static_cast<std::size_t>(k));
    case Method::VVP:
        return sorted_levels(vvp::vvp_spectrum(p, k, vvp_policy(c)), static_cast<std::size_t>(k));
    case Method::ED: {
        const exact::EdResult ed = c.truncation ? exact::diagonalize(exact::build_hamiltonian(p, *c.truncation), k)
                                                : exact::converge(p, k, c.tol);
        if (ed_truncation)
            *ed_truncation = ed.truncation_used;
        return {ed.energies.data(), ed.energies.data() + ed.energies.size()};
    }
    }
    return {};
}

std::vector<double> rounded(std::vector<double> row)
{
    for (double& x : row)
        x = round12(x);
    return row;
}

Table level_table(const RunConfig& c, bool deviations)
{
    validate(c);
    const std::vector<Method> methods = methods_of(c);
    const int k = levels_of(c);
    const std::vector<double> grid = parse_sweep(c.g.value_or("0")).values();

    Table t;
    t.meta = {{"command", std::string(to_string(c.command))},
              {"delta", format_number(c.delta.value_or(default_delta))},
              {"epsilon", format_number(c.epsilon.value_or(default_epsilon))},
              {"omega", format_number(c.omega.value_or(default_omega))},
              {"g", c.g.value_or("0")},
              {"levels", std::to_string(k)},
              {"methods", join_methods(methods)}};
    if (has(methods, Method::ED))
        t.meta.emplace_back("ed", c.truncation ? "truncation=" + std::to_string(*c.truncation)
                                               : "converged tol=" + format_number(c.tol));
    if (has(methods, Method::VVP))
        t.meta.emplace_back("vvp_l", vvp_policy(c).describe());

    t.columns.push_back("g");
    for (Method m : methods)
        for (int i = 0; i < k; ++i)
            t.columns.push_back(std::string(to_string(m)) + "_E" + std::to_string(i));
    if (deviations) {
        for (Method m : methods) {
            if (m == Method::ED)
                continue;
            for (int i = 0; i < k; ++i)
                t.columns.push_back(std::string(to_string(m)) + "_dev" + std::to_string(i));
        }
    }
    if (has(methods, Method::ED))
        t.columns.push_back("ed_N");

    t.rows = parallel_map(grid.size(), c.jobs, [&](std::size_t row_index) {
        const ModelParams p = model_at(c, grid[row_index]);
        std::vector<double> row{p.g};
        std::vector<std::vector<double>> per_method;
        int ed_n = 0;
        for (Method m : methods) {
            per_method.push_back(level_energies(p, m, k, c, &ed_n));
            row.insert(row.end(), per_method.back().begin(), per_method.back().end());
        }
        if (deviations) {
            const auto ed_pos = std::find(methods.begin(), methods.end(), Method::ED) - methods.begin();
            const auto& ed = per_method[static_cast<std::size_t>(ed_pos)];
            for (std::size_t mi = 0; mi < methods.size(); ++mi) {
                if (methods[mi] == Method::ED)
                    continue;
                for (int i = 0; i < k; ++i)
                    row.push_back(std::abs(per_method[mi][static_cast<std::size_t>(i)] - ed[static_cast<std::size_t>(i)]));
            }
        }
        if (has(methods, Method::ED))
            row.push_back(ed_n);
        return rounded(std::move(row));
    });
    return t;
}

} // namespace

std::string_view to_string(Command command)
{
    switch (command) {
    case Command::Spectrum: return "spectrum";
    case Command::Dynamics: return "dynamics";
    case Command::FluxScan: return "flux-scan";
    case Command::Compare: return "compare";
    }
    return "?";
}

std::vector<double> Sweep::values() const
{
    return inclusive_range(start, stop, step);
}

Sweep parse_sweep(std::string_view text)
{
    const std::vector<std::string> parts = split(text, ':');
    Sweep s;
    s.text = std::string(text);
    if (parts.size() == 1) {
        s.start = s.stop = parse_double(parts[0], "sweep");
        s.step = 1.0;
    } else if (parts.size() == 3) {
        s.start = parse_double(parts[0], "sweep start");
        s.stop = parse_double(parts[1], "sweep stop");
        s.step = parse_double(parts[2], "sweep step");
    } else {
        throw ConfigError("sweep '" + s.text + "' is not start:stop:step");
    }
    if (!(s.step > 0.0))
        throw ConfigError("sweep '" + s.text + "' needs step > 0");
    if (s.start > s.stop)
        throw ConfigError("sweep '" + s.text + "' needs start <= stop");
    return s;
}

void validate(const RunConfig& c)
{
    try {
        const std::vector<Method> methods = methods_of(c);
        if (methods.empty())
            throw ConfigError("no methods selected");
        const int k = levels_of(c);
        if (k < 1 || k > 1000)
            throw ConfigError("--levels must be in [1, 1000]");
        if (c.truncation && *c.truncation < 1)
            throw ConfigError("--truncation must be >= 1");
        if (!(c.tol > 0.0))
            throw ConfigError("--tol must be > 0");
        if (c.jobs < 1)
            throw ConfigError("--jobs must be >= 1");

        if (c.command == Command::FluxScan) {
            if (has(methods, Method::VVP))
                throw ConfigError("flux-scan supports the bgrwa and ed methods");
            experiment::validate(flux_params(c));
            return;
        }

        const std::vector<double> grid = parse_sweep(c.g.value_or("0")).values();
        for (double g : grid)
            qrabi::validate(model_at(c, g));
        if (has(methods, Method::VVP))
            vvp_policy(c);
        if (c.truncation && (c.command == Command::Spectrum || c.command == Command::Compare) &&
            2 * (*c.truncation + 1) < k)
            throw ConfigError("--truncation too small for the requested --levels");

        if (c.command == Command::Dynamics) {
            if (grid.size() != 1)
                throw ConfigError("dynamics takes a single --g value");
            if (has(methods, Method::VVP))
                throw ConfigError("dynamics supports the bgrwa and ed methods (VVP has no eigenvectors)");
            if (c.samples < 1 || !(c.tmax >= 0.0) || !std::isfinite(c.tmax))
                throw ConfigError("dynamics needs --samples >= 1 and --tmax >= 0");
            if (c.n_modes < 0)
                throw ConfigError("--n-modes must be >= 0 (0 picks automatically)");
        }
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

double round12(double x)
{
    return std::strtod(format_number(x).c_str(), nullptr);
}

std::string format_number(double x)
{
    if (x == 0.0)
        return "0"; // folds -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Table run_spectrum(const RunConfig& config)
{
    return level_table(config, false);
}

Table run_compare(const RunConfig& config)
{
    return level_table(config, true);
}

Table run_dynamics(const RunConfig& c)
{
    validate(c);
    const std::vector<Method> methods = methods_of(c);
    const ModelParams p = model_at(c, parse_sweep(c.g.value_or("0")).values().front());
    const std::vector<double> grid = dynamics::uniform_grid(c.tmax, c.samples);

    const double alpha = p.g_ratio();
    const int n_modes = c.n_modes > 0 ? c.n_modes : 20 + static_cast<int>(std::ceil(8.0 * alpha * alpha + 8.0 * alpha));

    auto series = parallel_map(methods.size(), c.jobs, [&](std::size_t i) {
        if (methods[i] == Method::BGRWA) {
            const int n = c.truncation.value_or(dynamics::bgrwa_truncation(p, n_modes));
            return dynamics::evolve_bgrwa(p, grid, n_modes, n);
        }
        const int n = c.truncation.value_or(dynamics::ed_truncation(p, n_modes));
        return dynamics::evolve_ed(p, grid, n);
    });

    Table t;
    t.meta = {{"command", "dynamics"},
              {"delta", format_number(p.delta)},
              {"epsilon", format_number(p.epsilon)},
              {"omega", format_number(p.omega)},
              {"g", format_number(p.g)},
              {"tmax", format_number(c.tmax)},
              {"samples", std::to_string(c.samples)},
              {"methods", join_methods(methods)},
              {"initial_state", "|+z>|0>"}};
    t.columns.push_back("t");
    for (std::size_t i = 0; i < methods.size(); ++i) {
        const std::string name(to_string(methods[i]));
        const dynamics::TimeSeries& s = series[i];
        t.columns.push_back("sigma_z_" + name);
        t.meta.emplace_back(name + "_truncation", std::to_string(s.truncation));
        if (methods[i] == Method::BGRWA) {
            t.meta.emplace_back("bgrwa_modes", std::to_string(s.modes));
            t.meta.emplace_back("bgrwa_completeness", format_number(s.completeness));
        } else {
            t.meta.emplace_back("ed_max_norm_drift", format_number(s.max_norm_drift));
        }
    }
    for (std::size_t j = 0; j < grid.size(); ++j) {
        std::vector<double> row{grid[j]};
        for (const auto& s : series)
            row.push_back(s.samples[j].sigma_z);
        t.rows.push_back(rounded(std::move(row)));
    }
    return t;
}

Table run_flux_scan(const RunConfig& c)
{
    validate(c);
    const std::vector<Method> methods = methods_of(c);
    const int n = levels_of(c);
    const experiment::FluxQubitParams fq = flux_params(c);
    const bool with_ed = has(methods, Method::ED);

    const experiment::FluxScan bg = experiment::flux_scan(fq, n, Method::BGRWA, c.jobs);
    std::optional<experiment::FluxScan> ed;
    if (with_ed)
        ed = experiment::flux_scan(fq, n, Method::ED, c.jobs);

    Table t;
    t.meta = {{"command", "flux-scan"},
              {"g_ghz", format_number(fq.g_ghz)},
              {"omega_ghz", format_number(fq.omega_ghz)},
              {"delta_ghz", format_number(fq.delta_ghz)},
              {"ip_na", format_number(fq.ip_na)},
              {"flux", c.flux},
              {"transitions", std::to_string(n)},
              {"methods", join_methods(methods)},
              {"flux_quantum", "h/2e"}};
    t.columns = {"flux_ratio", "epsilon_ghz"};
    const auto add_columns = [&](const std::string& prefix) {
        for (int k = 1; k <= n; ++k)
            t.columns.push_back(prefix + std::to_string(k));
    };
    add_columns("bgrwa_T");
    if (with_ed) {
        add_columns("ed_T");
        add_columns("dev_T");
    }
    for (std::size_t i = 0; i < bg.rows.size(); ++i) {
        const auto& r = bg.rows[i];
        std::vector<double> row{r.flux_ratio, r.epsilon_ghz};
        row.insert(row.end(), r.transitions_ghz.begin(), r.transitions_ghz.end());
        if (with_ed) {
            const auto& e = ed->rows[i].transitions_ghz;
            row.insert(row.end(), e.begin(), e.end());
            for (int k = 0; k < n; ++k)
                row.push_back(r.transitions_ghz[static_cast<std::size_t>(k)] - e[static_cast<std::size_t>(k)]);
        }
        t.rows.push_back(rounded(std::move(row)));
    }
    return t;
}

Table run(const RunConfig& config)
{
    switch (config.command) {
    case Command::Spectrum: return run_spectrum(config);
    case Command::Compare: return run_compare(config);
    case Command::Dynamics: return run_dynamics(config);
    case Command::FluxScan: return run_flux_scan(config);
    }
    throw ConfigError("unknown command");
}

std::string to_csv(const Table& table)
{
    std::string out;
    for (const auto& [key, value] : table.meta)
        out += "# " + key + ": " + value + "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out += (i ? "," : "") + table.columns[i];
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + format_number(row[i]);
        out += "\n";
    }
    return out;
}

std::string to_json(const Table& table)
{
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.meta)
        meta[key] = value;
    nlohmann::ordered_json doc;
    doc["meta"] = meta;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    return doc.dump(1) + "\n";
}

Table table_from_csv(std::string_view text)
{
    Table t;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            const std::size_t colon = line.find(": ");
            if (colon == std::string::npos)
                throw ConfigError("malformed metadata line: " + line);
            t.meta.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
        } else if (!header_seen) {
            t.columns = split(line, ',');
            header_seen = true;
        } else if (!line.empty()) {
            std::vector<double> row;
            for (const auto& cell : split(line, ','))
                row.push_back(parse_double(cell, "csv cell"));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

Table table_from_json(std::string_view text)
{
    const auto doc = nlohmann::ordered_json::parse(text);
    Table t;
    for (const auto& [key, value] : doc.at("meta").items())
        t.meta.emplace_back(key, value.get<std::string>());
    t.columns = doc.at("columns").get<std::vector<std::string>>();
    t.rows = doc.at("rows").get<std::vector<std::vector<double>>>();
    return t;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out)
{
    CLI::App app{"Biased qubit-oscillator spectra and dynamics (BGRWA, VVP, exact diagonalization)", "qrabi"};
    app.set_config("--config", "", "key = value file; command-line flags override it");

    RunConfig c;
    std::string command;
    std::string methods;
    std::string format = "csv";
    std::string g;
    double delta = 0, epsilon = 0, omega = 0;
    int levels = 0, truncation = 0;

    app.add_option("command", command, "spectrum | compare | dynamics | flux-scan")
        ->required()
        ->check(CLI::IsMember({"spectrum", "compare", "dynamics", "flux-scan"}));
    auto* o_delta = app.add_option("--delta", delta, "tunneling amplitude (GHz for flux-scan)");
    auto* o_eps = app.add_option("--epsilon", epsilon, "static bias");
    auto* o_omega = app.add_option("--omega", omega, "oscillator frequency (GHz for flux-scan)");
    auto* o_g = app.add_option("--g", g, "coupling; start:stop:step sweep for spectrum/compare");
    auto* o_levels = app.add_option("--levels", levels, "levels per method (transitions for flux-scan)");
    auto* o_methods = app.add_option("--methods,--method", methods, "comma list of bgrwa, ed, vvp");
    auto* o_trunc = app.add_option("--truncation", truncation, "fixed Fock truncation N (default: converge)");
    app.add_option("--tol", c.tol, "ED convergence tolerance");
    app.add_option("--tmax", c.tmax, "dynamics end time");
    app.add_option("--samples", c.samples, "dynamics sample count");
    app.add_option("--n-modes", c.n_modes, "BGRWA blocks in the dynamics expansion (0 = auto)");
    app.add_option("--ip", c.ip_na, "persistent current in nA");
    app.add_option("--flux", c.flux, "flux ratio sweep start:stop:step");
    app.add_option("--vvp-l", c.vvp_l, "VVP mixing offset: integer or 'best'");
    app.add_option("--out", c.out, "output file (default stdout)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", c.jobs, "worker threads for sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    if (command == "spectrum") c.command = Command::Spectrum;
    else if (command == "compare") c.command = Command::Compare;
    else if (command == "dynamics") c.command = Command::Dynamics;
    else c.command = Command::FluxScan;

    if (o_delta->count()) c.delta = delta;
    if (o_eps->count()) c.epsilon = epsilon;
    if (o_omega->count()) c.omega = omega;
    if (o_g->count()) c.g = g;
    if (o_levels->count()) c.levels = levels;
    if (o_trunc->count()) c.truncation = truncation;
    if (o_methods->count()) {
        try {
            for (const auto& name : split(methods, ','))
                c.methods.push_back(parse_method(name));
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }
    c.format = format == "json" ? Format::Json : Format::Csv;
    validate(c);
    return c;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::optional<RunConfig> config;
    try {
        config = parse_args(argc, argv, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (!config)
        return 0;

    std::string text;
    try {
        const Table table = run(*config);
        text = config->format == Format::Json ? to_json(table) : to_csv(table);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "engine error: " << e.what() << "\n";
        if (e.code() == ErrorCode::IncompleteBasis)
            err << "hint: raise --n-modes\n";
        if (e.code() == ErrorCode::TruncationTooSmall)
            err << "hint: raise --truncation or drop it to let the solver choose\n";
        return 3;
    }

    if (config->out.empty()) {
        out << text;
    } else {
        std::ofstream file(config->out, std::ios::binary);
        file << text;
        if (!file) {
            err << "error: cannot write " << config->out << "\n";
            return 2;
        }
    }
    return 0;
}

} // namespace qrabi::cli
