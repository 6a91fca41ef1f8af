#include <doctest.h>

#include <cmath>
#include <complex>

#include "qrabi/dynamics.hpp"
#include "qrabi/error.hpp"
#include "qrabi/exact.hpp"

using namespace qrabi;
namespace dy = qrabi::dynamics;

TEST_CASE("grid and initial state")
{
    const auto grid = dy::uniform_grid(10.0, 5);
    CHECK(grid == std::vector<double>{0.0, 2.5, 5.0, 7.5, 10.0});
    CHECK(dy::uniform_grid(3.0, 1) == std::vector<double>{0.0});
    const StateVector s = dy::initial_state(10);
    CHECK(dy::sigma_z_expectation(s) == 1.0);
    CHECK_THROWS_AS(dy::initial_state(0), Error);
}

TEST_CASE("bare qubit oscillates at the tunnel frequency")
{
    // g = 0, ε = 0: <σz(t)> = cos(Δ t).
    const ModelParams p{0.8, 0.0, 1.0, 0.0};
    const auto grid = dy::uniform_grid(20.0, 81);
    const auto ed = dy::evolve_ed(p, grid, 6);
    const auto bg = dy::evolve_bgrwa(p, grid, 4, 6);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(ed.samples[i].sigma_z == doctest::Approx(std::cos(0.8 * grid[i])).scale(1.0).epsilon(1e-10));
        CHECK(bg.samples[i].sigma_z == doctest::Approx(std::cos(0.8 * grid[i])).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("exact propagation is unitary")
{
    const ModelParams p{1.0, 0.3, 1.0, 0.5};
    const auto ts = dy::evolve_ed(p, dy::uniform_grid(50.0, 200), 40);
    CHECK(ts.max_norm_drift < 1e-12);
    CHECK(ts.samples.front().sigma_z == doctest::Approx(1.0));
    for (const auto& s : ts.samples)
        CHECK(std::abs(s.sigma_z) <= 1.0 + 1e-12);
}

TEST_CASE("BGRWA expansion starts at the initial state and converges to ED as g shrinks")
{
    const auto grid = dy::uniform_grid(30.0, 300);
    const int modes = 20;
    auto worst = [&](double g) {
        const ModelParams p{1.0, 0.1, 1.0, g};
        const auto bg = dy::evolve_bgrwa(p, grid, modes, dy::bgrwa_truncation(p, modes));
        const auto ed = dy::evolve_ed(p, grid, dy::ed_truncation(p, modes));
        CHECK(bg.completeness > 1.0 - 1e-10);
        CHECK(bg.samples.front().sigma_z == doctest::Approx(1.0).epsilon(1e-9));
        double w = 0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            w = std::max(w, std::abs(bg.samples[i].sigma_z - ed.samples[i].sigma_z));
        return w;
    };
    const double a = worst(0.05), b = worst(0.025);
    CHECK(a < 0.05);
    CHECK(b < 0.6 * a);
}

TEST_CASE("too few modes are reported")
{
    const ModelParams p{1.0, 0.0, 1.0, 1.0};
    CHECK_THROWS_AS(dy::evolve_bgrwa(p, dy::uniform_grid(1.0, 2), 1, 40), Error);
}

TEST_CASE("spectrum of the ED signal peaks at the qubit transition")
{
    // Discrete Fourier power of σz(t) - mean on a fine frequency grid. Off
    // resonance almost all weight sits in the E1 - E0 line.
    const ModelParams p{0.4, 0.0, 1.0, 0.1};
    const auto grid = dy::uniform_grid(400.0, 4000);
    const auto ts = dy::evolve_ed(p, grid, 30);
    double mean = 0;
    for (const auto& s : ts.samples)
        mean += s.sigma_z / static_cast<double>(ts.samples.size());
    double best_w = 0, best_power = 0;
    for (double w = 0.05; w < 2.5; w += 0.001) {
        std::complex<double> acc = 0;
        for (const auto& s : ts.samples)
            acc += (s.sigma_z - mean) * std::polar(1.0, -w * s.t);
        if (std::norm(acc) > best_power) {
            best_power = std::norm(acc);
            best_w = w;
        }
    }
    const auto levels = exact::converge(p, 2, 1e-12).energies;
    CHECK(std::abs(best_w - (levels[1] - levels[0])) < 2e-3);
}
