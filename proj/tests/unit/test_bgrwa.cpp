#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "qrabi/bgrwa.hpp"
#include "qrabi/error.hpp"

using namespace qrabi;
namespace bg = qrabi::bgrwa;

namespace {

Eigen::VectorXd real_part(const StateVector& s)
{
    CHECK(s.coeffs.imag().norm() == doctest::Approx(0.0));
    return s.coeffs.real();
}

std::vector<bg::Eigenstate> first_states(const ModelParams& p, int pairs)
{
    std::vector<bg::Eigenstate> states{bg::ground_state(p)};
    for (int n = 0; n < pairs; ++n) {
        states.push_back(bg::eigenstate(p, n, Branch::Plus));
        states.push_back(bg::eigenstate(p, n, Branch::Minus));
    }
    return states;
}

} // namespace

TEST_CASE("G0 and F1 are displaced-Fock matrix elements")
{
    for (double g : {0.05, 0.3, 0.7}) {
        const ModelParams p{1.0, 0.4, 1.0, g};
        const Eigen::MatrixXd d = oracle::displacement(2 * g, 12);
        for (int n = 0; n < 11; ++n) {
            CHECK(bg::g0_coefficient(p, n) == doctest::Approx(d(n, n)).scale(1.0).epsilon(1e-10));
            CHECK(bg::f1_coefficient(p, n) * std::sqrt(n + 1.0) ==
                  doctest::Approx(d(n + 1, n)).scale(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("G0 never exceeds one in magnitude")
{
    for (double g = 0.0; g <= 2.0; g += 0.1)
        for (int n = 0; n < 40; ++n)
            CHECK(std::abs(bg::g0_coefficient({1, 0, 1, g}, n)) <= 1.0 + 1e-12);
}

TEST_CASE("renormalized bias against 50-digit arithmetic")
{
    using oracle::big;
    for (double delta : {0.5, 1.5})
        for (double eps : {0.1, 1.0})
            for (double g : {0.2, 0.8})
                for (int n : {0, 3, 9}) {
                    const double expected =
                        static_cast<double>(oracle::renormalized_bias(big(delta), big(eps), big(g), n));
                    CHECK(bg::renormalized_bias({delta, eps, 1.0, g}, n) ==
                          doctest::Approx(expected).epsilon(1e-12));
                }
    CHECK_THROWS_AS(bg::renormalized_bias({0, 0, 1, 0.3}, 0), Error);
}

TEST_CASE("closed-form eigenvalues diagonalize the block")
{
    for (double eps : {0.0, 0.3, -1.2})
        for (double g : {0.0, 0.25, 0.9})
            for (int n = 0; n < 10; ++n) {
                const ModelParams p{1.3, eps, 1.0, g};
                const bg::Block b = bg::block(p, n);
                Eigen::Matrix2d m;
                m << b[0][0], b[0][1], b[1][0], b[1][1];
                const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues();
                const bg::EigenPair pair = bg::eigenvalues(p, n);
                CHECK(pair.minus == doctest::Approx(ev[0]).scale(1.0).epsilon(1e-12));
                CHECK(pair.plus == doctest::Approx(ev[1]).scale(1.0).epsilon(1e-12));
            }
}

TEST_CASE("block spinors are eigenvectors of the block")
{
    const ModelParams p{0.8, 0.6, 1.0, 0.45};
    for (int n = 0; n < 8; ++n)
        for (Branch br : {Branch::Plus, Branch::Minus}) {
            const bg::Eigenstate s = bg::eigenstate(p, n, br);
            const auto c = bg::block_spinor(s);
            const bg::Block b = bg::block(p, n);
            CHECK(b[0][0] * c[0] + b[0][1] * c[1] == doctest::Approx(s.energy * c[0]).scale(1.0));
            CHECK(b[1][0] * c[0] + b[1][1] * c[1] == doctest::Approx(s.energy * c[1]).scale(1.0));
        }
}

TEST_CASE("energy of every lab-frame state equals its BGRWA level")
{
    for (const ModelParams p : {ModelParams{1.0, 0.5, 1.0, 0.6}, ModelParams{-0.7, 1.1, 2.0, 0.5}}) {
        const int truncation = 70;
        const Eigen::MatrixXd h = oracle::hamiltonian(p.delta, p.epsilon, p.omega, p.g, truncation);
        for (const auto& s : first_states(p, 6)) {
            const Eigen::VectorXd v = real_part(bg::lab_frame_vector(s, p, truncation));
            CHECK(v.dot(h * v) == doctest::Approx(s.energy).scale(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("lab-frame states are orthonormal")
{
    const ModelParams p{1.0, 0.5, 1.0, 0.4};
    const auto states = first_states(p, 6);
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const auto a = bg::lab_frame_vector(states[i], p, 60).coeffs;
            const auto b = bg::lab_frame_vector(states[j], p, 60).coeffs;
            CHECK(std::abs(a.dot(b)) == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-10));
        }
}

TEST_CASE("uncoupled ground state is the exact ground state")
{
    for (double delta : {1.0, -0.6})
        for (double eps : {0.0, 0.7, -0.3}) {
            const ModelParams p{delta, eps, 1.0, 0.0};
            const Eigen::MatrixXd h = oracle::hamiltonian(delta, eps, 1.0, 0.0, 4);
            const Eigen::VectorXd v = real_part(bg::lab_frame_vector(bg::ground_state(p), p, 4));
            CHECK((h * v - bg::ground_energy(p) * v).norm() == doctest::Approx(0.0).scale(1.0));
            const double y = std::hypot(eps, delta);
            CHECK(bg::ground_energy(p) == doctest::Approx(-y / 2));
        }
}

TEST_CASE("unbiased states carry definite parity")
{
    const ModelParams p{1.0, 0.0, 1.0, 0.35};
    const int truncation = 50;
    for (const auto& s : first_states(p, 5)) {
        const Eigen::VectorXd v = real_part(bg::lab_frame_vector(s, p, truncation));
        Eigen::VectorXd pv(v.size()); // σx (-1)^{a†a}
        for (int n = 0; n <= truncation; ++n) {
            const double sign = n % 2 ? -1.0 : 1.0;
            pv[StateVector::index(Qubit::Up, n, truncation)] = sign * v[StateVector::index(Qubit::Down, n, truncation)];
            pv[StateVector::index(Qubit::Down, n, truncation)] = sign * v[StateVector::index(Qubit::Up, n, truncation)];
        }
        CHECK(std::abs(v.dot(pv)) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("spectrum is even in the bias")
{
    for (double g : {0.1, 0.5, 1.0}) {
        const auto a = sorted_levels(bg::spectrum({1.2, 0.4, 1.0, g}, 12), 20);
        const auto b = sorted_levels(bg::spectrum({1.2, -0.4, 1.0, g}, 12), 20);
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == doctest::Approx(b[i]).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("energies scale with omega")
{
    const ModelParams p{2.0, 1.0, 2.0, 0.6};
    const auto a = sorted_levels(bg::spectrum(p, 10), 12);
    const auto b = sorted_levels(bg::spectrum(p.dimensionless(), 10), 12);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == doctest::Approx(2.0 * b[i]));
}

TEST_CASE("pair count covers the requested lowest levels")
{
    for (double eps : {0.0, 1.0, 3.0})
        for (double g : {0.0, 0.4, 1.2}) {
            const ModelParams p{2.5, eps, 1.0, g};
            const int k = 9;
            const auto few = sorted_levels(bg::spectrum(p, bg::pair_count_for_levels(p, k)), k);
            const auto many = sorted_levels(bg::spectrum(p, 80), k);
            for (int i = 0; i < k; ++i)
                CHECK(few[i] == doctest::Approx(many[i]));
        }
}

TEST_CASE("too small a truncation is reported")
{
    const ModelParams p{1.0, 0.2, 1.0, 1.5};
    CHECK_THROWS_AS(bg::lab_frame_vector(bg::eigenstate(p, 6, Branch::Plus), p, 8), Error);
}
