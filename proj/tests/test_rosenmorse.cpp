#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmscat/errors.hpp"
#include "rmscat/rosenmorse.hpp"

using rmscat::Complex;
namespace rm = rmscat::rosenmorse;
namespace gl = rmscat::genleg;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(rm::RMParams(0.0, 0.0));
    CHECK_NOTHROW(rm::RMParams(2.5, 1.0));
    CHECK_THROWS_AS(rm::RMParams(-0.6, 0.0), rmscat::DomainError);
    CHECK_THROWS_AS(rm::RMParams(1.0, -0.1), rmscat::DomainError);
}

TEST_CASE("potential shape") {
    rm::RMParams p(2.0, 0.5);
    CHECK(rm::potential(p, 0.0) == doctest::Approx(-6.0));
    // tails approach the asymptotic offsets +-2 beta
    CHECK(rm::potential(p, 30.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rm::potential(p, -30.0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("energy_of_k and the zero-momentum guard") {
    CHECK(rm::energy_of_k(0.25, 1.2) == doctest::Approx(-0.5 + 1.44));
    CHECK_THROWS_AS(rm::energy_of_k(0.25, 0.0), rmscat::ZeroMomentumError);
    CHECK_THROWS_AS(rm::params_from_k(rm::RMParams(1.0, 0.25), 0.5 * rm::kMinMomentum),
                    rmscat::ZeroMomentumError);
}

TEST_CASE("params_from_k satisfies the algebraic invariants") {
    rm::RMParams p(1.7, 0.8);
    for (double k : {0.3, 1.0, 1.78, 1.8, 2.5, 6.0, -2.5}) {
        const gl::ChannelParams cp = rm::params_from_k(p, k);
        const Complex prod = cp.mu * cp.eta;
        const Complex sumsq = cp.mu * cp.mu + cp.eta * cp.eta;
        CHECK(std::abs(prod - Complex(p.beta, 0.0)) < 1e-12);
        CHECK(std::abs(sumsq - Complex(2.0 * p.beta - k * k, 0.0)) < 1e-12);
        CHECK(cp.nu == p.alpha);
        const bool above = k * k > 4.0 * p.beta;
        CHECK(cp.regime ==
              (above ? gl::Regime::AboveBarrier : gl::Regime::BelowBarrier));
    }
}

TEST_CASE("params_from_k guards the threshold band") {
    rm::RMParams p(1.0, 1.0);
    CHECK_THROWS_AS(rm::params_from_k(p, 2.0), rmscat::ThresholdError);
    CHECK_THROWS_AS(rm::params_from_k(p, 2.0 + 0.5 * rm::kThresholdWidth),
                    rmscat::ThresholdError);
    CHECK_NOTHROW(rm::params_from_k(p, 2.001));
}

TEST_CASE("scattering state solves the ODE (finite-difference residual)") {
    rm::RMParams p(2.5, 1.0);
    const double k = 1.4;
    const double E = rm::energy_of_k(p.beta, k);
    const double h = 1e-4;
    for (double x : {-3.0, -0.5, 0.0, 1.1, 4.0}) {
        const Complex psi = rm::scattering_state(p, k, x);
        const Complex d2 = (rm::scattering_state(p, k, x + h) - 2.0 * psi +
                            rm::scattering_state(p, k, x - h)) /
                           (h * h);
        const Complex resid = d2 + (E - rm::potential(p, x)) * psi;
        CHECK(std::abs(resid) < 1e-6 * std::max(1.0, std::abs(psi)));
    }
}

TEST_CASE("scattering_state_dx agrees with a central difference") {
    rm::RMParams p(1.3, 0.25);
    const double k = 2.2, h = 1e-5;
    for (double x : {-2.0, 0.4, 3.3}) {
        const Complex fd =
            (rm::scattering_state(p, k, x + h) - rm::scattering_state(p, k, x - h)) /
            (2.0 * h);
        CHECK(std::abs(rm::scattering_state_dx(p, k, x) - fd) < 1e-8);
    }
}

TEST_CASE("bound spectrum closed form") {
    SUBCASE("symmetric well alpha=2, beta=0") {
        const auto s = rm::bound_spectrum(rm::RMParams(2.0, 0.0));
        REQUIRE(s.size() == 2);
        CHECK(s[0].energy == doctest::Approx(-4.0));
        CHECK(s[1].energy == doctest::Approx(-1.0));
    }
    SUBCASE("tilted well alpha=2.5, beta=1") {
        // E_n = -(alpha-n)^2 - beta^2/(alpha-n)^2; n=2 fails (alpha-n)^2 > beta
        const auto s = rm::bound_spectrum(rm::RMParams(2.5, 1.0));
        REQUIRE(s.size() == 2);
        CHECK(s[0].energy == doctest::Approx(-6.25 - 1.0 / 6.25));
        CHECK(s[1].energy == doctest::Approx(-2.25 - 1.0 / 2.25));
        CHECK(s[0].n == 0);
        CHECK(s[1].n == 1);
        // orders are real with mu + eta < 0 and mu - eta > 0
        for (const auto& b : s) {
            CHECK(b.mu + b.eta < 0.0);
            CHECK(b.mu - b.eta > 0.0);
            CHECK(b.mu * b.eta == doctest::Approx(1.0));
        }
    }
    SUBCASE("no bound states when the tilt swamps the well") {
        CHECK(rm::bound_spectrum(rm::RMParams(0.4, 1.0)).empty());
    }
    SUBCASE("shallow symmetric well still binds once") {
        CHECK(rm::bound_spectrum(rm::RMParams(0.4, 0.0)).size() == 1);
    }
}

TEST_CASE("bound-state wavefunction decays on both ends") {
    rm::RMParams p(2.5, 1.0);
    for (const auto& b : rm::bound_spectrum(p)) {
        gl::ChannelParams cp{{b.mu, 0.0}, {b.eta, 0.0}, p.alpha, gl::Regime::Bound};
        gl::GenLegendre D(cp);
        const double mid = std::abs(D.eval_tanh(0.0));
        CHECK(std::abs(D.eval_tanh(18.0)) < 1e-3 * mid);
        CHECK(std::abs(D.eval_tanh(-18.0)) < 1e-3 * mid);
        // and keeps decaying, no admixture of the growing branch
        CHECK(std::abs(D.eval_tanh(24.0)) < std::abs(D.eval_tanh(18.0)));
        CHECK(std::abs(D.eval_tanh(-24.0)) < std::abs(D.eval_tanh(-18.0)));
    }
}
