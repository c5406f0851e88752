#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmscat/scatter.hpp"

using rmscat::Complex;
namespace rm = rmscat::rosenmorse;
namespace sc = rmscat::scatter;

TEST_CASE("matches the ODE baseline at (0.5, 0.25, 1.2)") {
    // frozen from a scipy DOP853 integration (tests/reference/generate_reference.py)
    rm::RMParams p(0.5, 0.25);
    const sc::ScatterResult r = sc::solve(p, 1.2);
    CHECK(r.R == doctest::Approx(0.021631492366).epsilon(1e-7));
    CHECK(r.T == doctest::Approx(0.978368507636).epsilon(1e-7));
    CHECK(std::abs(r.B_over_A - Complex(-0.100509462664, 0.107374765567)) < 1e-7);
    CHECK(std::abs(r.C_over_A - Complex(0.9660648353956681, 0.9146879026150821)) <
          1e-6);
}

TEST_CASE("unitarity R + T = 1 above the barrier") {
    for (double alpha : {0.3, 1.0, 2.5}) {
        for (double beta : {0.0, 0.25, 1.0}) {
            rm::RMParams p(alpha, beta);
            const double th = 2.0 * std::sqrt(beta);
            for (double k : {th + 0.02, th + 0.8, th + 3.0}) {
                const double s = sc::reflection(p, k) + sc::transmission(p, k);
                CHECK(std::abs(s - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("total reflection below the barrier") {
    rm::RMParams p(1.3, 1.0);
    for (double k : {0.1, 0.7, 1.5, 1.99}) {
        CHECK(sc::reflection(p, k) == 1.0);
        CHECK(sc::transmission(p, k) == 0.0);
    }
}

TEST_CASE("coefficients are even in k") {
    rm::RMParams p(0.8, 0.25);
    for (double k : {1.3, 2.7, 0.4}) {
        CHECK(sc::reflection(p, k) == doctest::Approx(sc::reflection(p, -k)));
        CHECK(sc::transmission(p, k) == doctest::Approx(sc::transmission(p, -k)));
    }
}

TEST_CASE("R equals |B/A|^2 and T equals (q/k)|C/A|^2") {
    rm::RMParams p(1.7, 0.5);
    for (double k : {1.6, 2.4, 5.0}) {
        const sc::ScatterResult r = sc::solve(p, k);
        const double q = std::sqrt(k * k - 4.0 * p.beta);
        CHECK(r.R == doctest::Approx(std::norm(r.B_over_A)).epsilon(1e-10));
        CHECK(r.T == doctest::Approx((q / k) * std::norm(r.C_over_A)).epsilon(1e-10));
    }
}

TEST_CASE("integer alpha is reflectionless at beta = 0") {
    for (double alpha : {1.0, 2.0, 3.0}) {
        rm::RMParams p(alpha, 0.0);
        for (double k : {0.6, 1.9}) {
            CHECK(sc::reflection(p, k) < 1e-25);
            CHECK(sc::transmission(p, k) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("no overflow at large k") {
    rm::RMParams p(2.5, 1.0);
    const sc::ScatterResult r = sc::solve(p, 40.0);
    CHECK(std::isfinite(r.R));
    CHECK(std::isfinite(r.T));
    CHECK(r.R + r.T == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.T > 0.999);
}
