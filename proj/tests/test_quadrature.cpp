#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmscat/errors.hpp"
#include "rmscat/quadrature.hpp"

using rmscat::Complex;
namespace q = rmscat::quadrature;

TEST_CASE("polynomials are integrated to machine precision") {
    const Complex got = q::integrate(
        [](double x) { return Complex(x * x * x - 2.0 * x + 1.0, 0.0); }, -1.0, 3.0);
    // antiderivative x^4/4 - x^2 + x: (81/4 - 9 + 3) - (1/4 - 1 - 1) = 16
    CHECK(std::abs(got - Complex(16.0, 0.0)) < 1e-12);
}

TEST_CASE("oscillatory integrand") {
    const double w = 37.0;
    const Complex got =
        q::integrate([w](double x) { return std::exp(Complex(0.0, w * x)); }, 0.0, 2.0,
                     {1e-12, 1e-12, 32, 8});
    const Complex want = (std::exp(Complex(0.0, 2.0 * w)) - 1.0) / Complex(0.0, w);
    CHECK(std::abs(got - want) < 1e-10);
}

TEST_CASE("integrable endpoint behavior converges") {
    const Complex got =
        q::integrate([](double x) { return Complex(std::sqrt(x), 0.0); }, 0.0, 1.0);
    CHECK(std::abs(got - Complex(2.0 / 3.0, 0.0)) < 1e-9);
}

TEST_CASE("nonintegrable singularity raises QuadratureError") {
    CHECK_THROWS_AS(
        q::integrate([](double x) { return Complex(1.0 / x, 0.0); }, 0.0, 1.0,
                     {1e-10, 1e-10, 20, 1}),
        rmscat::QuadratureError);
}

TEST_CASE("integrate_samples matches the closed form on a smooth function") {
    const int n = 2001;
    std::vector<double> nodes(n);
    std::vector<Complex> vals(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = -1.0 + 2.0 * i / (n - 1);
        vals[i] = Complex(std::exp(nodes[i]), std::sin(nodes[i]));
    }
    const Complex want(std::exp(1.0) - std::exp(-1.0), 0.0);  // sin integrates to 0
    CHECK(std::abs(q::integrate_samples(nodes, vals) - want) < 1e-10);
}

TEST_CASE("integrate_samples handles an even sample count") {
    const int n = 1000;
    std::vector<double> nodes(n);
    std::vector<Complex> vals(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = i / double(n - 1);
        vals[i] = Complex(nodes[i] * nodes[i], 0.0);
    }
    CHECK(std::abs(q::integrate_samples(nodes, vals) - Complex(1.0 / 3.0, 0.0)) <
          1e-7);
}
