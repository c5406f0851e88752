#include "rmscat/scatter.hpp"

#include <cmath>
#include <limits>

#include "rmscat/errors.hpp"
#include "rmscat/specfun.hpp"

namespace rmscat::scatter {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

// log sinh(u), u > 0, stable for large u.
double log_sinh(double u) {
    return u - kLn2 + std::log1p(-std::exp(-2.0 * u));
}

// log(s2a + sinh^2 u), u >= 0, with s2a = sin^2(pi alpha); no overflow for
// large u since the e^{2u} growth stays in log space.
double log_s2a_plus_sinh2(double s2a, double u) {
    const double ls = u > 0.0 ? 2.0 * log_sinh(u)
                              : -std::numeric_limits<double>::infinity();
    if (!(s2a > 0.0)) return ls;
    const double lsa = std::log(s2a);
    const double m = std::max(ls, lsa);
    return m + std::log(std::exp(ls - m) + std::exp(lsa - m));
}

}  // namespace

std::pair<Complex, Complex> amplitude_ratios(const rosenmorse::RMParams& p, double k) {
    const genleg::ChannelParams cp = rosenmorse::params_from_k(p, k);
    const Complex mu = cp.mu, eta = cp.eta;
    const Complex nu{cp.nu, 0.0};
    const Complex nB[] = {mu - eta, 1.0 - mu + nu, -mu - nu};
    const Complex dB[] = {-nu - eta, nu + 1.0 - eta, -mu + eta};
    const Complex nC[] = {1.0 - mu + nu, -mu - nu};
    const Complex dC[] = {1.0 - mu - eta, -mu + eta};
    return {specfun::gamma_ratio(nB, dB), specfun::gamma_ratio(nC, dC)};
}

double reflection(const rosenmorse::RMParams& p, double k) {
    const genleg::ChannelParams cp = rosenmorse::params_from_k(p, k);
    if (cp.regime == genleg::Regime::BelowBarrier) return 1.0;
    const double ak = std::abs(k);
    const double q = std::sqrt(k * k - 4.0 * p.beta);
    const double s2a = std::pow(std::sin(kPi * p.alpha), 2);
    return std::exp(log_s2a_plus_sinh2(s2a, 0.5 * kPi * (ak - q)) -
                    log_s2a_plus_sinh2(s2a, 0.5 * kPi * (ak + q)));
}

double transmission(const rosenmorse::RMParams& p, double k) {
    const genleg::ChannelParams cp = rosenmorse::params_from_k(p, k);
    if (cp.regime == genleg::Regime::BelowBarrier) return 0.0;
    const double ak = std::abs(k);
    const double q = std::sqrt(k * k - 4.0 * p.beta);
    const double s2a = std::pow(std::sin(kPi * p.alpha), 2);
    return std::exp(log_sinh(kPi * ak) + log_sinh(kPi * q) -
                    log_s2a_plus_sinh2(s2a, 0.5 * kPi * (ak + q)));
}

ScatterResult solve(const rosenmorse::RMParams& p, double k) {
    ScatterResult r;
    r.k = k;
    auto [boa, coa] = amplitude_ratios(p, k);
    r.B_over_A = boa;
    r.C_over_A = coa;
    r.R = reflection(p, k);
    r.T = transmission(p, k);
    return r;
}

}  // namespace rmscat::scatter
