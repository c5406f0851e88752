#include "rmscat/rosenmorse.hpp"

#include <cmath>

#include "rmscat/errors.hpp"

namespace rmscat::rosenmorse {

RMParams::RMParams(double a, double b) : alpha(a), beta(b) {
    if (!(alpha > -0.5)) throw DomainError("RMParams: alpha must exceed -1/2");
    if (!(beta >= 0.0)) {
        throw DomainError(
            "RMParams: beta must be nonnegative (use x -> -x, k -> -k for beta < 0)");
    }
}

double potential(const RMParams& p, double x) {
    const double s = 1.0 / std::cosh(x);
    return -p.alpha * (p.alpha + 1.0) * s * s + 2.0 * p.beta * std::tanh(x);
}

double energy_of_k(double beta, double k) {
    if (k == 0.0) throw ZeroMomentumError("energy_of_k: k must be nonzero");
    return -2.0 * beta + k * k;
}

genleg::ChannelParams params_from_k(const RMParams& p, double k) {
    const double ak = std::abs(k);
    if (ak <= kMinMomentum) {
        throw ZeroMomentumError("params_from_k: |k| too close to zero");
    }
    const double threshold = 2.0 * std::sqrt(p.beta);
    if (std::abs(ak - threshold) <= kThresholdWidth) {
        throw ThresholdError("params_from_k: |k| too close to the barrier threshold");
    }
    genleg::ChannelParams cp;
    cp.nu = p.alpha;
    const double disc = k * k - 4.0 * p.beta;
    if (disc < 0.0) {
        const double s = std::sqrt(-disc);
        cp.mu = Complex{-0.5 * s, 0.5 * k};
        cp.eta = std::conj(cp.mu);
        cp.regime = genleg::Regime::BelowBarrier;
    } else {
        const double q = (k > 0.0 ? 1.0 : -1.0) * std::sqrt(disc);
        cp.mu = Complex{0.0, 0.5 * (q + k)};
        cp.eta = Complex{0.0, 0.5 * (q - k)};
        cp.regime = genleg::Regime::AboveBarrier;
    }
    return cp;
}

Complex scattering_state(const RMParams& p, double k, double x) {
    return genleg::eval_D_tanh(params_from_k(p, k), x);
}

Complex scattering_state_dx(const RMParams& p, double k, double x) {
    return genleg::eval_D_tanh_dx(params_from_k(p, k), x);
}

std::vector<BoundState> bound_spectrum(const RMParams& p) {
    std::vector<BoundState> states;
    for (int n = 0; static_cast<double>(n) < p.alpha; ++n) {
        const double an = p.alpha - static_cast<double>(n);
        if (!(an * an > p.beta)) break;
        BoundState s;
        s.n = n;
        s.eta = static_cast<double>(n) - p.alpha;
        s.mu = -p.beta / an;
        s.energy = -an * an - p.beta * p.beta / (an * an);
        states.push_back(s);
    }
    return states;
}

}  // namespace rmscat::rosenmorse
