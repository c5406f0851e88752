#pragma once

#include <vector>

#include "rmscat/genleg.hpp"
#include "rmscat/types.hpp"

namespace rmscat::rosenmorse {

/// Dimensionless Rosen-Morse potential parameters:
/// V(x) = -alpha(alpha+1) sech^2 x + 2 beta tanh x.
///
/// beta >= 0 is enforced; beta < 0 maps onto this form by x -> -x, k -> -k.
struct RMParams {
    double alpha = 1.0;
    double beta = 0.0;

    RMParams(double a, double b);
};

struct BoundState {
    int n = 0;
    double energy = 0.0;
    double mu = 0.0;
    double eta = 0.0;
};

// Width of the excluded bands around k = 0 and |k| = 2 sqrt(beta).
inline constexpr double kMinMomentum = 1e-6;
inline constexpr double kThresholdWidth = 1e-6;

double potential(const RMParams& p, double x);

/// E = -2 beta + k^2; throws ZeroMomentumError at k = 0.
double energy_of_k(double beta, double k);

/// Channel parameters (mu, eta, nu=alpha) of the scattering state at
/// wavenumber k, tagged BelowBarrier or AboveBarrier.
genleg::ChannelParams params_from_k(const RMParams& p, double k);

/// psi_k(x) = D(tanh x) at the channel parameters of k.
Complex scattering_state(const RMParams& p, double k, double x);

/// d/dx of scattering_state.
Complex scattering_state_dx(const RMParams& p, double k, double x);

/// All bound states, ascending in n, from the closed-form pole condition:
/// eta = n - alpha, mu = -beta/(alpha - n), E = -(alpha-n)^2 - beta^2/(alpha-n)^2.
std::vector<BoundState> bound_spectrum(const RMParams& p);

}  // namespace rmscat::rosenmorse
