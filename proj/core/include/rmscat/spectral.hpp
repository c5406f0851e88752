#pragma once

#include <vector>

#include "rmscat/genleg.hpp"
#include "rmscat/quadrature.hpp"
#include "rmscat/rosenmorse.hpp"
#include "rmscat/types.hpp"

namespace rmscat::spectral {

/// Spectral density w(k) sampled on a k grid.
struct SpectralDensity {
    rosenmorse::RMParams params;
    std::vector<double> k_grid;
    std::vector<double> w_values;
};

/// |LHS - RHS| of the cross-product identity
///   int_a^b [(rho^2+gamma^2-mu^2-eta^2+2x(rho gamma - mu eta))/(1-x^2)
///            - sigma(sigma+1) + nu(nu+1)] D1 D2 dx
///   = [(1-x^2)(D1 D2' - D2 D1')]_a^b
/// with the left side by adaptive quadrature.
double integral_identity_residual(const genleg::ChannelParams& p1,
                                  const genleg::ChannelParams& p2, double a, double b,
                                  quadrature::QuadratureControl ctl = {});

/// Continuum normalization weight w_{alpha,beta}(k) > 0; even in k.
double measure(const rosenmorse::RMParams& p, double k);

SpectralDensity sample_density(const rosenmorse::RMParams& p,
                               std::vector<double> k_grid);

/// int_{-L}^{L} conj(psi_p(x)) psi_k(x) dx by adaptive quadrature.
Complex windowed_inner_product(const rosenmorse::RMParams& p, double pk, double k,
                               double L, quadrature::QuadratureControl ctl = {});

/// The same quantity as a closed bracket:
/// (1/(k^2-p^2)) [psi_k (conj psi_p)' - conj(psi_p) psi_k'] at +L minus -L.
Complex boundary_term(const rosenmorse::RMParams& p, double pk, double k, double L);

/// F(k) = (1/w(k)) int f(x) conj(psi_k(x)) dx for each k in k_grid.
GridFunction forward_transform(const rosenmorse::RMParams& p, const GridFunction& f,
                               const std::vector<double>& k_grid);

/// f(x) = int F(k) psi_k(x) dk for each x in x_grid.
GridFunction inverse_transform(const rosenmorse::RMParams& p, const GridFunction& F,
                               const std::vector<double>& x_grid);

}  // namespace rmscat::spectral
