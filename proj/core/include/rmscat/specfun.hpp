#pragma once

#include <span>

#include "rmscat/types.hpp"

namespace rmscat::specfun {

/// Principal-branch log-gamma, accurate to ~1e-14 relative (as exp) for |z| <= 50.
/// Throws PoleError within 1e-12 of a nonpositive integer.
Complex log_gamma(Complex z);

/// Gamma function via exp(log_gamma). Throws DomainError on overflow.
Complex gamma(Complex z);

/// Gauss hypergeometric function F(a,b;c;z) for real z in [0,1).
///
/// Direct power series for z <= 1/2; the linear transformation to argument
/// 1-z otherwise, which requires c-a-b away from the integers.
Complex hyp2f1(Complex a, Complex b, Complex c, double z, SeriesControl ctl = {});

/// As hyp2f1, with the complement 1-z supplied exactly by the caller.
/// Needed when z is so close to 1 that 1-z underflows in double subtraction.
Complex hyp2f1_zc(Complex a, Complex b, Complex c, double z, double one_minus_z,
                  SeriesControl ctl = {});

/// dF/dz = (ab/c) F(a+1,b+1;c+1;z).
Complex hyp2f1_derivative(Complex a, Complex b, Complex c, double z,
                          SeriesControl ctl = {});

/// Product of gammas of `num` divided by product of gammas of `den`,
/// assembled in log space.
///
/// Poles are resolved as limits: a denominator pole with no matching
/// numerator pole annihilates the ratio (returns 0); numerator poles matched
/// by an equal-argument denominator pole cancel; an unmatched numerator pole
/// throws PoleError naming the argument.
Complex gamma_ratio(std::span<const Complex> num, std::span<const Complex> den);

namespace detail {

/// Raw power series, any 0 <= z < 1 (slow near 1). Exposed for cross-checks.
Complex gauss_series(Complex a, Complex b, Complex c, double z, SeriesControl ctl);

/// True when z is within tol of a nonpositive integer.
bool near_nonpositive_integer(Complex z, double tol = 1e-12);

}  // namespace detail

}  // namespace rmscat::specfun
