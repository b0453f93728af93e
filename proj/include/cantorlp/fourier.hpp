#ifndef CANTORLP_FOURIER_HPP
#define CANTORLP_FOURIER_HPP

#include <complex>
#include <span>

#include "cantorlp/measure.hpp"

namespace cantorlp {

// sin(pi x), cos(pi x) with the period handled by exact argument reduction,
// so accuracy does not degrade for large |x|.
double sinpi(double x);
double cospi(double x);

// FT of the uniform probability measure on [0,1]:
//   phi(t) = int_0^1 e^{-2 pi i t x} dx = (1 - e^{-2 pi i t}) / (2 pi i t),
// with phi(0) = 1. Series switch-over for |2 pi t| < 1e-4 keeps relative
// accuracy near 1e-14 through the removable singularity.
std::complex<double> phi(double t);

// lambda0_hat(xi) = prod_j phi(xi_j), the FT of Lebesgue measure on [0,1]^d.
std::complex<double> lambda0_hat(std::span<const double> xi);

// FT of the uniform probability measure on corner + [0, side]^d.
std::complex<double> cube_ft(std::span<const double> corner, double side,
                             std::span<const double> xi);

// mu_hat(xi) = sum over atoms of mass * cube_ft. Forward convention e^{-2 pi i <x, xi>}.
std::complex<double> mu_hat(const CubeMeasure& mu, std::span<const double> xi);

// E mu_hat for one random subdivision of the unit cube:
//   lambda0_hat(rho xi) * lambda0_hat((1-rho) xi).
// Exactly M-independent. Rejects rho outside (0, 1/2).
std::complex<double> expected_mu_hat(double rho, std::span<const double> xi);

// Expectation of the subdivision FT for a general cube (corner, side):
// phase * prod_j phi(r xi_j) phi((side - r) xi_j) with r = rho * side.
std::complex<double> expected_subdivision_ft(std::span<const double> corner, double side,
                                             double rho, std::span<const double> xi);

// Pointwise dominator of |mu_hat|:
//   sum over atoms of mass * prod_j min(1, 1/(pi side |xi_j|)).
double envelope(const CubeMeasure& mu, std::span<const double> xi);

}  // namespace cantorlp

#endif
