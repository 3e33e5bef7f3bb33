// digamma.hpp: complex digamma function and the coth/digamma decomposition

#pragma once

#include <complex>

namespace heat {

using Complex = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// psi(z) on the complex plane.
//
// Shifts z upward with psi(z+1) = psi(z) + 1/z until |z| >= 10, then sums the
// Stirling series with seven Bernoulli terms; Re z < 0 goes through the
// reflection psi(z) = psi(1-z) - pi*cot(pi*z). Relative accuracy is ~1e-15
// away from the real zeros of psi.
//
// Throws PoleError within pole_tolerance of z = 0, -1, -2, ... and
// ValidationError for non-finite input.
Complex digamma(Complex z, double pole_tolerance = 1e-12);

// Real-axis convenience wrapper over the complex implementation.
double digamma(double x, double pole_tolerance = 1e-12);

// pi*coth(x) rebuilt from digamma functions:
//   pi*coth(x) = pi/x + i*psi(1 - i*x/pi) - i*psi(1 + i*x/pi)
// Only used as a consistency check of digamma() against std::tanh.
// Throws ValidationError at x = 0.
double coth_via_digamma(double x);

} // namespace heat
