// exact.hpp: heat currents from direct quadrature of the frequency integrals
//
//   Q1      = (hbar/2) int_0^inf  omega f12(omega) [coth(beta1 hbar omega/2) - coth(beta2 hbar omega/2)]
//   Q1_cl   = kb (T1 - T2) int_0^inf f12(omega)
//   Q1_q    = Q1 - Q1_cl, integrated independently through the digamma form of coth
//
// These are the reference values the closed forms are checked against.

#pragma once

#include <cstddef>

#include "heat/model.hpp"
#include "heat/quadrature.hpp"
#include "heat/response.hpp"

namespace heat {

struct QuadratureConfig {
    double rel_tol{1e-9};
    double abs_tol{1e-30};
    std::size_t max_subdivisions{2000};
    double tail_cut_multiplier{60.0};  // truncation point in units of max(omega_th, |lambda_-|)

    void validate() const;
};

// Q1 with its error estimate (quadrature + truncated tail bound). Never throws
// on a missed tolerance; `converged` reports it instead.
QuadratureResult heat_exact_detailed(const CircuitParams& p, const BathPair& b, TransferMode mode,
                                     const QuadratureConfig& q = {});

// Q1; throws ToleranceError when the requested accuracy is not reached.
double heat_exact(const CircuitParams& p, const BathPair& b, TransferMode mode,
                  const QuadratureConfig& q = {});

// int_lo^hi f12(omega) d omega; hi may be +infinity.
QuadratureResult transfer_integral(const CircuitParams& p, TransferMode mode, double lo, double hi,
                                   const QuadratureConfig& q = {});

// int_0^inf f12(omega) d omega, so that Q1_cl = kb (T1 - T2) * classical_integral.
double classical_integral(const CircuitParams& p, TransferMode mode, const QuadratureConfig& q = {});

// Q1 - Q1_cl evaluated as
//   (hbar/2) int_0^inf omega f12 (2/pi) [Im psi(1 + i beta1 hbar omega/2pi) - Im psi(1 + i beta2 hbar omega/2pi)],
// which is twice the real part of the half-line piece of the symmetric
// (-inf, inf) integral over psi(1 - i beta hbar omega / 2pi).
QuadratureResult quantum_integral_detailed(const CircuitParams& p, const BathPair& b, TransferMode mode,
                                           const QuadratureConfig& q = {});

double quantum_integral(const CircuitParams& p, const BathPair& b, TransferMode mode,
                        const QuadratureConfig& q = {});

} // namespace heat
