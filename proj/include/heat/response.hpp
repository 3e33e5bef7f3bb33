// response.hpp: frequency response of the coupled circuit
//
// The heat-transfer function f12(omega) couples bath 1 to bath 2. It is built two
// ways: from the normal-mode factors u_+ u_- (fast, used everywhere) and from the
// full 2x2 Green's function trace Tr[I_1 g I_2 g^dagger] (independent check).

#pragma once

#include "heat/digamma.hpp"
#include "heat/matrix2.hpp"
#include "heat/model.hpp"

namespace heat {

enum class TransferMode {
    ExactCubic,        // full cubic u_(+/-)(s)
    OverdampedLinear,  // (omega_pm + omega_c) s + omega_pm omega_c
};

std::string_view to_string(TransferMode mode);

enum class Branch { Plus, Minus };

// Normal-mode factor u_(+/-)(s). Plus pairs with L + M, Minus with L - M.
Complex u_pm(Complex s, Branch branch, const CircuitParams& p, TransferMode mode);

// Off-diagonal Green's function element evaluated from its direct form
//   (M/A) [ (C s^2 + L/A + (1/R) s omega_c/(s + omega_c))^2 - (M/A)^2 ]^{-1}.
// Throws SingularityError at a zero of u_+ u_- or at s = -omega_c.
Complex g12(Complex s, const CircuitParams& p);

// (2/pi) omega^2 omega_c^4 (R M / A)^2 / |u_+(i omega) u_-(i omega)|^2
double transfer_f12(double omega, const CircuitParams& p, TransferMode mode);

// gamma(s) = (P1/R + P2/R) omega_c / (s + omega_c)
Matrix2<Complex> dissipation_kernel(Complex s, const CircuitParams& p);

// I_alpha(omega) = (2/pi) (1/R) omega omega_c^2 / (omega^2 + omega_c^2) P_alpha, alpha in {1, 2}
Matrix2<double> spectral_density(double omega, int bath, const CircuitParams& p);

// g(s) = (C s^2 + gamma(s) s + L0^{-1})^{-1}
Matrix2<Complex> green_matrix(Complex s, const CircuitParams& p);

// (pi/2) Re Tr[I_from g(i omega) I_to g(i omega)^dagger]
double trace_transfer(double omega, const CircuitParams& p, int from, int to);

inline double trace_f12(double omega, const CircuitParams& p) { return trace_transfer(omega, p, 1, 2); }

} // namespace heat
