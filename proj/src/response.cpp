#include "heat/response.hpp"

#include <cmath>
#include <numbers>

#include "heat/errors.hpp"

namespace heat {

std::string_view to_string(TransferMode mode) {
    return mode == TransferMode::ExactCubic ? "ExactCubic" : "OverdampedLinear";
}

Complex u_pm(Complex s, Branch branch, const CircuitParams& p, TransferMode mode) {
    const double L_branch = branch == Branch::Plus ? p.L + p.M : p.L - p.M;
    const double w_pm = p.R / L_branch;
    const Complex linear = (w_pm + p.omega_c) * s + w_pm * p.omega_c;
    if (mode == TransferMode::OverdampedLinear) return linear;
    return (s * s * s + p.omega_c * s * s) * (p.R * p.C) + linear;
}

Complex g12(Complex s, const CircuitParams& p) {
    const double A = p.A();
    if (s == Complex{-p.omega_c, 0.0}) throw SingularityError("g12: s = -omega_c");
    const Complex diag = p.C * s * s + p.L / A + (1.0 / p.R) * (s * p.omega_c / (s + p.omega_c));
    const Complex denom = diag * diag - (p.M / A) * (p.M / A);
    const Complex value = (p.M / A) / denom;
    if (denom == 0.0 || !std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw SingularityError("g12: s is a zero of u_+ u_-");
    return value;
}

double transfer_f12(double omega, const CircuitParams& p, TransferMode mode) {
    if (omega == 0.0 || p.M == 0.0) return 0.0;
    const Complex s{0.0, omega};
    const double up = std::abs(u_pm(s, Branch::Plus, p, mode));
    const double um = std::abs(u_pm(s, Branch::Minus, p, mode));
    // (omega / |u+ u-|)^2 formed as a product of ratios so neither factor overflows
    const double q = (std::abs(omega) / up) / um;
    const double k = p.omega_c * p.omega_c * p.R * p.M / p.A();
    return 2.0 / std::numbers::pi * (k * q) * (k * q);
}

Matrix2<Complex> dissipation_kernel(Complex s, const CircuitParams& p) {
    const Complex k = p.omega_c / (s + p.omega_c);
    return Matrix2<Complex>::diagonal(k / p.R, k / p.R);
}

Matrix2<double> spectral_density(double omega, int bath, const CircuitParams& p) {
    if (bath != 1 && bath != 2) throw ValidationError("bath index must be 1 or 2");
    const double wc2 = p.omega_c * p.omega_c;
    const double j = 2.0 / std::numbers::pi / p.R * omega * wc2 / (omega * omega + wc2);
    return bath == 1 ? Matrix2<double>::diagonal(j, 0.0) : Matrix2<double>::diagonal(0.0, j);
}

Matrix2<Complex> green_matrix(Complex s, const CircuitParams& p) {
    const Matrix2<double> L0{p.L, -p.M, -p.M, p.L};
    const Matrix2<Complex> capacitive = Matrix2<Complex>::diagonal(p.C * s * s, p.C * s * s);
    const Matrix2<Complex> inverse_green =
        capacitive + s * dissipation_kernel(s, p) + to_complex(L0.inverse());
    return inverse_green.inverse();
}

double trace_transfer(double omega, const CircuitParams& p, int from, int to) {
    const Matrix2<Complex> g = green_matrix(Complex{0.0, omega}, p);
    const Matrix2<Complex> product = to_complex(spectral_density(omega, from, p)) * g *
                                     to_complex(spectral_density(omega, to, p)) * g.adjoint();
    return std::numbers::pi / 2.0 * product.trace().real();
}

} // namespace heat
