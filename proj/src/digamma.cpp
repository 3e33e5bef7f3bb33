#include "heat/digamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "heat/errors.hpp"

namespace heat {

namespace {

constexpr double kShiftThreshold = 10.0;

// B_{2k} / (2k) for k = 1..7
constexpr std::array<double, 7> kStirling = {
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
};

// |z| >= kShiftThreshold, Re z > 0
Complex stirling_series(Complex z) {
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex sum = 0.0;
    for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) sum = (sum + *it) * inv2;
    return std::log(z) - 0.5 * inv - sum;
}

Complex digamma_right_half(Complex z) {
    Complex shift = 0.0;
    while (std::abs(z) < kShiftThreshold) {
        shift += 1.0 / z;
        z += 1.0;
    }
    return stirling_series(z) - shift;
}

// pi*cot(pi*z), with Re z reduced into [-1/2, 1/2] first so large real parts keep
// their fractional digits.
Complex pi_cot_pi(Complex z) {
    constexpr double pi = std::numbers::pi;
    const double x = z.real() - std::round(z.real());
    const double y = z.imag();
    if (y == 0.0) return {pi / std::tan(pi * x), 0.0};
    // cot(w) = i (e^{2iw} + 1) / (e^{2iw} - 1); evaluate with |e^{2iw}| <= 1.
    const bool upper = y > 0.0;
    const Complex w{x, upper ? y : -y};
    const Complex e = std::exp(Complex{0.0, 2.0 * pi} * w);
    Complex cot = Complex{0.0, 1.0} * (e + 1.0) / (e - 1.0);
    if (!upper) cot = std::conj(cot);
    return pi * cot;
}

} // namespace

Complex digamma(Complex z, double pole_tolerance) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ValidationError("digamma: non-finite argument");
    if (z.real() <= 0.0 && std::abs(z.imag()) <= pole_tolerance &&
        std::abs(z.real() - std::round(z.real())) <= pole_tolerance)
        throw PoleError("digamma: argument at a pole (non-positive integer)");
    if (z.real() < 0.0) return digamma_right_half(1.0 - z) - pi_cot_pi(z);
    return digamma_right_half(z);
}

double digamma(double x, double pole_tolerance) { return digamma(Complex{x, 0.0}, pole_tolerance).real(); }

double coth_via_digamma(double x) {
    if (x == 0.0) throw ValidationError("coth_via_digamma: x = 0");
    constexpr double pi = std::numbers::pi;
    const double y = x / pi;
    const Complex i{0.0, 1.0};
    const Complex rhs = pi / x + i * digamma(Complex{1.0, -y}) - i * digamma(Complex{1.0, y});
    return rhs.real();
}

} // namespace heat
