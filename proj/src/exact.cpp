#include "heat/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "heat/digamma.hpp"
#include "heat/errors.hpp"

namespace heat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGradingRatio = 4.0;

// coth(a) - coth(b) for a, b > 0, with d = b - a supplied separately so that
// nearly equal temperatures do not lose digits.
double coth_difference(double a, double b, double d) {
    if (d == 0.0) return 0.0;
    if (a + b < 600.0) return std::sinh(d) / (std::sinh(a) * std::sinh(b));
    return 2.0 / std::expm1(2.0 * a) - 2.0 / std::expm1(2.0 * b);
}

// Frequencies at which the integrand changes character.
std::vector<double> characteristic_scales(const CircuitParams& p, const DerivedScales& s,
                                          TransferMode mode) {
    std::vector<double> scales = {-s.lambda_plus, -s.lambda_minus, s.omega_plus, s.omega_minus, p.omega_c};
    if (mode == TransferMode::ExactCubic) {
        for (double w : {s.omega_plus, s.omega_minus}) {
            scales.push_back(std::sqrt(s.gamma * w));
            scales.push_back(std::sqrt(s.gamma * (w + p.omega_c)));
        }
    }
    return scales;
}

// Breakpoints on [lo, hi]: a geometric ladder from 1e-3 of the smallest scale,
// plus every scale that falls inside the interval.
std::vector<double> graded_breakpoints(double lo, double hi, std::vector<double> scales) {
    std::erase_if(scales, [](double x) { return !(std::isfinite(x) && x > 0.0); });
    std::vector<double> points = {lo, hi};
    if (!scales.empty()) {
        const double smallest = *std::min_element(scales.begin(), scales.end());
        for (double w = 1e-3 * smallest; w < hi; w *= kGradingRatio)
            if (w > lo) points.push_back(w);
        for (double w : scales)
            if (w > lo && w < hi) points.push_back(w);
    }
    std::sort(points.begin(), points.end());
    std::vector<double> merged = {points.front()};
    for (double w : points)
        if (w > merged.back() * (1.0 + 1e-6) && w > merged.back()) merged.push_back(w);
    if (merged.size() == 1) merged.push_back(hi);
    merged.back() = hi;
    return merged;
}

// Upper bound on (hbar/2) int_cut^inf omega f12 |coth(beta1 hbar w/2) - coth(beta2 hbar w/2)|
// using coth(x) - 1 <= 2 e^{-2x} / (1 - e^{-2 x_cut}) and f12 <= f_max beyond the cut.
double thermal_tail_bound(const CircuitParams& p, const DerivedScales& s, const BathPair& b,
                          TransferMode mode, double cut) {
    double f_max = transfer_f12(cut, p, mode);
    for (double w : characteristic_scales(p, s, mode))
        if (w > cut) f_max = std::max(f_max, transfer_f12(w, p, mode));
    const double k = std::min(b.beta1, b.beta2) * p.hbar;
    const double kc = k * cut;
    return 0.5 * p.hbar * f_max * 2.0 / (-std::expm1(-kc)) * std::exp(-kc) * (cut / k + 1.0 / (k * k));
}

double thermal_cut(const CircuitParams& p, const DerivedScales& s, const BathPair& b,
                   const QuadratureConfig& q) {
    return q.tail_cut_multiplier * std::max(thermal_frequency(p, b), -s.lambda_minus);
}

QuadratureResult combine(const QuadratureResult& x, const QuadratureResult& y, double extra_error,
                         const QuadratureConfig& q) {
    QuadratureResult r;
    r.value = x.value + y.value;
    r.error = x.error + y.error + extra_error;
    r.subdivisions = x.subdivisions + y.subdivisions;
    r.converged = r.error <= std::max(q.abs_tol, q.rel_tol * std::abs(r.value));
    return r;
}

void check_inputs(const CircuitParams& p, const BathPair& b, const QuadratureConfig& q) {
    p.validate();
    q.validate();
    require_positive_temperatures(b);
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0)) throw ValidationError("rel_tol > 0 required");
    if (!(abs_tol >= 0.0)) throw ValidationError("abs_tol >= 0 required");
    if (max_subdivisions < 10) throw ValidationError("max_subdivisions >= 10 required");
    if (!(tail_cut_multiplier >= 10.0)) throw ValidationError("tail_cut_multiplier >= 10 required");
}

QuadratureResult heat_exact_detailed(const CircuitParams& p, const BathPair& b, TransferMode mode,
                                     const QuadratureConfig& q) {
    check_inputs(p, b, q);
    if (b.T1 == b.T2 || p.M == 0.0) return {0.0, 0.0, 0, true};

    const DerivedScales s = derive_scales(p);
    const double half_hbar = 0.5 * p.hbar;
    const double dbeta = b.beta2 - b.beta1;
    auto integrand = [&](double w) {
        if (w == 0.0) return 0.0;  // omega f12 ~ omega^3 against a 1/omega coth difference
        const double x = half_hbar * w;
        return half_hbar * w * transfer_f12(w, p, mode) * coth_difference(b.beta1 * x, b.beta2 * x, dbeta * x);
    };

    const double cut = thermal_cut(p, s, b, q);
    auto scales = characteristic_scales(p, s, mode);
    scales.push_back(p.kb * b.T1 / p.hbar);
    scales.push_back(p.kb * b.T2 / p.hbar);
    const auto points = graded_breakpoints(0.0, cut, scales);
    const QuadratureResult body = integrate_adaptive(integrand, points, q.rel_tol, q.abs_tol, q.max_subdivisions);
    return combine(body, {}, thermal_tail_bound(p, s, b, mode, cut), q);
}

double heat_exact(const CircuitParams& p, const BathPair& b, TransferMode mode, const QuadratureConfig& q) {
    const QuadratureResult r = heat_exact_detailed(p, b, mode, q);
    if (!r.converged)
        throw ToleranceError("heat_exact: tolerance not met (error estimate " + std::to_string(r.error) + ")",
                             r.value, r.error);
    return r.value;
}

QuadratureResult transfer_integral(const CircuitParams& p, TransferMode mode, double lo, double hi,
                                   const QuadratureConfig& q) {
    p.validate();
    q.validate();
    if (!(lo >= 0.0 && lo < hi)) throw ValidationError("transfer_integral: 0 <= lo < hi required");
    if (p.M == 0.0) return {0.0, 0.0, 0, true};

    const DerivedScales s = derive_scales(p);
    auto f = [&](double w) { return transfer_f12(w, p, mode); };
    const auto scales = characteristic_scales(p, s, mode);
    const double largest = *std::max_element(scales.begin(), scales.end());
    const double split = std::isfinite(hi) ? hi : std::max(lo, q.tail_cut_multiplier * largest);

    QuadratureResult head{};
    if (lo < split) {
        const auto points = graded_breakpoints(lo, split, scales);
        head = integrate_adaptive(f, points, q.rel_tol, q.abs_tol, q.max_subdivisions);
    }
    if (std::isfinite(hi)) return combine(head, {}, 0.0, q);

    // omega = split / t maps [split, inf) onto (0, 1]; the GK nodes never touch t = 0.
    auto mapped = [&](double t) { return f(split / t) * split / (t * t); };
    const double points[] = {0.0, 0.5, 1.0};
    const QuadratureResult tail = integrate_adaptive(
        mapped, points, q.rel_tol, std::max(q.abs_tol, q.rel_tol * std::abs(head.value)), q.max_subdivisions);
    return combine(head, tail, 0.0, q);
}

double classical_integral(const CircuitParams& p, TransferMode mode, const QuadratureConfig& q) {
    const QuadratureResult r = transfer_integral(p, mode, 0.0, kInf, q);
    if (!r.converged)
        throw ToleranceError("classical_integral: tolerance not met", r.value, r.error);
    return r.value;
}

QuadratureResult quantum_integral_detailed(const CircuitParams& p, const BathPair& b, TransferMode mode,
                                           const QuadratureConfig& q) {
    check_inputs(p, b, q);
    if (b.T1 == b.T2 || p.M == 0.0) return {0.0, 0.0, 0, true};

    const DerivedScales s = derive_scales(p);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double y1 = b.beta1 * p.hbar / two_pi;
    const double y2 = b.beta2 * p.hbar / two_pi;
    auto integrand = [&](double w) {
        if (w == 0.0) return 0.0;
        const double im1 = digamma(Complex{1.0, y1 * w}).imag();
        const double im2 = digamma(Complex{1.0, y2 * w}).imag();
        return 0.5 * p.hbar * w * transfer_f12(w, p, mode) * (2.0 / std::numbers::pi) * (im1 - im2);
    };

    const double cut = thermal_cut(p, s, b, q);
    auto scales = characteristic_scales(p, s, mode);
    scales.push_back(p.kb * b.T1 / p.hbar);
    scales.push_back(p.kb * b.T2 / p.hbar);
    const auto points = graded_breakpoints(0.0, cut, scales);
    const QuadratureResult body = integrate_adaptive(integrand, points, q.rel_tol, q.abs_tol, q.max_subdivisions);

    // Beyond the cut Im psi(1 + iy) = pi/2 - 1/(2y) up to pi e^{-2 pi y}, and the
    // digamma difference collapses onto minus the classical integrand.
    QuadratureResult tail = transfer_integral(p, mode, cut, kInf, q);
    const double scale = -p.kb * (b.T1 - b.T2);
    tail.value *= scale;
    tail.error *= std::abs(scale);
    return combine(body, tail, thermal_tail_bound(p, s, b, mode, cut), q);
}

double quantum_integral(const CircuitParams& p, const BathPair& b, TransferMode mode, const QuadratureConfig& q) {
    const QuadratureResult r = quantum_integral_detailed(p, b, mode, q);
    if (!r.converged)
        throw ToleranceError("quantum_integral: tolerance not met", r.value, r.error);
    return r.value;
}

} // namespace heat
