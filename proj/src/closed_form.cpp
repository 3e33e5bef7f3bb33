#include "heat/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "heat/digamma.hpp"
#include "heat/errors.hpp"

namespace heat {

namespace {

// log(a/b), antisymmetric under a <-> b to the last bit.
double log_ratio(double a, double b) {
    const double r = a / b;
    if (r > 1e6 || r < 1e-6) return std::log(a) - std::log(b);
    return 2.0 * std::atanh((a - b) / (a + b));
}

double coupling_ratio(const CircuitParams& p) { return p.M / p.L; }

// psi(1 + a) - log(a) - 1/(2a) + 1/(12 a^2); zero at a = inf. The 1/(12 a^2)
// term drops out of the total because lambda^2 / a^2 does not depend on lambda.
double digamma_remainder(double a) {
    if (a < 10.0) return digamma(1.0 + a) - std::log(a) - 0.5 / a + 1.0 / (12.0 * a * a);
    constexpr double c[] = {-1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760, 1.0 / 12};
    const double inv2 = 1.0 / (a * a);
    double sum = 0.0;
    for (int k = 5; k >= 0; --k) sum = sum * inv2 + c[k];
    return -sum * inv2 * inv2;
}

double quantum_prefactor(const CircuitParams& p, const DerivedScales& s) {
    return p.hbar / (4.0 * std::numbers::pi) * cutoff_factor(p.omega_c, s.omega_d) * coupling_ratio(p);
}

} // namespace

double heat_classical(const CircuitParams& p, const DerivedScales& s, const BathPair& b) {
    const double r = coupling_ratio(p);
    const double k = 0.5 * p.kb * r * r * cutoff_factor(p.omega_c, s.omega_d) * s.lambda_plus *
                     s.lambda_minus / s.omega_d;
    return (b.T1 - b.T2) * k;
}

double quantum_log_term(const CircuitParams& p, const DerivedScales& s, const BathPair& b) {
    require_positive_temperatures(b);
    const double r = coupling_ratio(p);
    const double rate = s.lambda_plus * s.lambda_minus / s.omega_d;
    return p.hbar / std::numbers::pi * r * r * rate * rate * log_ratio(b.T2, b.T1);
}

double heat_quantum(const CircuitParams& p, const DerivedScales& s, const BathPair& b) {
    const double log_term = quantum_log_term(p, s, b);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    // psi(1 - beta1 hbar lambda / 2pi) - psi(1 - beta2 hbar lambda / 2pi); arguments are > 1
    auto digamma_gap = [&](double lambda) {
        return digamma(1.0 - b.beta1 * p.hbar * lambda / two_pi) - digamma(1.0 - b.beta2 * p.hbar * lambda / two_pi);
    };
    const double lp2 = s.lambda_plus * s.lambda_plus;
    const double lm2 = s.lambda_minus * s.lambda_minus;
    const double braces = lp2 * digamma_gap(s.lambda_plus) - lm2 * digamma_gap(s.lambda_minus);
    return log_term + quantum_prefactor(p, s) * braces;
}

double heat_closed_total(const CircuitParams& p, const DerivedScales& s, const BathPair& b) {
    require_positive_temperatures(b);
    // Smallest digamma shift; below 1 the parts no longer cancel and the
    // remainders themselves grow like 1/a^2.
    const double a_min = std::min(b.beta1, b.beta2) * p.hbar * std::abs(s.lambda_plus) / (2.0 * std::numbers::pi);
    if (a_min < 1.0) return heat_classical(p, s, b) + heat_quantum(p, s, b);
    auto gap = [&](double lambda) {
        const double scale = p.hbar * std::abs(lambda) / (2.0 * std::numbers::pi);
        return digamma_remainder(b.beta1 * scale) - digamma_remainder(b.beta2 * scale);
    };
    const double braces = s.lambda_plus * s.lambda_plus * gap(s.lambda_plus) -
                          s.lambda_minus * s.lambda_minus * gap(s.lambda_minus);
    return quantum_prefactor(p, s) * braces;
}

double heat_low_temp(const CircuitParams& p, const BathPair& b) {
    const double r = coupling_ratio(p);
    const double omega_d = p.R / p.L;
    const double pi_over_hbar = std::numbers::pi / p.hbar;
    const double kb2 = p.kb * p.kb;
    const double t1 = b.T1 * b.T1, t2 = b.T2 * b.T2;
    return 2.0 / 15.0 * pi_over_hbar * pi_over_hbar * pi_over_hbar * r * r * kb2 * kb2 /
           (omega_d * omega_d) * ((t1 - t2) * (t1 + t2));
}

double heat_quantum_high_temp(const CircuitParams& p, const DerivedScales& s, const BathPair& b) {
    const double log_term = quantum_log_term(p, s, b);
    const double lp3 = s.lambda_plus * s.lambda_plus * s.lambda_plus;
    const double lm3 = s.lambda_minus * s.lambda_minus * s.lambda_minus;
    const double inverse_temperature_gap = b.beta2 - b.beta1;  // (1/kb)(1/T2 - 1/T1)
    return log_term + p.hbar * p.hbar / 48.0 * cutoff_factor(p.omega_c, s.omega_d) * coupling_ratio(p) *
                          (lp3 - lm3) * inverse_temperature_gap;
}

double heat_high_temp_total(const CircuitParams& p, const DerivedScales& s, const BathPair& b) {
    return heat_classical(p, s, b) + quantum_log_term(p, s, b);
}

} // namespace heat
