// closed_form.hpp: analytic heat currents in the overdamped regime
//
// With u_(+/-)(s) linearised to (omega_pm + omega_c)(s - lambda_pm) the frequency
// integrals reduce to elementary functions and digamma values at real arguments
// 1 - beta hbar lambda_pm / 2pi > 1. All functions return the current into the
// system from bath 1; it is positive when T1 > T2.

#pragma once

#include <string>
#include <vector>

#include "heat/exact.hpp"
#include "heat/model.hpp"

namespace heat {

// (kb/2)(T1 - T2)(M/L)^2 omega_c/(omega_c + omega_d) lambda_+ lambda_- / omega_d
double heat_classical(const CircuitParams& p, const DerivedScales& s, const BathPair& b);

// (hbar/pi)(M/L)^2 (lambda_+ lambda_- / omega_d)^2 log(T2/T1), the piece of the
// quantum correction that survives at high temperature.
double quantum_log_term(const CircuitParams& p, const DerivedScales& s, const BathPair& b);

// Full quantum correction: quantum_log_term plus the digamma terms.
double heat_quantum(const CircuitParams& p, const DerivedScales& s, const BathPair& b);

// heat_classical + heat_quantum rearranged so that the log and 1/T pieces cancel
// analytically: with psi(1 + a) = log a + 1/(2a) - 1/(12 a^2) + r(a), only the r terms remain.
// Accurate at low temperature, where the two parts nearly cancel.
double heat_closed_total(const CircuitParams& p, const DerivedScales& s, const BathPair& b);

// (2/15)(pi/hbar)^3 (M/L)^2 kb^4 / omega_d^2 (T1^4 - T2^4); independent of omega_c.
double heat_low_temp(const CircuitParams& p, const BathPair& b);

// quantum_log_term + (hbar^2/48) omega_c/(omega_c + omega_d) (M/L)(lambda_+^3 - lambda_-^3)(beta2 - beta1)
double heat_quantum_high_temp(const CircuitParams& p, const DerivedScales& s, const BathPair& b);

// heat_classical + quantum_log_term
double heat_high_temp_total(const CircuitParams& p, const DerivedScales& s, const BathPair& b);

enum class Method { ExactQuadrature, ClosedForm, LowTempAsymptotic, HighTempAsymptotic };

std::string_view to_string(Method m);
// Short names used by the CLI and CSV headers: exact, closed, low, high.
std::string_view short_name(Method m);
Method method_from_string(std::string_view name);

struct HeatReport {
    double q_classical{};
    double q_quantum{};
    double q_total{};
    Method method{Method::ClosedForm};
    RegimeLabel regime;
    std::vector<std::string> validity_warnings;
    double error_estimate{};  // quadrature only
};

struct ReportOptions {
    double safety_factor{kDefaultSafetyFactor};
    TransferMode exact_mode{TransferMode::ExactCubic};
    QuadratureConfig quadrature{};
};

// Evaluates one method and attaches the regime label and validity warnings.
//   ClosedForm          total = classical + quantum
//   LowTempAsymptotic   total = low-T law; classical is the closed form, quantum the remainder
//   HighTempAsymptotic  total = classical + log term; quantum is the log term
//   ExactQuadrature     total = heat_exact; classical and quantum from their own integrals
HeatReport assemble_report(const CircuitParams& p, const DerivedScales& s, const BathPair& b, Method method,
                           const ReportOptions& options = {});

} // namespace heat
