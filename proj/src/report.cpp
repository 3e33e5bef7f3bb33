#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "heat/closed_form.hpp"
#include "heat/errors.hpp"

namespace heat {

std::string_view to_string(Method m) {
    switch (m) {
    case Method::ExactQuadrature: return "ExactQuadrature";
    case Method::ClosedForm: return "ClosedForm";
    case Method::LowTempAsymptotic: return "LowTempAsymptotic";
    case Method::HighTempAsymptotic: return "HighTempAsymptotic";
    }
    return "?";
}

std::string_view short_name(Method m) {
    switch (m) {
    case Method::ExactQuadrature: return "exact";
    case Method::ClosedForm: return "closed";
    case Method::LowTempAsymptotic: return "low";
    case Method::HighTempAsymptotic: return "high";
    }
    return "?";
}

Method method_from_string(std::string_view name) {
    for (Method m : {Method::ExactQuadrature, Method::ClosedForm, Method::LowTempAsymptotic,
                     Method::HighTempAsymptotic})
        if (name == short_name(m) || name == to_string(m)) return m;
    throw ValidationError("unknown method '" + std::string(name) + "' (expected exact, closed, low or high)");
}

namespace {

std::string describe_failures(const RegimeLabel& regime) {
    std::ostringstream out;
    bool first = true;
    for (const RegimeCondition& c : regime.conditions) {
        if (!c.overdamped_validity || c.satisfied) continue;
        out << (first ? "" : "; ") << c.name << " (margin " << c.margin << ")";
        first = false;
    }
    return out.str();
}

std::string ratio_message(const char* what, double ratio, double safety_factor) {
    std::ostringstream out;
    out << what << " (ratio " << ratio << ", safety factor " << safety_factor << ")";
    return out.str();
}

} // namespace

HeatReport assemble_report(const CircuitParams& p, const DerivedScales& s, const BathPair& b, Method method,
                           const ReportOptions& options) {
    HeatReport report;
    report.method = method;
    report.regime = classify_regime(p, s, b, options.safety_factor);
    auto& warnings = report.validity_warnings;

    const bool analytic = method != Method::ExactQuadrature;
    if (report.regime.tag == RegimeTag::OutsideOverdamped)
        warnings.push_back("regime OutsideOverdamped: " + describe_failures(report.regime));
    else if (analytic && !report.regime.overdamped_valid())
        warnings.push_back("overdamped linearisation not justified: " + describe_failures(report.regime));

    const double w_th = thermal_frequency(p, b);
    const double w_th_cold = p.kb * std::min(b.T1, b.T2) / p.hbar;

    switch (method) {
    case Method::ClosedForm:
        report.q_classical = heat_classical(p, s, b);
        report.q_quantum = heat_quantum(p, s, b);
        report.q_total = report.q_classical + report.q_quantum;
        break;
    case Method::LowTempAsymptotic: {
        const double ratio = w_th > 0.0 ? -s.lambda_plus / w_th : std::numeric_limits<double>::infinity();
        if (ratio < options.safety_factor)
            warnings.push_back(ratio_message("low-temperature law needs |lambda_+| >> omega_th", ratio,
                                             options.safety_factor));
        report.q_total = heat_low_temp(p, b);
        report.q_classical = heat_classical(p, s, b);
        report.q_quantum = report.q_total - report.q_classical;
        break;
    }
    case Method::HighTempAsymptotic: {
        const double ratio = w_th_cold / -s.lambda_minus;
        if (ratio < options.safety_factor)
            warnings.push_back(ratio_message("high-temperature expansion needs |lambda_-| << omega_th", ratio,
                                             options.safety_factor));
        report.q_classical = heat_classical(p, s, b);
        report.q_quantum = quantum_log_term(p, s, b);
        report.q_total = report.q_classical + report.q_quantum;
        break;
    }
    case Method::ExactQuadrature: {
        const QuadratureConfig& q = options.quadrature;
        const QuadratureResult total = heat_exact_detailed(p, b, options.exact_mode, q);
        const QuadratureResult quantum = quantum_integral_detailed(p, b, options.exact_mode, q);
        const QuadratureResult transfer =
            transfer_integral(p, options.exact_mode, 0.0, std::numeric_limits<double>::infinity(), q);
        report.q_total = total.value;
        report.q_quantum = quantum.value;
        report.q_classical = p.kb * (b.T1 - b.T2) * transfer.value;
        report.error_estimate = total.error;
        auto check = [&](const char* what, const QuadratureResult& r) {
            if (r.converged) return;
            std::ostringstream out;
            out << what << ": quadrature error estimate " << r.error << " exceeds rel_tol " << q.rel_tol;
            warnings.push_back(out.str());
        };
        check("total", total);
        check("quantum", quantum);
        check("classical", transfer);
        break;
    }
    }
    return report;
}

} // namespace heat
