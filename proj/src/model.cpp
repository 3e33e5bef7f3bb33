#include "heat/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heat/errors.hpp"

namespace heat {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw ValidationError(message);
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

void CircuitParams::validate() const {
    require(positive_finite(R), "R > 0 required");
    require(positive_finite(L), "L > 0 required");
    require(positive_finite(C), "C > 0 required");
    require(positive_finite(omega_c), "omega_c > 0 required");
    require(std::isfinite(M) && M >= 0.0, "M >= 0 required");
    require(M < L, "M < L required");
    require(positive_finite(hbar), "hbar > 0 required");
    require(positive_finite(kb), "kb > 0 required");
}

CircuitParams CircuitParams::from_rates(double omega_d, double gamma, double M_over_L,
                                        double omega_c, double L) {
    CircuitParams p;
    p.L = L;
    p.R = omega_d * L;
    p.C = 1.0 / (p.R * gamma);
    p.M = M_over_L * L;
    p.omega_c = omega_c;
    return p;
}

double cutoff_factor(double omega_c, double omega) { return omega_c / (omega_c + omega); }

DerivedScales derive_scales(const CircuitParams& p) {
    p.validate();
    DerivedScales s;
    s.gamma = 1.0 / (p.R * p.C);
    s.omega_0 = 1.0 / std::sqrt(p.L * p.C);
    s.omega_d = p.R / p.L;
    s.omega_plus = p.R / (p.L + p.M);
    s.omega_minus = p.R / (p.L - p.M);
    s.lambda_plus = -p.omega_c * s.omega_plus / (p.omega_c + s.omega_plus);
    s.lambda_minus = -p.omega_c * s.omega_minus / (p.omega_c + s.omega_minus);
    return s;
}

BathPair BathPair::make(double T1, double T2, double kb) {
    if (!(std::isfinite(T1) && T1 >= 0.0) || !(std::isfinite(T2) && T2 >= 0.0))
        throw InvalidTemperature("temperatures must be finite and >= 0");
    if (!positive_finite(kb)) throw ValidationError("kb > 0 required");
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {T1, T2, T1 > 0.0 ? 1.0 / (kb * T1) : inf, T2 > 0.0 ? 1.0 / (kb * T2) : inf};
}

double thermal_frequency(const CircuitParams& p, const BathPair& b) {
    return p.kb * std::max(b.T1, b.T2) / p.hbar;
}

void require_positive_temperatures(const BathPair& b) {
    if (!(b.T1 > 0.0 && std::isfinite(b.T1)) || !(b.T2 > 0.0 && std::isfinite(b.T2)))
        throw InvalidTemperature("T1 > 0 and T2 > 0 required");
}

std::string_view to_string(RegimeTag tag) {
    switch (tag) {
    case RegimeTag::HighT: return "HighT";
    case RegimeTag::IntermediateT: return "IntermediateT";
    case RegimeTag::LowT: return "LowT";
    case RegimeTag::Mixed: return "Mixed";
    case RegimeTag::OutsideOverdamped: return "OutsideOverdamped";
    }
    return "?";
}

bool RegimeLabel::overdamped_valid() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const RegimeCondition& c) {
        return !c.overdamped_validity || c.satisfied;
    });
}

RegimeLabel classify_regime(const CircuitParams& p, const DerivedScales& s,
                            const BathPair& b, double safety_factor) {
    if (!(safety_factor >= 1.0)) throw ValidationError("safety_factor >= 1 required");

    RegimeLabel label;
    auto ratio = [](double large, double small) {
        return small > 0.0 ? large / small : std::numeric_limits<double>::infinity();
    };
    // a << b
    auto much_less = [&](std::string name, double a, double b_, bool validity = false) {
        const double margin = ratio(b_, a);
        const bool ok = margin >= safety_factor;
        label.conditions.push_back({std::move(name), ok, margin, validity});
        return ok;
    };
    // a < b
    auto less = [&](std::string name, double a, double b_) {
        const double margin = ratio(b_, a);
        const bool ok = a < b_;
        label.conditions.push_back({std::move(name), ok, margin, false});
        return ok;
    };

    const double w_th = thermal_frequency(p, b);
    const double g = s.gamma;
    much_less("omega_th << gamma", w_th, g, true);
    much_less("omega_th << sqrt(gamma*omega_plus)", w_th, std::sqrt(g * s.omega_plus), true);
    much_less("omega_th << sqrt(gamma*omega_minus)", w_th, std::sqrt(g * s.omega_minus), true);
    much_less("omega_th << cbrt(gamma*omega_plus*omega_c)", w_th,
              std::cbrt(g * s.omega_plus * p.omega_c), true);
    much_less("omega_th << cbrt(gamma*omega_minus*omega_c)", w_th,
              std::cbrt(g * s.omega_minus * p.omega_c), true);
    const bool overdamped_circuit = much_less("omega_minus << gamma", s.omega_minus, g);

    // Table of temperature ranges, one evaluation per bath.
    struct Rows {
        bool high, intermediate, low;
    };
    auto rows_for = [&](const char* bath, double T) {
        const double w = p.kb * T / p.hbar;
        const std::string prefix = std::string(bath) + ": ";
        Rows r{};
        r.high = overdamped_circuit & much_less(prefix + "gamma << omega_th", g, w);
        r.intermediate = less(prefix + "omega_minus < omega_th", s.omega_minus, w) &
                         much_less(prefix + "omega_th << gamma", w, g);
        r.low = less(prefix + "omega_th < omega_plus", w, s.omega_plus) & overdamped_circuit;
        return r;
    };
    const Rows r1 = rows_for("T1", b.T1);
    const Rows r2 = rows_for("T2", b.T2);

    if (r1.high && r2.high)
        label.tag = RegimeTag::HighT;
    else if (!label.overdamped_valid() || !overdamped_circuit)
        label.tag = RegimeTag::OutsideOverdamped;
    else if (r1.intermediate && r2.intermediate)
        label.tag = RegimeTag::IntermediateT;
    else if (r1.low && r2.low)
        label.tag = RegimeTag::LowT;
    else
        label.tag = RegimeTag::Mixed;
    return label;
}

} // namespace heat
