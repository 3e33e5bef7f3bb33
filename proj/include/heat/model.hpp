// model.hpp: circuit parameters, derived frequency scales and regime classification
//
// Two identical parallel RLC circuits coupled through a mutual inductance M, each
// resistor modelled as a Lorentz-Drude bath with cutoff omega_c. Reduced units
// (hbar = kb = 1) by default; SI works by overriding both constants.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace heat {

struct CircuitParams {
    double R{2.0};        // resistance
    double L{2.0};        // self-inductance
    double C{5.0e-5};     // capacitance
    double M{1.0};        // mutual inductance, 0 <= M < L
    double omega_c{5.0};  // bath cutoff frequency
    double hbar{1.0};
    double kb{1.0};

    // L^2 - M^2, determinant of the inductance matrix
    double A() const { return L * L - M * M; }

    // Throws ValidationError naming the first violated invariant.
    void validate() const;

    // Circuit with flux damping rate omega_d = R/L and charge damping rate
    // gamma = 1/(RC) prescribed; L fixes the overall impedance scale.
    static CircuitParams from_rates(double omega_d, double gamma, double M_over_L,
                                    double omega_c, double L = 2.0);
};

struct DerivedScales {
    double gamma{};         // 1/(RC)
    double omega_0{};       // 1/sqrt(LC)
    double omega_d{};       // R/L
    double omega_plus{};    // omega_d / (1 + M/L)
    double omega_minus{};   // omega_d / (1 - M/L)
    double lambda_plus{};   // root of the linearised u_+
    double lambda_minus{};  // root of the linearised u_-
};

DerivedScales derive_scales(const CircuitParams& p);

// omega_c / (omega_c + omega)
double cutoff_factor(double omega_c, double omega);

struct BathPair {
    double T1{};
    double T2{};
    double beta1{};  // 1/(kb T1), +inf at T1 = 0
    double beta2{};

    // Accepts T >= 0; zero temperature is only meaningful for the low-T law.
    static BathPair make(double T1, double T2, double kb = 1.0);

    BathPair swapped() const { return {T2, T1, beta2, beta1}; }
};

// kb * max(T1, T2) / hbar
double thermal_frequency(const CircuitParams& p, const BathPair& b);

// Throws InvalidTemperature unless both temperatures are strictly positive and finite.
void require_positive_temperatures(const BathPair& b);

enum class RegimeTag { HighT, IntermediateT, LowT, Mixed, OutsideOverdamped };

std::string_view to_string(RegimeTag tag);

struct RegimeCondition {
    std::string name;
    bool satisfied{};
    double margin{};  // ratio large/small; "a << b" holds when b/a >= safety_factor
    bool overdamped_validity{};  // one of the bounds omega_th must respect for the linearised u
};

struct RegimeLabel {
    RegimeTag tag{RegimeTag::Mixed};
    std::vector<RegimeCondition> conditions;

    // True when every overdamped-validity condition on omega_th holds.
    bool overdamped_valid() const;
};

inline constexpr double kDefaultSafetyFactor = 10.0;

RegimeLabel classify_regime(const CircuitParams& p, const DerivedScales& s,
                            const BathPair& b, double safety_factor = kDefaultSafetyFactor);

} // namespace heat
