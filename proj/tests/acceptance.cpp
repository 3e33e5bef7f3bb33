// acceptance: one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "heat/closed_form.hpp"
#include "heat/digamma.hpp"
#include "heat/exact.hpp"
#include "heat/response.hpp"
#include "heat/sweep.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace heat;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return v;
}

double closed_total(const CircuitParams& p, const DerivedScales& s, const BathPair& b) {
    return heat_classical(p, s, b) + heat_quantum(p, s, b);
}

Outcome algebra_oracle() {
    std::mt19937_64 rng(1001);
    double worst = 0.0;
    int n = 0;
    for (int i = 0; i < 250; ++i) {
        const CircuitParams p = testing::random_circuit(rng);
        for (int j = 0; j < 5; ++j, ++n) {
            const double w = testing::log_uniform(rng, 1e-3, 1e4);
            worst = std::max(worst, testing::rel_diff(transfer_f12(w, p, TransferMode::ExactCubic), trace_f12(w, p)));
        }
    }
    return {worst <= 1e-10, fmt("worst relative difference %.2e over %d (circuit, omega) draws from 250 circuits, tol 1e-10", worst, n)};
}

Outcome residue_vs_quadrature() {
    const std::vector<double> ratios{0.1, 0.3, 0.5, 0.7, 0.9};
    const std::vector<double> cutoffs = log_grid(1.0, 100.0, 5);
    const std::vector<std::pair<double, double>> temps{{0.05, 0.02}, {0.5, 0.25}, {2.0, 1.0}, {20.0, 10.0}, {1000.0, 400.0}};
    QuadratureConfig q;
    q.rel_tol = 1e-10;
    double worst = 0.0;
    for (double r : ratios)
        for (double wc : cutoffs)
            for (auto [T1, T2] : temps) {
                const CircuitParams p = CircuitParams::from_rates(1.0, 1e4, r, wc);
                const DerivedScales s = derive_scales(p);
                const BathPair b = BathPair::make(T1, T2);
                worst = std::max(worst, testing::rel_diff(closed_total(p, s, b),
                                                          heat_exact(p, b, TransferMode::OverdampedLinear, q)));
            }
    return {worst <= 1e-6, fmt("worst relative difference %.2e over 125 points, tol 1e-6", worst)};
}

Outcome fig2_reproduction() {
    const std::vector<std::pair<double, double>> temps{{2.0, 1.0}, {1.0, 0.5}, {0.5, 0.25}};
    const std::vector<double> grid = log_grid(10.0, 1e5, 20);
    bool ok = true;
    std::string detail;
    for (auto [T1, T2] : temps) {
        const BathPair b = BathPair::make(T1, T2);
        std::vector<double> gaps;
        for (double g : grid) {
            const CircuitParams p = testing::fig2_circuit(g);
            const DerivedScales s = derive_scales(p);
            gaps.push_back(testing::rel_diff(heat_exact(p, b, TransferMode::ExactCubic), closed_total(p, s, b)));
        }
        double worst_large = 0.0;
        bool monotone = true;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (grid[i] >= 1e3 * (1 - 1e-12)) worst_large = std::max(worst_large, gaps[i]);
            if (i && !(gaps[i] < gaps[i - 1])) monotone = false;
        }
        const bool pair_ok = worst_large <= 1e-2 && gaps.front() >= 0.1 && monotone;
        ok = ok && pair_ok;
        detail += fmt("(%g,%g): gap %.3g at 10, max %.2e for >=1e3, %s; ", T1, T2, gaps.front(), worst_large,
                      monotone ? "monotone" : "NOT monotone");
    }
    return {ok, detail + "tol 1e-2, divergence >= 0.1 at gamma/omega_d = 10"};
}

Outcome fig3_low_temperature() {
    const CircuitParams p = testing::fig2_circuit(1e4);
    const DerivedScales s = derive_scales(p);
    const double lp = std::abs(s.lambda_plus);
    double worst_ratio = 0.0;
    for (double T1 : log_grid(1e-4 * lp, 1e-2 * lp, 20)) {
        const BathPair b = BathPair::make(T1, T1 / 2);
        worst_ratio = std::max(worst_ratio, std::abs(heat_closed_total(p, s, b) / heat_low_temp(p, b) - 1.0));
    }
    std::vector<double> xs, errs;
    for (double T1 : log_grid(1e-2 * lp, 1e-1 * lp, 12)) {
        const BathPair b = BathPair::make(T1, T1 / 2);
        xs.push_back(T1);
        errs.push_back(heat_closed_total(p, s, b) / heat_low_temp(p, b) - 1.0);
    }
    const double slope = loglog_slope(xs, errs);
    return {worst_ratio <= 0.05 && std::abs(slope - 2.0) <= 0.3,
            fmt("max |ratio - 1| = %.2e for omega_th <= 1e-2 |lambda_+| (tol 5e-2); error slope %.3f (2.0 +- 0.3)",
                worst_ratio, slope)};
}

Outcome fig4_high_temperature() {
    const CircuitParams p = testing::fig2_circuit(1e4);
    const DerivedScales s = derive_scales(p);
    std::vector<double> xs, residuals;
    double log_term = 0.0;
    for (double T1 : log_grid(1e2 * std::abs(s.lambda_minus), 1e5 * std::abs(s.lambda_minus), 16)) {
        const BathPair b = BathPair::make(T1, 2.0 * T1);
        log_term = quantum_log_term(p, s, b);
        xs.push_back(T1);
        residuals.push_back(heat_quantum(p, s, b) - log_term);
    }
    const double slope = loglog_slope(xs, residuals);
    return {std::abs(slope + 1.0) <= 0.1 && std::abs(log_term) > 1e-3,
            fmt("fitted exponent %.4f (-1.0 +- 0.1); surviving log term %.4e (> 1e-3)", slope, log_term)};
}

Outcome digamma_suite() {
    double special = std::max(std::abs(digamma(Complex(1.0)).real() + kEulerGamma),
                              std::abs(digamma(Complex(2.0)).real() - 1.0 + kEulerGamma));
    std::mt19937_64 rng(1006);
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    double rec = 0.0, refl = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Complex z = std::polar(testing::log_uniform(rng, 0.5, 30.0), phase(rng));
        if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3) continue;
        const Complex psi = digamma(z);
        rec = std::max(rec, std::abs(digamma(z + 1.0) - psi - 1.0 / z) / std::max({1.0, std::abs(psi), std::abs(1.0 / z)}));
        const Complex cot = std::numbers::pi / std::tan(std::numbers::pi * z);
        refl = std::max(refl, std::abs(digamma(1.0 - z) - psi - cot) / std::max({1.0, std::abs(psi), std::abs(cot)}));
    }
    double table = 0.0;
    for (const auto& row : oracle::kDigamma) {
        const Complex z(std::stod(row.re_z), std::stod(row.im_z));
        const Complex want(std::stod(row.re_psi), std::stod(row.im_psi));
        table = std::max(table, std::abs(digamma(z) - want) / std::abs(want));
    }
    return {special <= 1e-13 && rec <= 1e-12 && refl <= 1e-12 && table <= 1e-12,
            fmt("special values %.1e (1e-13); recurrence %.1e, reflection %.1e over 1000 points (1e-12); "
                "%zu-point table %.1e (1e-12)",
                special, rec, refl, oracle::kDigamma.size(), table)};
}

Outcome symmetry_and_sign() {
    std::mt19937_64 rng(1007);
    const Method methods[] = {Method::ClosedForm, Method::LowTempAsymptotic, Method::HighTempAsymptotic,
                              Method::ExactQuadrature};
    double closed_antisym = 0.0;
    bool exact_antisym = true, positive = true, zeros = true;
    int sign_checks = 0;
    for (int i = 0; i < 60; ++i) {
        const double wd = testing::log_uniform(rng, 0.1, 10.0);
        CircuitParams p = CircuitParams::from_rates(wd, wd * testing::log_uniform(rng, 1e3, 1e8),
                                                    std::uniform_real_distribution<double>(0.05, 0.95)(rng),
                                                    wd * testing::log_uniform(rng, 0.1, 100.0));
        const DerivedScales s = derive_scales(p);
        const double T1 = wd * testing::log_uniform(rng, 1e-3, 1e3);
        const BathPair b = BathPair::make(T1, T1 * testing::log_uniform(rng, 0.05, 0.95));
        for (Method m : methods) {
            const HeatReport fwd = assemble_report(p, s, b, m);
            const HeatReport bwd = assemble_report(p, s, b.swapped(), m);
            if (m == Method::ExactQuadrature) {
                if (std::abs(fwd.q_total + bwd.q_total) > fwd.error_estimate + bwd.error_estimate) exact_antisym = false;
            } else {
                closed_antisym = std::max(closed_antisym, testing::rel_diff(fwd.q_total, -bwd.q_total));
            }
            // Each asymptotic law is checked for sign only inside its own range.
            const double wth_cold = p.kb * b.T2 / p.hbar, wth = p.kb * b.T1 / p.hbar;
            const bool in_range = (m != Method::HighTempAsymptotic || wth_cold >= 10 * std::abs(s.lambda_minus)) &&
                                  (m != Method::LowTempAsymptotic || 10 * wth <= std::abs(s.lambda_plus));
            if (in_range) {
                ++sign_checks;
                if (!(fwd.q_total > 0.0)) positive = false;
            }
            const HeatReport eq = assemble_report(p, s, BathPair::make(T1, T1), m);
            CircuitParams q = p;
            q.M = 0.0;
            const HeatReport dec = assemble_report(q, derive_scales(q), b, m);
            for (double x : {eq.q_total, eq.q_classical, eq.q_quantum, dec.q_total, dec.q_classical, dec.q_quantum})
                if (x != 0.0) zeros = false;
        }
    }
    return {closed_antisym <= 1e-12 && exact_antisym && positive && zeros,
            fmt("analytic antisymmetry %.1e (1e-12); exact antisymmetry within error estimate: %s; "
                "positive for T1 > T2 in %d in-range checks: %s; exact zeros: %s",
                closed_antisym, exact_antisym ? "yes" : "no", sign_checks, positive ? "yes" : "no",
                zeros ? "yes" : "no")};
}

Outcome harness_determinism() {
    bool ok = true;
    std::string detail;
    for (Preset preset : {Preset::Fig2, Preset::Fig3, Preset::Fig4}) {
        const SweepSpec spec = preset_spec(preset);
        const std::string a = format_csv(run_sweep(spec, 1), spec.methods);
        const std::string b = format_csv(run_sweep(spec, 1), spec.methods);
        const std::string c = format_csv(run_sweep(spec, 8), spec.methods);
        const bool same = a == b && a == c;
        ok = ok && same;
        detail += fmt("%s %s (%zu bytes); ", std::string(to_string(preset)).c_str(), same ? "identical" : "DIFFERENT",
                      a.size());
    }
    return {ok, detail + "serial x2 vs 8 workers"};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"algebra oracle", algebra_oracle},
        {"residue vs quadrature", residue_vs_quadrature},
        {"gamma sweep reproduction", fig2_reproduction},
        {"low-temperature law", fig3_low_temperature},
        {"high-temperature logarithm", fig4_high_temperature},
        {"digamma suite", digamma_suite},
        {"symmetry and sign", symmetry_and_sign},
        {"harness determinism", harness_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures ? 1 : 0;
}
