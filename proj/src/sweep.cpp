#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "heat/errors.hpp"
#include "heat/sweep.hpp"

namespace heat {

SweepPoint sweep_point(const SweepSpec& spec, const TemperaturePair& series, double value) {
    CircuitParams circuit = spec.circuit;
    std::optional<double> g = spec.gamma_over_omega_d;
    double T1 = series.T1;
    double T2 = series.T2;
    switch (spec.variable) {
    case SweepVariable::GammaOverOmegaD: g = value; break;
    case SweepVariable::T1:
        T1 = value;
        if (spec.t2_over_t1) T2 = *spec.t2_over_t1 * value;
        break;
    case SweepVariable::T2: T2 = value; break;
    }
    if (g) circuit.C = circuit.L / (circuit.R * circuit.R * *g);
    return {circuit, BathPair::make(T1, T2, circuit.kb)};
}

namespace {

SweepRow evaluate_row(const SweepSpec& spec, std::size_t series_index, const TemperaturePair& pair, double value) {
    SweepRow row;
    row.series = series_index;
    row.swept_value = value;
    row.cells.resize(spec.methods.size());
    try {
        const SweepPoint point = sweep_point(spec, pair, value);
        const DerivedScales scales = derive_scales(point.circuit);
        row.T1 = point.baths.T1;
        row.T2 = point.baths.T2;
        row.gamma_over_omega_d = scales.gamma / scales.omega_d;
        row.regime = classify_regime(point.circuit, scales, point.baths, spec.safety_factor).tag;

        const ReportOptions options{spec.safety_factor, spec.exact_mode, spec.quadrature};
        for (std::size_t m = 0; m < spec.methods.size(); ++m) {
            const std::string prefix = std::string(short_name(spec.methods[m])) + ": ";
            try {
                const HeatReport r = assemble_report(point.circuit, scales, point.baths, spec.methods[m], options);
                row.cells[m] = {r.q_total, r.q_classical, r.q_quantum};
                row.warnings += r.validity_warnings.size();
                for (const std::string& w : r.validity_warnings) row.messages.push_back(prefix + w);
            } catch (const std::exception& e) {
                ++row.warnings;
                row.messages.push_back(prefix + "failed: " + e.what());
            }
        }
    } catch (const std::exception& e) {
        row.warnings += spec.methods.size();
        row.messages.push_back(std::string("point failed: ") + e.what());
    }
    return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.validate();
    const std::vector<double> values = spec.grid.values();
    const std::vector<TemperaturePair> series = spec.effective_series();

    std::vector<std::pair<std::size_t, double>> jobs;
    for (std::size_t s = 0; s < series.size(); ++s)
        for (double v : values) jobs.emplace_back(s, v);

    std::vector<SweepRow> rows(jobs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            rows[i] = evaluate_row(spec, jobs[i].first, series[jobs[i].first], jobs[i].second);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return rows;
}

unsigned threads_from_environment() {
    const char* env = std::getenv("HEAT_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 0) throw ValidationError("HEAT_THREADS must be a non-negative integer");
    return static_cast<unsigned>(n);
}

} // namespace heat
