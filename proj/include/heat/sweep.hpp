// sweep.hpp: parameter sweeps, configuration files, CSV and plot-script output
//
// Config format: one `key = value` per line, `#` starts a comment, no nesting.
//
//   preset             fig2 | fig3 | fig4 (loads that preset's values first)
//   sweep              gamma_over_omega_d | T1 | T2               [gamma_over_omega_d]
//   start, stop        grid bounds                                 [1, 1e5]
//   points             grid size >= 2                              [20]
//   spacing            linear | log                                [log]
//   R, L, M, omega_c   circuit                                     [2, 2, 1, 5]
//   C                  capacitance (exclusive with gamma_over_omega_d)
//   gamma_over_omega_d fixes C = L / (R^2 g) when not swept        [1e4]
//   hbar, kb           constants                                   [1, 1]
//   T1, T2             bath temperatures                           [2, 1]
//   T2_over_T1         ties T2 to the swept T1
//   series             T1:T2 pairs, comma separated; the swept component may be `*`
//   methods            subset of exact, closed, low, high          [exact, closed]
//   exact_mode         cubic | linear                              [cubic]
//   safety_factor      threshold for "<<"                          [10]
//   rel_tol, abs_tol, max_subdivisions, tail_cut_multiplier        quadrature settings

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heat/closed_form.hpp"

namespace heat {

enum class SweepVariable { GammaOverOmegaD, T1, T2 };
enum class Spacing { Linear, Log };
enum class Preset { Fig2, Fig3, Fig4 };

std::string_view to_string(SweepVariable v);
std::string_view to_string(Preset p);
Preset preset_from_string(std::string_view name);

struct Grid {
    double start{1.0};
    double stop{1e5};
    std::size_t points{20};
    Spacing spacing{Spacing::Log};

    void validate() const;
    // Ascending values; the end points are reproduced exactly.
    std::vector<double> values() const;
};

struct TemperaturePair {
    double T1{};
    double T2{};
    friend bool operator==(const TemperaturePair&, const TemperaturePair&) = default;
};

struct SweepSpec {
    SweepVariable variable{SweepVariable::GammaOverOmegaD};
    Grid grid{};
    CircuitParams circuit{CircuitParams::from_rates(1.0, 1e4, 0.5, 5.0)};
    std::optional<double> gamma_over_omega_d{1e4};  // when set, overrides circuit.C
    TemperaturePair temperatures{2.0, 1.0};
    std::vector<TemperaturePair> series;  // empty: one series at `temperatures`
    std::optional<double> t2_over_t1;
    std::vector<Method> methods{Method::ExactQuadrature, Method::ClosedForm};
    TransferMode exact_mode{TransferMode::ExactCubic};
    double safety_factor{kDefaultSafetyFactor};
    QuadratureConfig quadrature{};
    std::optional<Preset> preset;

    void validate() const;
    std::vector<TemperaturePair> effective_series() const;
};

// Circuit M = 1, L = 2, omega_c = 5 omega_d, omega_d = 1 for every preset, with
// preset-specific grids.
SweepSpec preset_spec(Preset preset);

// Parses `text` on top of `base`. Throws ParseError (with line number) on
// malformed lines or unknown keys and ValidationError on violated invariants.
SweepSpec parse_config(std::string_view text, const SweepSpec& base = {});

struct MethodCells {
    double q_total{};
    double q_classical{};
    double q_quantum{};
};

struct SweepRow {
    std::size_t series{};
    double swept_value{};
    double T1{};
    double T2{};
    double gamma_over_omega_d{};
    std::vector<MethodCells> cells;  // one per spec.methods entry, same order
    RegimeTag regime{RegimeTag::Mixed};
    std::size_t warnings{};
    std::vector<std::string> messages;  // not serialised
};

// Circuit and temperatures of one grid point.
struct SweepPoint {
    CircuitParams circuit;
    BathPair baths;
};
SweepPoint sweep_point(const SweepSpec& spec, const TemperaturePair& series, double value);

// Evaluates every grid point of every series. Rows are ordered by series, then
// swept value. threads = 0 picks the hardware concurrency; the output does not
// depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 1);

// HEAT_THREADS if set, else 0.
unsigned threads_from_environment();

std::string csv_header(const std::vector<Method>& methods);
std::string format_csv(const std::vector<SweepRow>& rows, const std::vector<Method>& methods);
void emit_csv(const std::vector<SweepRow>& rows, const std::vector<Method>& methods,
              const std::filesystem::path& destination);
// Inverse of format_csv; method columns are recovered from the header.
std::vector<SweepRow> parse_csv(std::string_view text, std::vector<Method>* methods = nullptr);

// Standalone matplotlib script for a preset's CSV, which it references by a
// path relative to the script's own directory.
std::string plot_script(Preset preset, const std::vector<Method>& methods, const std::string& csv_relative_path);
void emit_plot_script(Preset preset, const std::vector<Method>& methods, const std::filesystem::path& csv_path,
                      const std::filesystem::path& destination);

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shortest representation that reads back to the same double.
std::string format_double(double x);

} // namespace heat
