#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <string>

#include "heat/errors.hpp"
#include "heat/sweep.hpp"

namespace heat {

std::string_view to_string(SweepVariable v) {
    switch (v) {
    case SweepVariable::GammaOverOmegaD: return "gamma_over_omega_d";
    case SweepVariable::T1: return "T1";
    case SweepVariable::T2: return "T2";
    }
    return "?";
}

std::string_view to_string(Preset p) {
    switch (p) {
    case Preset::Fig2: return "fig2";
    case Preset::Fig3: return "fig3";
    case Preset::Fig4: return "fig4";
    }
    return "?";
}

Preset preset_from_string(std::string_view name) {
    for (Preset p : {Preset::Fig2, Preset::Fig3, Preset::Fig4})
        if (name == to_string(p)) return p;
    throw ValidationError("unknown preset '" + std::string(name) + "' (expected fig2, fig3 or fig4)");
}

SweepSpec preset_spec(Preset preset) {
    SweepSpec spec;
    spec.preset = preset;
    spec.circuit = CircuitParams::from_rates(1.0, 1e4, 0.5, 5.0);
    switch (preset) {
    case Preset::Fig2:
        spec.variable = SweepVariable::GammaOverOmegaD;
        spec.grid = {1.0, 1e5, 41, Spacing::Log};
        // Free choice; these pairs keep omega_th inside the overdamped window.
        spec.series = {{2.0, 1.0}, {1.0, 0.5}, {0.5, 0.25}};
        spec.methods = {Method::ExactQuadrature, Method::ClosedForm};
        spec.exact_mode = TransferMode::ExactCubic;
        break;
    case Preset::Fig3:
        spec.variable = SweepVariable::T1;
        spec.grid = {1e-3, 1.0, 31, Spacing::Log};
        spec.gamma_over_omega_d = 1e8;
        spec.temperatures = {1.0, 0.5};
        spec.t2_over_t1 = 0.5;
        spec.methods = {Method::ClosedForm, Method::LowTempAsymptotic};
        break;
    case Preset::Fig4:
        spec.variable = SweepVariable::T2;
        spec.grid = {0.1, 1e3, 41, Spacing::Log};
        spec.gamma_over_omega_d = 1e10;
        spec.series = {{1.0, 0.0}, {10.0, 0.0}, {100.0, 0.0}};
        spec.methods = {Method::ClosedForm, Method::HighTempAsymptotic};
        break;
    }
    return spec;
}

void Grid::validate() const {
    if (!(std::isfinite(start) && std::isfinite(stop))) throw ValidationError("grid bounds must be finite");
    if (!(start < stop)) throw ValidationError("start < stop required");
    if (points < 2) throw ValidationError("points >= 2 required");
    if (spacing == Spacing::Log && !(start > 0.0)) throw ValidationError("log spacing requires start > 0");
}

std::vector<double> Grid::values() const {
    validate();
    std::vector<double> out(points);
    const double n = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / n;
        out[i] = spacing == Spacing::Log ? std::pow(10.0, std::log10(start) + t * (std::log10(stop) - std::log10(start)))
                                         : start + t * (stop - start);
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

std::vector<TemperaturePair> SweepSpec::effective_series() const {
    return series.empty() ? std::vector<TemperaturePair>{temperatures} : series;
}

void SweepSpec::validate() const {
    grid.validate();
    if (variable == SweepVariable::GammaOverOmegaD && !(grid.start > 0.0))
        throw ValidationError("gamma_over_omega_d sweep requires start > 0");
    if (variable != SweepVariable::GammaOverOmegaD && !(grid.start >= 0.0))
        throw ValidationError("temperature sweep requires start >= 0");
    if (gamma_over_omega_d && !(*gamma_over_omega_d > 0.0 && std::isfinite(*gamma_over_omega_d)))
        throw ValidationError("gamma_over_omega_d > 0 required");
    if (methods.empty()) throw ValidationError("at least one method required");
    if (t2_over_t1) {
        if (variable != SweepVariable::T1) throw ValidationError("T2_over_T1 requires sweep = T1");
        if (!(*t2_over_t1 > 0.0)) throw ValidationError("T2_over_T1 > 0 required");
    }
    if (!(safety_factor >= 1.0)) throw ValidationError("safety_factor >= 1 required");
    quadrature.validate();
    for (const TemperaturePair& t : effective_series()) {
        const bool need_t1 = variable != SweepVariable::T1;
        const bool need_t2 = variable != SweepVariable::T2 && !t2_over_t1;
        if ((need_t1 && !(t.T1 >= 0.0 && std::isfinite(t.T1))) || (need_t2 && !(t.T2 >= 0.0 && std::isfinite(t.T2))))
            throw ValidationError("fixed temperatures must be finite and >= 0");
    }
    // Circuit invariants, checked on the first grid point.
    sweep_point(*this, effective_series().front(), grid.start).circuit.validate();
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::size_t line) {
    text = trim(text);
    double value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ParseError(line, "expected a number, got '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        parts.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

double parse_series_component(std::string_view text, std::size_t line) {
    return trim(text) == "*" ? 0.0 : parse_number(text, line);
}

struct Entry {
    std::string value;
    std::size_t line;
};

} // namespace

SweepSpec parse_config(std::string_view text, const SweepSpec& base) {
    std::map<std::string, Entry, std::less<>> entries;
    std::vector<std::string> order;
    std::size_t line_no = 0;
    for (std::string_view rest = text; !rest.empty() || line_no == 0;) {
        ++line_no;
        const auto eol = rest.find('\n');
        std::string_view line = rest.substr(0, eol);
        rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (rest.empty()) break;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty()) throw ParseError(line_no, "missing key");
        if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");
        if (entries.contains(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
        entries.emplace(key, Entry{value, line_no});
        order.push_back(key);
    }

    SweepSpec spec = base;
    if (auto it = entries.find("preset"); it != entries.end()) {
        try {
            spec = preset_spec(preset_from_string(it->second.value));
        } catch (const ValidationError& e) {
            throw ParseError(it->second.line, e.what());
        }
    }
    if (entries.contains("C") && entries.contains("gamma_over_omega_d"))
        throw ValidationError("C and gamma_over_omega_d are mutually exclusive");

    for (const std::string& key : order) {
        const Entry& e = entries.at(key);
        const std::string_view v = e.value;
        auto number = [&] { return parse_number(v, e.line); };
        auto count = [&] {
            const double x = number();
            if (!(x >= 0.0 && x == std::floor(x))) throw ParseError(e.line, "expected a non-negative integer");
            return static_cast<std::size_t>(x);
        };
        try {
            if (key == "preset") {
                continue;
            } else if (key == "sweep") {
                if (v == "gamma_over_omega_d" || v == "gamma") spec.variable = SweepVariable::GammaOverOmegaD;
                else if (v == "T1") spec.variable = SweepVariable::T1;
                else if (v == "T2") spec.variable = SweepVariable::T2;
                else throw ParseError(e.line, "sweep must be gamma_over_omega_d, T1 or T2");
            } else if (key == "start") spec.grid.start = number();
            else if (key == "stop") spec.grid.stop = number();
            else if (key == "points") spec.grid.points = count();
            else if (key == "spacing") {
                if (v == "log") spec.grid.spacing = Spacing::Log;
                else if (v == "linear") spec.grid.spacing = Spacing::Linear;
                else throw ParseError(e.line, "spacing must be linear or log");
            } else if (key == "R") spec.circuit.R = number();
            else if (key == "L") spec.circuit.L = number();
            else if (key == "C") {
                spec.circuit.C = number();
                spec.gamma_over_omega_d.reset();
            } else if (key == "M") spec.circuit.M = number();
            else if (key == "omega_c") spec.circuit.omega_c = number();
            else if (key == "hbar") spec.circuit.hbar = number();
            else if (key == "kb") spec.circuit.kb = number();
            else if (key == "gamma_over_omega_d") spec.gamma_over_omega_d = number();
            else if (key == "T1") spec.temperatures.T1 = number();
            else if (key == "T2") spec.temperatures.T2 = number();
            else if (key == "T2_over_T1") spec.t2_over_t1 = number();
            else if (key == "series") {
                spec.series.clear();
                for (std::string_view item : split(v, ',')) {
                    const auto parts = split(item, ':');
                    if (parts.size() != 2) throw ParseError(e.line, "series entries must be T1:T2");
                    spec.series.push_back({parse_series_component(parts[0], e.line),
                                           parse_series_component(parts[1], e.line)});
                }
            } else if (key == "methods") {
                spec.methods.clear();
                for (std::string_view name : split(v, ',')) {
                    const Method m = method_from_string(name);
                    if (std::find(spec.methods.begin(), spec.methods.end(), m) == spec.methods.end())
                        spec.methods.push_back(m);
                }
            } else if (key == "exact_mode") {
                if (v == "cubic") spec.exact_mode = TransferMode::ExactCubic;
                else if (v == "linear") spec.exact_mode = TransferMode::OverdampedLinear;
                else throw ParseError(e.line, "exact_mode must be cubic or linear");
            } else if (key == "safety_factor") spec.safety_factor = number();
            else if (key == "rel_tol") spec.quadrature.rel_tol = number();
            else if (key == "abs_tol") spec.quadrature.abs_tol = number();
            else if (key == "max_subdivisions") spec.quadrature.max_subdivisions = count();
            else if (key == "tail_cut_multiplier") spec.quadrature.tail_cut_multiplier = number();
            else throw ParseError(e.line, "unknown key '" + key + "'");
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& err) {
            throw ParseError(e.line, err.what());
        }
    }
    spec.validate();
    return spec;
}

} // namespace heat
