// heat: command-line front end: single-point evaluation and parameter sweeps.
//
// Exit status: 0 success, 1 invalid input or I/O failure, 2 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "heat/errors.hpp"
#include "heat/sweep.hpp"

namespace {

int run_eval(const heat::CircuitParams& p, double T1, double T2, const std::string& method_name,
             const std::string& mode, heat::ReportOptions opts) {
    opts.exact_mode = mode == "linear" ? heat::TransferMode::OverdampedLinear : heat::TransferMode::ExactCubic;
    const heat::Method method = heat::method_from_string(method_name);
    const heat::DerivedScales s = heat::derive_scales(p);
    const heat::BathPair b = heat::BathPair::make(T1, T2, p.kb);
    // A single evaluation fails outright when the quadrature misses its tolerance.
    if (method == heat::Method::ExactQuadrature) heat::heat_exact(p, b, opts.exact_mode, opts.quadrature);
    const heat::HeatReport r = heat::assemble_report(p, s, b, method, opts);

    std::cout << "method=" << heat::to_string(r.method) << '\n'
              << "q_total=" << heat::format_double(r.q_total) << '\n'
              << "q_classical=" << heat::format_double(r.q_classical) << '\n'
              << "q_quantum=" << heat::format_double(r.q_quantum) << '\n'
              << "error_estimate=" << heat::format_double(r.error_estimate) << '\n'
              << "regime=" << heat::to_string(r.regime.tag) << '\n';
    for (const auto& c : r.regime.conditions)
        std::cout << "condition=" << c.name << (c.satisfied ? " ok" : " FAILS") << " margin="
                  << heat::format_double(c.margin) << '\n';
    for (const std::string& w : r.validity_warnings) std::cerr << "warning: " << w << '\n';
    return 0;
}

int run_sweep_command(const std::string& config_path, const std::string& preset_name, const std::string& out_path,
                      const std::string& plot_path) {
    heat::SweepSpec base;
    if (!preset_name.empty()) base = heat::preset_spec(heat::preset_from_string(preset_name));
    heat::SweepSpec spec = base;
    if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) throw heat::IoError("cannot read " + config_path);
        std::ostringstream text;
        text << in.rdbuf();
        spec = heat::parse_config(text.str(), base);
    }
    spec.validate();
    if (!plot_path.empty() && !spec.preset) throw heat::ValidationError("--plot needs a preset");

    const auto rows = heat::run_sweep(spec, heat::threads_from_environment());
    heat::emit_csv(rows, spec.methods, out_path);
    if (!plot_path.empty()) heat::emit_plot_script(*spec.preset, spec.methods, out_path, plot_path);

    std::size_t warned = 0;
    for (const auto& r : rows) {
        if (r.warnings) ++warned;
        for (const std::string& m : r.messages)
            std::cerr << "warning [series " << r.series << ", " << heat::to_string(spec.variable) << "="
                      << heat::format_double(r.swept_value) << "]: " << m << '\n';
    }
    std::cout << "wrote " << rows.size() << " rows to " << out_path;
    if (warned) std::cout << " (" << warned << " with warnings)";
    std::cout << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heat current between two thermal baths coupled through inductively linked RLC circuits"};
    app.require_subcommand(1);

    heat::CircuitParams p;
    double T1 = 2.0, T2 = 1.0;
    heat::ReportOptions opts;
    std::string method = "closed", mode = "cubic";
    auto* eval = app.add_subcommand("eval", "Heat current at one parameter point");
    eval->add_option("--R", p.R, "resistance")->capture_default_str();
    eval->add_option("--L", p.L, "self inductance")->capture_default_str();
    eval->add_option("--C", p.C, "capacitance")->capture_default_str();
    eval->add_option("--M", p.M, "mutual inductance")->capture_default_str();
    eval->add_option("--omega-c", p.omega_c, "bath cutoff frequency")->capture_default_str();
    eval->add_option("--hbar", p.hbar)->capture_default_str();
    eval->add_option("--kb", p.kb)->capture_default_str();
    eval->add_option("--T1", T1, "temperature of bath 1")->capture_default_str();
    eval->add_option("--T2", T2, "temperature of bath 2")->capture_default_str();
    eval->add_option("--method", method, "exact | closed | low | high")->capture_default_str();
    eval->add_option("--mode", mode, "transfer function used by exact")
        ->check(CLI::IsMember({"cubic", "linear"}))
        ->capture_default_str();
    eval->add_option("--safety-factor", opts.safety_factor, "threshold for '<<'")->capture_default_str();
    eval->add_option("--rel-tol", opts.quadrature.rel_tol, "quadrature relative tolerance")->capture_default_str();
    eval->add_option("--max-subdivisions", opts.quadrature.max_subdivisions)->capture_default_str();

    std::string config, preset, out, plot;
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and write a CSV");
    sweep->add_option("--config", config, "key = value configuration file");
    sweep->add_option("--preset", preset, "fig2 | fig3 | fig4 (config keys override it)");
    sweep->add_option("--out", out, "CSV destination")->required();
    sweep->add_option("--plot", plot, "also write a matplotlib script here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*eval) return run_eval(p, T1, T2, method, mode, opts);
        return run_sweep_command(config, preset, out, plot);
    } catch (const heat::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const heat::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const heat::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    }
}
