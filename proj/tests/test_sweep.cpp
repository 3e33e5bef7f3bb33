#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "heat/errors.hpp"
#include "heat/sweep.hpp"

using namespace heat;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

SweepSpec small_spec() {
    return parse_config(R"(
sweep = gamma_over_omega_d
start = 10
stop = 1e5
points = 5
series = 2:1, 1:0.5
methods = exact, closed, low, high
)");
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "heat_test_sweep";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("defaults") {
    const SweepSpec spec = parse_config("# nothing but a comment\n\n");
    CHECK(spec.variable == SweepVariable::GammaOverOmegaD);
    CHECK(spec.grid.start == 1.0);
    CHECK(spec.grid.stop == 1e5);
    CHECK(spec.grid.points == 20);
    CHECK(spec.grid.spacing == Spacing::Log);
    CHECK(spec.circuit.R == 2.0);
    CHECK(spec.circuit.L == 2.0);
    CHECK(spec.circuit.M == 1.0);
    CHECK(spec.circuit.omega_c == 5.0);
    CHECK(spec.temperatures == TemperaturePair{2.0, 1.0});
    CHECK(spec.methods == std::vector<Method>{Method::ExactQuadrature, Method::ClosedForm});
    CHECK(spec.exact_mode == TransferMode::ExactCubic);
    CHECK(spec.safety_factor == 10.0);
    CHECK(*spec.gamma_over_omega_d == 1e4);
    CHECK_FALSE(spec.preset);
}

TEST_CASE("configuration values") {
    const SweepSpec spec = parse_config(R"(
sweep = T2          # trailing comment
start = 0.5
stop = 4
points = 3
spacing = linear
R = 3
M = 0.5
C = 1e-6
hbar = 2
kb = 0.5
series = 1:*, 4:*
methods = closed, high
exact_mode = linear
safety_factor = 4
rel_tol = 1e-8
max_subdivisions = 100
)");
    CHECK(spec.variable == SweepVariable::T2);
    CHECK(spec.grid.values() == std::vector<double>{0.5, 2.25, 4.0});
    CHECK(spec.circuit.R == 3.0);
    CHECK(spec.circuit.C == 1e-6);
    CHECK_FALSE(spec.gamma_over_omega_d);
    CHECK(spec.circuit.hbar == 2.0);
    CHECK(spec.series.size() == 2);
    CHECK(spec.series[1].T1 == 4.0);
    CHECK(spec.methods == std::vector<Method>{Method::ClosedForm, Method::HighTempAsymptotic});
    CHECK(spec.exact_mode == TransferMode::OverdampedLinear);
    CHECK(spec.quadrature.max_subdivisions == 100);

    const SweepPoint pt = sweep_point(spec, spec.series[1], 2.25);
    CHECK(pt.baths.T1 == 4.0);
    CHECK(pt.baths.T2 == 2.25);
    CHECK(pt.baths.beta2 == 1.0 / (0.5 * 2.25));
}

TEST_CASE("gamma sweep fixes the capacitance") {
    const SweepSpec spec = parse_config("R = 4\nL = 2\n");
    const SweepPoint pt = sweep_point(spec, spec.temperatures, 250.0);
    CHECK(derive_scales(pt.circuit).gamma / derive_scales(pt.circuit).omega_d == Catch::Approx(250.0).epsilon(1e-14));
}

TEST_CASE("ratio-tied temperatures") {
    const SweepSpec spec = parse_config("sweep = T1\nstart = 1e-3\nstop = 1\nT2_over_T1 = 0.5\n");
    const SweepPoint pt = sweep_point(spec, spec.temperatures, 0.1);
    CHECK(pt.baths.T1 == 0.1);
    CHECK(pt.baths.T2 == 0.05);
    CHECK_THROWS_AS(parse_config("T2_over_T1 = 0.5\n"), ValidationError);
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_WITH(parse_config("M = 3\nL = 2\n"), ContainsSubstring("M < L required"));
    CHECK_THROWS_AS(parse_config("spacing = log\nstart = 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("start = 10\nstop = 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("points = 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("C = 1e-4\ngamma_over_omega_d = 10\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("methods =\n"), ParseError);

    try {
        parse_config("points = 5\n\n# comment\nwidth = 3\n");
        FAIL("unknown key accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK_THAT(std::string(e.what()), ContainsSubstring("width"));
    }
    for (const char* text : {"start = ten\n", "points = 2.5\n", "just words\n", "start = 1\nstart = 2\n",
                             "spacing = cubic\n", "series = 1-2\n", "methods = exact, magic\n", "preset = fig9\n",
                             "sweep = R\n", "exact_mode = quartic\n"}) {
        INFO(text);
        CHECK_THROWS_AS(parse_config(text), ParseError);
    }
}

TEST_CASE("grids") {
    const Grid g{1.0, 1e5, 20, Spacing::Log};
    const auto v = g.values();
    CHECK(v.size() == 20);
    CHECK(v.front() == 1.0);
    CHECK(v.back() == 1e5);
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(v[5] / v[4] == Catch::Approx(v[15] / v[14]).epsilon(1e-12));
}

TEST_CASE("presets") {
    for (Preset p : {Preset::Fig2, Preset::Fig3, Preset::Fig4}) {
        const SweepSpec spec = preset_spec(p);
        CHECK_NOTHROW(spec.validate());
        CHECK(preset_from_string(to_string(p)) == p);
        const SweepSpec overridden = parse_config("preset = " + std::string(to_string(p)) + "\npoints = 3\n");
        CHECK(overridden.grid.points == 3);
        CHECK(overridden.preset == p);
    }
    CHECK(preset_spec(Preset::Fig2).effective_series().size() == 3);
    CHECK(preset_spec(Preset::Fig3).t2_over_t1 == 0.5);
    CHECK(preset_spec(Preset::Fig4).variable == SweepVariable::T2);
}

TEST_CASE("sweep rows") {
    const SweepSpec spec = small_spec();
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].series == i / 5);
        if (i % 5) CHECK(rows[i].swept_value > rows[i - 1].swept_value);
        for (const MethodCells& c : rows[i].cells)
            for (double x : {c.q_total, c.q_classical, c.q_quantum}) CHECK(std::isfinite(x));
        const SweepPoint pt = sweep_point(spec, spec.series[rows[i].series], rows[i].swept_value);
        CHECK(rows[i].regime == classify_regime(pt.circuit, derive_scales(pt.circuit), pt.baths).tag);
        CHECK(rows[i].warnings >= 1);  // the low-temperature law is used far outside its range
    }
}

TEST_CASE("failing points are reported, not fatal") {
    const SweepSpec spec = parse_config("sweep = T1\nspacing = linear\nstart = 0\nstop = 1\npoints = 3\nT2 = 0.5\nmethods = closed, low\n");
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].cells[0].q_total == 0.0);
    CHECK(rows[0].warnings >= 1);
    CHECK_THAT(rows[0].messages.front(), ContainsSubstring("closed: failed"));
    CHECK(rows[0].cells[1].q_total < 0.0);
    CHECK(rows[2].cells[0].q_total > 0.0);
}

TEST_CASE("CSV") {
    const SweepSpec spec = small_spec();
    const auto rows = run_sweep(spec);
    const std::string text = format_csv(rows, spec.methods);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.substr(0, text.find('\n')) ==
          "series,swept_value,T1,T2,gamma_over_omega_d,exact_q_total,exact_q_classical,exact_q_quantum,"
          "closed_q_total,closed_q_classical,closed_q_quantum,low_q_total,low_q_classical,low_q_quantum,"
          "high_q_total,high_q_classical,high_q_quantum,regime,warnings");

    SECTION("two rows give three lines") {
        const std::vector<SweepRow> two(rows.begin(), rows.begin() + 2);
        CHECK(count_lines(format_csv(two, spec.methods)) == 3);
    }
    SECTION("round trip") {
        std::vector<Method> methods;
        const auto back = parse_csv(text, &methods);
        CHECK(methods == spec.methods);
        REQUIRE(back.size() == rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(back[i].series == rows[i].series);
            CHECK(back[i].swept_value == rows[i].swept_value);
            CHECK(back[i].T1 == rows[i].T1);
            CHECK(back[i].T2 == rows[i].T2);
            CHECK(back[i].gamma_over_omega_d == rows[i].gamma_over_omega_d);
            CHECK(back[i].regime == rows[i].regime);
            CHECK(back[i].warnings == rows[i].warnings);
            for (std::size_t m = 0; m < methods.size(); ++m) {
                CHECK(back[i].cells[m].q_total == rows[i].cells[m].q_total);
                CHECK(back[i].cells[m].q_classical == rows[i].cells[m].q_classical);
                CHECK(back[i].cells[m].q_quantum == rows[i].cells[m].q_quantum);
            }
        }
        CHECK(format_csv(back, methods) == text);
    }
    SECTION("files") {
        const auto dir = scratch_dir();
        emit_csv(rows, spec.methods, dir / "out.csv");
        CHECK(read_file(dir / "out.csv") == text);
        CHECK_THROWS_AS(emit_csv({}, spec.methods, dir / "empty.csv"), ValidationError);
        CHECK_THROWS_WITH(emit_csv(rows, spec.methods, dir / "missing" / "out.csv"), ContainsSubstring("missing"));
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-300) == "1e-300");
    CHECK(format_double(-2.0) == "-2");
}

TEST_CASE("output is independent of the worker count") {
    const SweepSpec spec = small_spec();
    const std::string serial = format_csv(run_sweep(spec, 1), spec.methods);
    CHECK(format_csv(run_sweep(spec, 4), spec.methods) == serial);
    CHECK(format_csv(run_sweep(spec, 0), spec.methods) == serial);
    CHECK(format_csv(run_sweep(spec, 64), spec.methods) == serial);
}

TEST_CASE("worker count from the environment") {
    ::setenv("HEAT_THREADS", "3", 1);
    CHECK(threads_from_environment() == 3);
    ::setenv("HEAT_THREADS", "many", 1);
    CHECK_THROWS_AS(threads_from_environment(), ValidationError);
    ::unsetenv("HEAT_THREADS");
    CHECK(threads_from_environment() == 0);
}

TEST_CASE("plot scripts") {
    const std::vector<Method> all{Method::ExactQuadrature, Method::ClosedForm, Method::LowTempAsymptotic,
                                  Method::HighTempAsymptotic};
    const std::string fig2 = plot_script(Preset::Fig2, all, "data/out.csv");
    CHECK_THAT(fig2, ContainsSubstring("ax.set_xscale(\"log\")"));
    CHECK_THAT(fig2, ContainsSubstring("exact_q_total"));
    CHECK_THAT(fig2, ContainsSubstring("closed_q_total"));
    CHECK_THAT(fig2, ContainsSubstring("CSV = \"data/out.csv\""));
    CHECK_THAT(fig2, ContainsSubstring("os.path.dirname(os.path.abspath(__file__))"));

    const std::string fig3 = plot_script(Preset::Fig3, all, "out.csv");
    CHECK_THAT(fig3, ContainsSubstring("closed_q_total"));
    CHECK_THAT(fig3, ContainsSubstring("low_q_total"));

    const std::string fig4 = plot_script(Preset::Fig4, all, "out.csv");
    CHECK_THAT(fig4, ContainsSubstring("high_q_quantum\"), \"--\""));
    CHECK_THAT(fig4, ContainsSubstring("closed_q_quantum"));

    CHECK_THROWS_AS(plot_script(Preset::Fig3, {Method::ClosedForm}, "out.csv"), ValidationError);

    const auto dir = scratch_dir();
    std::filesystem::create_directories(dir / "plots");
    emit_plot_script(Preset::Fig2, all, dir / "out.csv", dir / "plots" / "fig2.py");
    CHECK_THAT(read_file(dir / "plots" / "fig2.py"), ContainsSubstring("CSV = \"../out.csv\""));
}
