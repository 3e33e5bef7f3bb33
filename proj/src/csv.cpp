#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "heat/errors.hpp"
#include "heat/sweep.hpp"

namespace heat {

std::string format_double(double x) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) throw NumericalError("cannot format double");
    return std::string(buf.data(), ptr);
}

std::string csv_header(const std::vector<Method>& methods) {
    std::string h = "series,swept_value,T1,T2,gamma_over_omega_d";
    for (Method m : methods) {
        const std::string n{short_name(m)};
        h += "," + n + "_q_total," + n + "_q_classical," + n + "_q_quantum";
    }
    return h + ",regime,warnings";
}

std::string format_csv(const std::vector<SweepRow>& rows, const std::vector<Method>& methods) {
    std::string out = csv_header(methods) + "\n";
    for (const SweepRow& r : rows) {
        if (r.cells.size() != methods.size()) throw ValidationError("row has the wrong number of method cells");
        out += std::to_string(r.series);
        for (double x : {r.swept_value, r.T1, r.T2, r.gamma_over_omega_d}) out += "," + format_double(x);
        for (const MethodCells& c : r.cells)
            for (double x : {c.q_total, c.q_classical, c.q_quantum}) out += "," + format_double(x);
        out += "," + std::string(to_string(r.regime)) + "," + std::to_string(r.warnings) + "\n";
    }
    return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::vector<Method>& methods,
              const std::filesystem::path& destination) {
    if (rows.empty()) throw ValidationError("refusing to write a CSV with no rows");
    const std::string text = format_csv(rows, methods);
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + destination.string() + " for writing");
    out << text;
    out.close();
    if (!out) throw IoError("write to " + destination.string() + " failed");
}

namespace {

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        out.push_back(line.substr(pos, comma - pos));
        if (comma == std::string_view::npos) return out;
        pos = comma + 1;
    }
}

double to_double(std::string_view s, std::size_t line) {
    double x{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, "bad number '" + std::string(s) + "'");
    return x;
}

std::size_t to_count(std::string_view s, std::size_t line) {
    std::size_t x{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, "bad integer '" + std::string(s) + "'");
    return x;
}

RegimeTag regime_from_string(std::string_view s, std::size_t line) {
    for (RegimeTag t : {RegimeTag::HighT, RegimeTag::IntermediateT, RegimeTag::LowT, RegimeTag::Mixed,
                        RegimeTag::OutsideOverdamped})
        if (s == to_string(t)) return t;
    throw ParseError(line, "unknown regime '" + std::string(s) + "'");
}

} // namespace

std::vector<SweepRow> parse_csv(std::string_view text, std::vector<Method>* methods_out) {
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos < text.size();) {
        const auto eol = text.find('\n', pos);
        lines.push_back(text.substr(pos, eol - pos));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (lines.empty()) throw ParseError(1, "missing header");

    const auto header = fields(lines[0]);
    if (header.size() < 7 || (header.size() - 7) % 3 != 0) throw ParseError(1, "unexpected header");
    std::vector<Method> methods;
    for (std::size_t i = 5; i + 2 < header.size(); i += 3) {
        const auto col = header[i];
        const auto suffix = std::string_view("_q_total");
        if (!col.ends_with(suffix)) throw ParseError(1, "unexpected column '" + std::string(col) + "'");
        methods.push_back(method_from_string(col.substr(0, col.size() - suffix.size())));
    }
    if (std::string(lines[0]) != csv_header(methods)) throw ParseError(1, "unexpected header");

    std::vector<SweepRow> rows;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        const auto f = fields(lines[n]);
        if (f.size() != header.size()) throw ParseError(n + 1, "wrong number of fields");
        SweepRow r;
        r.series = to_count(f[0], n + 1);
        r.swept_value = to_double(f[1], n + 1);
        r.T1 = to_double(f[2], n + 1);
        r.T2 = to_double(f[3], n + 1);
        r.gamma_over_omega_d = to_double(f[4], n + 1);
        for (std::size_t m = 0; m < methods.size(); ++m)
            r.cells.push_back({to_double(f[5 + 3 * m], n + 1), to_double(f[6 + 3 * m], n + 1),
                               to_double(f[7 + 3 * m], n + 1)});
        r.regime = regime_from_string(f[f.size() - 2], n + 1);
        r.warnings = to_count(f.back(), n + 1);
        rows.push_back(std::move(r));
    }
    if (methods_out) *methods_out = methods;
    return rows;
}

} // namespace heat
