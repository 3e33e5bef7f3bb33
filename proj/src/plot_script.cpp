#include <algorithm>
#include <fstream>

#include "heat/errors.hpp"
#include "heat/sweep.hpp"

namespace heat {

namespace {

void require_methods(Preset preset, const std::vector<Method>& methods, std::initializer_list<Method> needed) {
    for (Method m : needed)
        if (std::find(methods.begin(), methods.end(), m) == methods.end())
            throw ValidationError("the " + std::string(to_string(preset)) + " plot needs the '" +
                                  std::string(short_name(m)) + "' method in the sweep");
}

std::string python_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\\' || c == '"') out += '\\';
        out += c;
    }
    return out + "\"";
}

const char* kPrologue = R"(#!/usr/bin/env python3
# Generated by `heat sweep`. Run with python3; needs matplotlib.
import csv
import os
from collections import defaultdict

import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(HERE, CSV), newline="") as fh:
    rows = list(csv.DictReader(fh))

series = defaultdict(list)
for r in rows:
    series[int(r["series"])].append(r)


def col(rs, name):
    return [float(r[name]) for r in rs]


fig, ax = plt.subplots(figsize=(6, 4.5))
)";

const char* kFig2 = R"(for s, rs in sorted(series.items()):
    x = col(rs, "swept_value")
    label = "T1=%s, T2=%s" % (rs[0]["T1"], rs[0]["T2"])
    (line,) = ax.plot(x, col(rs, "exact_q_total"), "-", label=label)
    ax.plot(x, col(rs, "closed_q_total"), "--", color=line.get_color())
ax.set_xscale("log")
ax.set_xlabel(r"$\gamma/\omega_d$")
ax.set_ylabel(r"$\dot Q_1$")
ax.set_title("solid: exact quadrature, dashed: overdamped closed form")
)";

const char* kFig3 = R"(for s, rs in sorted(series.items()):
    x = col(rs, "swept_value")
    (line,) = ax.plot(x, [abs(v) for v in col(rs, "closed_q_total")], "-", label="closed form")
    ax.plot(x, [abs(v) for v in col(rs, "low_q_total")], "--", color="k", label=r"$T^4$ law")
ax.set_xscale("log")
ax.set_yscale("log")
ax.set_xlabel(r"$T_1$")
ax.set_ylabel(r"$|\dot Q_1|$")
)";

const char* kFig4 = R"(for s, rs in sorted(series.items()):
    x = col(rs, "swept_value")
    label = "T1=%s" % rs[0]["T1"]
    (line,) = ax.plot(x, col(rs, "closed_q_quantum"), "-", label=label)
    ax.plot(x, col(rs, "high_q_quantum"), "--", color=line.get_color())
ax.set_xscale("log")
ax.set_xlabel(r"$T_2$")
ax.set_ylabel(r"$\dot Q_1^{qu}$")
ax.set_title("dashed: high-temperature logarithm")
)";

const char* kEpilogue = R"(ax.legend(fontsize="small")
fig.tight_layout()
out = os.path.join(HERE, PNG)
fig.savefig(out, dpi=150)
print(out)
)";

} // namespace

std::string plot_script(Preset preset, const std::vector<Method>& methods, const std::string& csv_relative_path) {
    const char* body = nullptr;
    switch (preset) {
    case Preset::Fig2:
        require_methods(preset, methods, {Method::ExactQuadrature, Method::ClosedForm});
        body = kFig2;
        break;
    case Preset::Fig3:
        require_methods(preset, methods, {Method::ClosedForm, Method::LowTempAsymptotic});
        body = kFig3;
        break;
    case Preset::Fig4:
        require_methods(preset, methods, {Method::ClosedForm, Method::HighTempAsymptotic});
        body = kFig4;
        break;
    }
    std::string script = kPrologue;
    const std::string head = "import matplotlib.pyplot as plt\n";
    const std::string consts = "\nCSV = " + python_string(csv_relative_path) + "\nPNG = " +
                               python_string(std::string(to_string(preset)) + ".png") + "\n";
    script.insert(script.find(head) + head.size(), consts);
    return script + body + kEpilogue;
}

void emit_plot_script(Preset preset, const std::vector<Method>& methods, const std::filesystem::path& csv_path,
                      const std::filesystem::path& destination) {
    const auto dir = std::filesystem::absolute(destination).parent_path();
    const auto rel = std::filesystem::absolute(csv_path).lexically_relative(dir);
    const std::string text = plot_script(preset, methods, rel.empty() ? csv_path.generic_string() : rel.generic_string());
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + destination.string() + " for writing");
    out << text;
    out.close();
    if (!out) throw IoError("write to " + destination.string() + " failed");
}

} // namespace heat
