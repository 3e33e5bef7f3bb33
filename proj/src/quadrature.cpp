#include "heat/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "heat/errors.hpp"

namespace heat {

namespace {

// 21-point Kronrod abscissae (descending, last is the centre) and weights, with
// the weights of the embedded 10-point Gauss rule on the odd-indexed abscissae.
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478640, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Panel {
    double a, b, value, error;
    bool frozen;  // too narrow to bisect further
};

Panel make_panel(const std::function<double(double)>& f, double a, double b) {
    const PanelEstimate e = gauss_kronrod21(f, a, b);
    return {a, b, e.kronrod, std::abs(e.kronrod - e.gauss), false};
}

} // namespace

PanelEstimate gauss_kronrod21(const std::function<double(double)>& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = kKronrodWeights[10] * fc;
    double gauss = 0.0;
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kNodes[j];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return {kronrod * half, gauss * half};
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints, double rel_tol,
                                    double abs_tol, std::size_t max_subdivisions) {
    if (breakpoints.size() < 2) throw ValidationError("integrate_adaptive: need at least two breakpoints");
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
        throw ValidationError("integrate_adaptive: breakpoints must be sorted");

    std::vector<Panel> panels;
    panels.reserve(max_subdivisions + breakpoints.size());
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (breakpoints[i] < breakpoints[i + 1])
            panels.push_back(make_panel(f, breakpoints[i], breakpoints[i + 1]));

    auto totals = [&panels] {
        double v = 0.0, e = 0.0;
        for (const Panel& p : panels) {
            v += p.value;
            e += p.error;
        }
        return std::pair{v, e};
    };

    auto [value, error] = totals();
    while (error > std::max(abs_tol, rel_tol * std::abs(value)) && panels.size() < max_subdivisions) {
        auto worst = std::max_element(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) {
            return (x.frozen ? -1.0 : x.error) < (y.frozen ? -1.0 : y.error);
        });
        if (worst == panels.end() || worst->frozen) break;
        const double a = worst->a, b = worst->b, mid = 0.5 * (a + b);
        if (!(a < mid && mid < b)) {
            worst->frozen = true;
            continue;
        }
        *worst = make_panel(f, a, mid);
        panels.push_back(make_panel(f, mid, b));
        std::tie(value, error) = totals();
    }

    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::tie(value, error) = totals();
    if (!std::isfinite(value)) throw NumericalError("integrate_adaptive: non-finite integrand");
    return {value, error, panels.size(), error <= std::max(abs_tol, rel_tol * std::abs(value))};
}

} // namespace heat
