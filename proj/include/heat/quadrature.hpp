// quadrature.hpp: globally adaptive Gauss-Kronrod (G10/K21) integration

#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace heat {

struct QuadratureResult {
    double value{};
    double error{};            // estimated absolute error
    std::size_t subdivisions{};  // panels in the final partition
    bool converged{};
};

// Integrates f over [breakpoints.front(), breakpoints.back()], starting from the
// panels delimited by the (sorted) breakpoints and repeatedly bisecting the panel
// with the largest error estimate until error <= max(abs_tol, rel_tol * |value|)
// or max_subdivisions panels exist. The returned sum is taken over panels in
// left-to-right order, so the result is independent of the refinement history.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints, double rel_tol,
                                    double abs_tol, std::size_t max_subdivisions);

// One K21 panel with its embedded G10 estimate (exposed for tests).
struct PanelEstimate {
    double kronrod{};
    double gauss{};
};
PanelEstimate gauss_kronrod21(const std::function<double(double)>& f, double a, double b);

} // namespace heat
