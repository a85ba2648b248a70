#pragma once

#include <functional>

namespace levy::quad {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 48;        // bisection depth per panel
    std::size_t max_panels = 4000;  // geometric panels toward 0 / infinity
};

struct Outcome {
    double value = 0.0;
    double err = 0.0;  // absolute error estimate actually achieved
};

using Fn = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7,15) on a finite interval.  Throws
// Error(quadrature) with the partial value when the tolerance is missed.
Outcome integrate(const Fn& f, double a, double b, const Options& opt = {});

// Improper integral over (a, b) where a may be 0 with an integrable
// singularity and b may be +infinity.  Uses geometric panels toward the
// troublesome endpoints and detects divergence (throws Error(divergence)
// carrying the partial sum).  The geometric sweep stops once panel
// contributions become negligible, so pass tight bounds for integrands with
// bounded support instead of relying on the sweep to find it.
Outcome integrate_improper(const Fn& f, double a, double b, const Options& opt = {});

// Same as integrate_improper but with user-supplied interior breakpoints
// (useful when the integrand has known kinks, e.g. tabulated densities).
Outcome integrate_improper_pts(const Fn& f, double a, double b,
                               const std::vector<double>& interior_pts,
                               const Options& opt = {});

}  // namespace levy::quad
