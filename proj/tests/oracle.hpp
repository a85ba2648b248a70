#pragma once

// Test-only reference integrator, deliberately independent of the library's
// Gauss-Kronrod machinery: double-exponential (tanh-sinh) rule with level
// doubling.  Good to ~1e-13 relative on smooth integrands; used to freeze
// expected values for quadrature-backed operations.

#include <cmath>
#include <functional>
#include <limits>

namespace oracle {

inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    const double c = 0.5 * (a + b), h0 = 0.5 * (b - a);
    auto g = [&](double t) {
        double s = std::sinh(t);
        double x = std::tanh(0.5 * M_PI * s);
        double w = 0.5 * M_PI * std::cosh(t) / std::pow(std::cosh(0.5 * M_PI * s), 2);
        double xx = c + h0 * x;
        if (xx <= a || xx >= b) return 0.0;  // clipped by rounding at the ends
        double v = f(xx) * w * h0;
        return std::isfinite(v) ? v : 0.0;
    };
    const double tmax = 4.0;
    double h = 1.0;
    double sum = g(0.0);
    for (double t = h; t <= tmax; t += h) sum += g(t) + g(-t);
    double prev = sum * h;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += g(t) + g(-t);
        double cur = prev * 0.5 + add * h;
        if (level >= 4 && std::abs(cur - prev) <= tol * (std::abs(cur) + 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

// int_a^inf f, via x = a + u/(1-u) on u in (0,1).
inline double tanh_sinh_to_inf(const std::function<double(double)>& f, double a,
                               double tol = 1e-13) {
    auto g = [&](double u) {
        double x = a + u / (1.0 - u);
        double jac = 1.0 / ((1.0 - u) * (1.0 - u));
        return f(x) * jac;
    };
    return tanh_sinh(g, 0.0, 1.0, tol);
}

// int_0^inf split at 1 to keep the singular end and the tail separated.
inline double tanh_sinh_0_inf(const std::function<double(double)>& f, double tol = 1e-13) {
    return tanh_sinh(f, 0.0, 1.0, tol) + tanh_sinh_to_inf(f, 1.0, tol);
}

}  // namespace oracle
