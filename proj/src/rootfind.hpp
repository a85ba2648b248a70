#pragma once

#include <cmath>
#include <functional>

#include "error.hpp"

namespace levy {

// Solve f(x) = target for a monotone f on (0, inf), bracketing geometrically
// from `guess` and bisecting.  `increasing` describes f.
inline double monotone_solve(const std::function<double(double)>& f, double target,
                             double guess, bool increasing, double rel_tol = 1e-13,
                             int max_iter = 400) {
    if (!(guess > 0.0) || !std::isfinite(guess))
        throw Error(ErrorCode::invalid_argument, "monotone_solve: guess must be positive");
    auto g = [&](double x) { return increasing ? f(x) - target : target - f(x); };
    // g is increasing; find lo with g(lo) <= 0 <= g(hi).
    double lo = guess, hi = guess;
    double glo = g(lo);
    int budget = max_iter;
    while (glo > 0.0 && budget-- > 0) { lo *= 0.5; glo = g(lo); }
    if (glo > 0.0) throw Error(ErrorCode::numeric, "monotone_solve: no lower bracket");
    double ghi = g(hi);
    budget = max_iter;
    while (ghi < 0.0 && budget-- > 0) { hi *= 2.0; ghi = g(hi); }
    if (ghi < 0.0) throw Error(ErrorCode::numeric, "monotone_solve: no upper bracket");
    for (int i = 0; i < max_iter && (hi - lo) > rel_tol * hi; ++i) {
        double mid = std::sqrt(lo * hi);  // geometric midpoint: brackets span decades
        if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
        if (g(mid) <= 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace levy
