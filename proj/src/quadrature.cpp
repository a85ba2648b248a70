#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "error.hpp"

namespace levy::quad {

namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1,1] (QUADPACK dqk15 values).
constexpr double kXgk[8] = {
    0.9914553711208126392069, 0.9491079123427585245262, 0.8648644233597690727897,
    0.7415311855993944398639, 0.5860872354676911302941, 0.4058451513773971669066,
    0.2077849550078984676007, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637, 0.0630920926299785532907, 0.1047900103222501838399,
    0.1406532597155259187452, 0.1690047266392679028266, 0.1903505780647854099133,
    0.2044329400752988924142, 0.2094821410847278280130};
constexpr double kWg[4] = {
    0.1294849661688696932706, 0.2797053914892766679015, 0.3818300505051189449504,
    0.4179591836734693877551};

struct PanelEst {
    double kronrod;
    double err;
};

PanelEst gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i) {
        int j = 2 * i + 1;  // Gauss nodes sit at the odd Kronrod indices
        resg += kWg[i] * (fv[j] + fv[14 - j]);
    }
    resk *= h;
    resg *= h;
    return {resk, std::abs(resk - resg)};
}

// Recursive bisection until the panel error estimate is below tol.
void refine(const Fn& f, double a, double b, double tol, int depth,
            const Options& opt, double& value, double& err, std::size_t& panels) {
    if (++panels > 16 * opt.max_panels)
        throw Error(ErrorCode::quadrature,
                    "adaptive refinement budget exhausted near [" + std::to_string(a) + ", " +
                        std::to_string(b) + "] depth " + std::to_string(depth),
                    value, std::numeric_limits<double>::infinity());
    PanelEst e = gk15(f, a, b);
    if (!std::isfinite(e.kronrod)) {
        double m = 0.5 * (a + b);
        if (depth >= opt.max_depth)
            throw Error(ErrorCode::quadrature,
                        "non-finite integrand values persist under refinement", value,
                        std::numeric_limits<double>::infinity());
        refine(f, a, m, tol * 0.5, depth + 1, opt, value, err, panels);
        refine(f, m, b, tol * 0.5, depth + 1, opt, value, err, panels);
        return;
    }
    // Accept when the requested tolerance is met or further splitting cannot
    // beat double rounding on this panel.
    if (e.err <= tol || e.err <= 3e-15 * std::abs(e.kronrod) || depth >= opt.max_depth) {
        value += e.kronrod;
        err += e.err;
        return;
    }
    double m = 0.5 * (a + b);
    refine(f, a, m, tol * 0.5, depth + 1, opt, value, err, panels);
    refine(f, m, b, tol * 0.5, depth + 1, opt, value, err, panels);
}

double panel_tol(const Options& opt) { return std::max(opt.abs_tol / 64.0, 1e-300); }

void check_achieved(double value, double err, const Options& opt) {
    double allowed = std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
    if (err > 8.0 * allowed)
        throw Error(ErrorCode::quadrature, "adaptive quadrature missed the requested tolerance",
                    value, err);
}

}  // namespace

Outcome integrate(const Fn& f, double a, double b, const Options& opt) {
    if (!(a <= b)) throw Error(ErrorCode::invalid_argument, "integrate: require a <= b");
    if (a == b) return {0.0, 0.0};
    double value = 0.0, err = 0.0;
    std::size_t panels = 0;
    refine(f, a, b, panel_tol(opt), 0, opt, value, err, panels);
    check_achieved(value, err, opt);
    return {value, err};
}

Outcome integrate_improper_pts(const Fn& f, double a, double b,
                               const std::vector<double>& interior_pts, const Options& opt) {
    if (a < 0.0 || !(a < b))
        throw Error(ErrorCode::invalid_argument, "integrate_improper: require 0 <= a < b");

    const bool open_low = (a == 0.0);
    const bool open_high = std::isinf(b);

    // Finite core interval [lo, hi]; geometric panel sweeps extend past it.
    double lo = open_low ? 1.0 : a;
    double hi = open_high ? std::max(2.0 * lo, 2.0) : b;
    if (open_low && !open_high) lo = std::min(1.0, 0.5 * b);
    if (open_high && !open_low) hi = std::max(2.0, 2.0 * a);
    if (open_low && open_high) { lo = 1.0; hi = 2.0; }
    if (!open_low && !open_high) { lo = a; hi = b; }
    // User breakpoints mark structure that must sit inside the core.
    for (double p : interior_pts) {
        if (p > a && (!open_high ? p < b : true)) {
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
    }
    lo = std::max(lo, a);
    hi = open_high ? hi : std::min(hi, b);
    if (lo > hi) lo = hi;

    double value = 0.0, err = 0.0;
    std::size_t panels = 0;
    const double ptol = panel_tol(opt);

    // Core panels, split at user breakpoints.
    {
        std::vector<double> pts;
        pts.push_back(lo);
        for (double p : interior_pts)
            if (p > lo && p < hi) pts.push_back(p);
        pts.push_back(hi);
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (pts[i] < pts[i + 1]) refine(f, pts[i], pts[i + 1], ptol, 0, opt, value, err, panels);
    }

    // Sweep toward an endpoint with geometric panels; `shrink` maps the
    // current boundary to the next one (x/2 toward zero, 2x toward infinity).
    auto sweep = [&](double start, bool toward_zero, double hard_limit) {
        double edge = start;
        double prev = std::numeric_limits<double>::infinity();
        std::size_t stall = 0;
        for (std::size_t k = 0; k < opt.max_panels; ++k) {
            double nxt = toward_zero ? edge * 0.5 : edge * 2.0;
            if (toward_zero && nxt < hard_limit) nxt = hard_limit;
            if (!toward_zero && nxt > hard_limit) nxt = hard_limit;
            double pa = toward_zero ? nxt : edge;
            double pb = toward_zero ? edge : nxt;
            if (!(pa < pb)) return;
            double pv = 0.0, pe = 0.0;
            refine(f, pa, pb, ptol, 0, opt, pv, pe, panels);
            value += pv;
            err += pe;
            double contrib = std::abs(pv);
            // Convergence: once contributions decay geometrically, close the
            // sum with the extrapolated remainder of the geometric tail.
            if (contrib <= prev) {
                double q = (prev > 0.0 && std::isfinite(prev)) ? contrib / prev : 0.0;
                q = std::min(q, 0.9);
                double remainder = contrib * q / (1.0 - q);
                if (remainder + contrib * 0.02 <=
                    0.5 * std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) {
                    double sign = (pv >= 0.0) ? 1.0 : -1.0;
                    value += sign * remainder;
                    err += remainder + contrib * 0.02;
                    return;
                }
            }
            // Divergence: contributions stop decaying while the sum keeps growing.
            if (contrib >= 0.95 * prev && contrib > opt.abs_tol) {
                if (++stall >= 24)
                    throw Error(ErrorCode::divergence,
                                "integral diverges: panel contributions do not decay", value, err);
            } else {
                stall = 0;
            }
            if (std::abs(value) > 1e250)
                throw Error(ErrorCode::divergence, "integral diverges: partial sum overflow",
                            value, err);
            prev = contrib;
            edge = nxt;
            if (edge == hard_limit) return;
        }
        throw Error(ErrorCode::quadrature, "improper integral: panel budget exhausted", value, err);
    };

    if (open_low && lo > a) sweep(lo, /*toward_zero=*/true, /*hard_limit=*/0.0);
    if (open_high && (std::isinf(b) || hi < b)) sweep(hi, /*toward_zero=*/false,
                                                      std::numeric_limits<double>::infinity());

    check_achieved(value, err, opt);
    return {value, err};
}

Outcome integrate_improper(const Fn& f, double a, double b, const Options& opt) {
    return integrate_improper_pts(f, a, b, {}, opt);
}

}  // namespace levy::quad
