#include "specfun.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "error.hpp"
#include "quadrature.hpp"
#include "rootfind.hpp"

namespace levy {

TemperingParams::TemperingParams(double p_, double alpha_) : p(p_), alpha(alpha_) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw Error(ErrorCode::invalid_argument, "tempering: p must be positive");
    if (!(alpha < 2.0) || alpha == 0.0 || !std::isfinite(alpha))
        throw Error(ErrorCode::invalid_argument, "tempering: alpha must lie in (-inf,2) \\ {0}");
}

namespace specfun {

namespace {

double g_integrand(double x, double alpha, double p) {
    return std::pow(x, -1.0 - alpha) * std::exp(-std::pow(x, p));
}

// Upper limit beyond which e^{-x^p} underflows any double.
double g_support_cap(double p) { return std::pow(745.0, 1.0 / p); }

double g_tail_quad(double u, double alpha, double p, double abs_tol, double rel_tol) {
    const double cap = g_support_cap(p);
    if (u >= cap) return 0.0;
    quad::Options opt;
    opt.abs_tol = abs_tol;
    opt.rel_tol = rel_tol;
    auto f = [&](double x) { return g_integrand(x, alpha, p); };
    if (u == 0.0) {
        if (alpha >= 0.0) return std::numeric_limits<double>::infinity();
        return quad::integrate_improper(f, 0.0, cap, opt).value;
    }
    // Geometric breakpoints resolve the power-law stretch between u and O(1).
    std::vector<double> pts;
    for (double x = u * 2.0; x < std::min(4.0, cap); x *= 2.0) pts.push_back(x);
    return quad::integrate_improper_pts(f, u, cap, pts, opt).value;
}

}  // namespace

double k_const(double eta, const TemperingParams& tp) {
    if (!(eta > tp.alpha))
        throw Error(ErrorCode::divergence,
                    "k_const diverges: requires eta > alpha (integrand ~ t^{-1} or worse at 0)");
    return std::tgamma((eta - tp.alpha) / tp.p) / tp.p;
}

double g_tail_raw(double u, double alpha, double p) {
    if (u < 0.0 || !std::isfinite(u))
        throw Error(ErrorCode::invalid_argument, "g_tail: u must be finite and >= 0");
    return g_tail_quad(u, alpha, p, 1e-13, 1e-12);
}

double c_const_raw(double alpha, double p) {
    if (alpha >= 0.0)
        throw Error(ErrorCode::divergence, "c_{alpha,p} is finite only for alpha < 0");
    return std::tgamma(-alpha / p) / p;
}

double g_tail(double u, const TemperingParams& tp) { return g_tail_raw(u, tp.alpha, tp.p); }

double c_const(const TemperingParams& tp) { return c_const_raw(tp.alpha, tp.p); }

double g_tail_inverse(double t, const TemperingParams& tp) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw Error(ErrorCode::invalid_argument, "g_tail_inverse: t must be positive and finite");
    if (tp.alpha < 0.0) {
        double c = c_const(tp);
        if (t >= c)
            throw Error(ErrorCode::domain,
                        "g_tail_inverse: t >= c_{alpha,p}, outside the range of G");
    }
    const double tol = 1e-12 * std::max(1.0, t);
    auto g = [&](double u) { return g_tail_quad(u, tp.alpha, tp.p, 0.25 * tol, 1e-13); };
    // Initial guess from the small-u asymptote (alpha > 0) or from scale 1.
    double guess = tp.alpha > 0.0 ? std::pow(tp.alpha * t, -1.0 / tp.alpha) : 1.0;
    if (!(guess > 0.0) || !std::isfinite(guess)) guess = 1.0;
    double u = monotone_solve(g, t, guess, /*increasing=*/false, 1e-14);
    double achieved = std::abs(g(u) - t);
    if (achieved > tol)
        throw Error(ErrorCode::numeric, "g_tail_inverse: refinement stalled", u, achieved);
    return u;
}

GTable::GTable(double alpha, double p, double u_min, double u_max)
    : alpha_(alpha), p_(p), u_min_(u_min), u_max_(u_max) {
    const double cap = g_support_cap(p_);
    u_max_ = std::min(u_max_, 0.5 * cap);
    if (!(u_min_ > 0.0) || !(u_min_ < u_max_))
        throw Error(ErrorCode::invalid_argument, "GTable: need 0 < u_min < u_max");

    const double decades = std::log10(u_max_ / u_min_);
    const std::size_t n = std::max<std::size_t>(64, static_cast<std::size_t>(decades * 160) + 2);
    std::vector<double> u = geomspace(u_min_, u_max_, n);

    // Accumulate G from the top down; each segment is one well-resolved panel.
    std::vector<double> g(n);
    g[n - 1] = g_tail_quad(u_max_, alpha_, p_, 1e-300, 1e-12);
    auto f = [&](double x) { return g_integrand(x, alpha_, p_); };
    for (std::size_t i = n - 1; i-- > 0;) {
        quad::Options o;
        o.abs_tol = std::max(1e-300, 1e-13 * g[i + 1]);
        o.rel_tol = 1e-12;
        g[i] = g[i + 1] + quad::integrate(f, u[i], u[i + 1], o).value;
    }
    g_at_min_ = g[0];
    g_at_max_ = g[n - 1];

    std::vector<double> lu(n), lg(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(g[i] > 0.0))
            throw Error(ErrorCode::numeric, "GTable: tail underflowed inside requested range");
        lu[i] = std::log(u[i]);
        lg[i] = std::log(g[i]);
    }
    loglog_ = MonotoneCubic(std::move(lu), std::move(lg));
}

double GTable::operator()(double u) const {
    if (u >= u_min_ && u <= u_max_) return std::exp(loglog_(std::log(u)));
    return g_tail_quad(u, alpha_, p_, 1e-13, 1e-12);
}

double GTable::inverse(double w) const {
    if (w <= g_at_max_ || w >= g_at_min_) {
        // Outside the table: rigorous (slow) path via fresh quadratures.
        auto g = [&](double u) { return g_tail_quad(u, alpha_, p_, 1e-14 * std::max(1.0, w), 1e-13); };
        double guess = alpha_ > 0.0 ? std::pow(alpha_ * w, -1.0 / alpha_) : 1.0;
        if (!(guess > 0.0) || !std::isfinite(guess)) guess = 1.0;
        return monotone_solve(g, w, guess, /*increasing=*/false, 1e-14);
    }
    return std::exp(loglog_.inverse(std::log(w)));
}

std::shared_ptr<const GTable> shared_g_table(double alpha, double p, double u_min,
                                             double u_max) {
    static std::mutex mu;
    static std::map<std::pair<double, double>, std::shared_ptr<const GTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(alpha, p);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->u_min() <= u_min && it->second->u_max() >= u_max)
        return it->second;
    double lo = u_min, hi = u_max;
    if (it != cache.end()) {
        lo = std::min(lo, it->second->u_min());
        hi = std::max(hi, it->second->u_max());
    }
    auto built = std::make_shared<const GTable>(alpha, p, lo, hi);
    cache[key] = built;
    return built;
}

}  // namespace specfun
}  // namespace levy
