#include "radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace levy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// int_a^b r^e dr with 0 <= a < b <= inf; +inf when divergent.
double power_integral(double e, double a, double b) {
    if (!(a < b)) return 0.0;
    const double e1 = e + 1.0;
    if (std::abs(e1) < 1e-14) {
        if (a == 0.0 || std::isinf(b)) return kInf;
        return std::log(b / a);
    }
    double hi, lo;
    if (std::isinf(b)) {
        if (e1 > 0.0) return kInf;
        hi = 0.0;
    } else {
        hi = std::pow(b, e1);
    }
    if (a == 0.0) {
        if (e1 < 0.0) return kInf;
        lo = 0.0;
    } else {
        lo = std::pow(a, e1);
    }
    return (hi - lo) / e1;
}

}  // namespace

RadialProfile::RadialProfile(PowerLawProfile p) : rep_(p) {
    if (!(p.r_lo >= 0.0) || !(p.r_hi > p.r_lo))
        throw Error(ErrorCode::invalid_argument, "power-law profile: need 0 <= r_lo < r_hi");
    if (!std::isfinite(p.index))
        throw Error(ErrorCode::invalid_argument, "power-law profile: index must be finite");
}

RadialProfile::RadialProfile(TableProfile t) : rep_(std::move(t)) {
    const TableProfile& tb = table();
    if (tb.r.size() < 2 || tb.r.size() != tb.density.size())
        throw Error(ErrorCode::invalid_argument, "table profile: need >= 2 matching nodes");
    for (std::size_t i = 0; i < tb.r.size(); ++i) {
        if (!(tb.r[i] > 0.0) || !std::isfinite(tb.r[i]))
            throw Error(ErrorCode::invalid_argument, "table profile: radii must be positive");
        if (i > 0 && !(tb.r[i] > tb.r[i - 1]))
            throw Error(ErrorCode::invalid_argument, "table profile: radii must increase");
        if (!(tb.density[i] >= 0.0) || !std::isfinite(tb.density[i]))
            throw Error(ErrorCode::invalid_argument, "table profile: densities must be >= 0");
    }
}

double RadialProfile::support_lo() const {
    return is_powerlaw() ? powerlaw().r_lo : table().r.front();
}

double RadialProfile::support_hi() const {
    return is_powerlaw() ? powerlaw().r_hi : table().r.back();
}

double RadialProfile::density(double r) const {
    if (r < support_lo() || r > support_hi()) return 0.0;
    if (is_powerlaw()) return std::pow(r, powerlaw().index);
    const TableProfile& tb = table();
    if (r <= tb.r.front()) return tb.density.front();
    if (r >= tb.r.back()) return tb.density.back();
    std::size_t i = std::upper_bound(tb.r.begin(), tb.r.end(), r) - tb.r.begin() - 1;
    double d0 = tb.density[i], d1 = tb.density[i + 1];
    double r0 = tb.r[i], r1 = tb.r[i + 1];
    if (d0 > 0.0 && d1 > 0.0) {
        double m = std::log(d1 / d0) / std::log(r1 / r0);
        return d0 * std::pow(r / r0, m);
    }
    return d0 + (d1 - d0) * (r - r0) / (r1 - r0);  // linear fallback around zeros
}

double RadialProfile::moment(double k, double A, double B) const {
    double a = std::max(A, support_lo());
    double b = std::min(B, support_hi());
    if (!(a < b)) return 0.0;
    if (is_powerlaw()) return power_integral(k + powerlaw().index, a, b);

    const TableProfile& tb = table();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < tb.r.size(); ++i) {
        double r0 = tb.r[i], r1 = tb.r[i + 1];
        double lo = std::max(a, r0), hi = std::min(b, r1);
        if (!(lo < hi)) continue;
        double d0 = tb.density[i], d1 = tb.density[i + 1];
        if (d0 > 0.0 && d1 > 0.0) {
            double m = std::log(d1 / d0) / std::log(r1 / r0);
            total += d0 * std::pow(r0, -m) * power_integral(k + m, lo, hi);
        } else if (d0 > 0.0 || d1 > 0.0) {
            double c1 = (d1 - d0) / (r1 - r0);
            double c0 = d0 - c1 * r0;
            total += c0 * power_integral(k, lo, hi) + c1 * power_integral(k + 1.0, lo, hi);
        }
    }
    return total;
}

double RadialProfile::integrate_against(const std::function<double(double)>& f, double A,
                                        double B, const quad::Options& opt) const {
    double a = std::max(A, support_lo());
    double b = std::min(B, support_hi());
    if (!(a < b)) return 0.0;
    auto g = [&](double r) { return f(r) * density(r); };
    return quad::integrate_improper_pts(g, a, b, breakpoints(a, b), opt).value;
}

RadialProfile RadialProfile::inverted(double beta) const {
    if (is_powerlaw()) {
        const PowerLawProfile& p = powerlaw();
        PowerLawProfile q;
        q.index = -(4.0 + beta + p.index);
        q.r_lo = std::isinf(p.r_hi) ? 0.0 : 1.0 / p.r_hi;
        q.r_hi = (p.r_lo == 0.0) ? kInf : 1.0 / p.r_lo;
        return RadialProfile(q);
    }
    const TableProfile& tb = table();
    const std::size_t n = tb.r.size();
    TableProfile out;
    out.r.resize(n);
    out.density.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 1.0 / tb.r[n - 1 - i];
        out.r[i] = s;
        out.density[i] = std::pow(s, -(4.0 + beta)) * tb.density[n - 1 - i];
    }
    return RadialProfile(std::move(out));
}

std::vector<double> RadialProfile::breakpoints(double A, double B) const {
    std::vector<double> pts;
    if (!is_powerlaw()) {
        for (double r : table().r)
            if (r > A && r < B) pts.push_back(r);
    }
    return pts;
}

}  // namespace levy
