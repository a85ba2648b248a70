#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"

namespace levy {

// Monotone cubic (Fritsch-Carlson) interpolant.  Preserves monotonicity of
// the data, which keeps tabulated tail functions invertible.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw Error(ErrorCode::invalid_argument, "MonotoneCubic: need >= 2 matching nodes");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i] < x_[i + 1]))
                throw Error(ErrorCode::invalid_argument, "MonotoneCubic: x must be increasing");
        m_.resize(n);
        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i)
            m_[i] = (d[i - 1] * d[i] > 0.0) ? 0.5 * (d[i - 1] + d[i]) : 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) { m_[i] = m_[i + 1] = 0.0; continue; }
            double a = m_[i] / d[i], b = m_[i + 1] / d[i];
            double s = a * a + b * b;
            if (s > 9.0) {
                double t = 3.0 / std::sqrt(s);
                m_[i] = t * a * d[i];
                m_[i + 1] = t * b * d[i];
            }
        }
    }

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }
    double y_front() const { return y_.front(); }
    double y_back() const { return y_.back(); }

    double operator()(double x) const {
        const std::size_t n = x_.size();
        if (x <= x_.front()) return y_.front() + m_.front() * (x - x_.front());
        if (x >= x_.back()) return y_.back() + m_.back() * (x - x_.back());
        std::size_t i = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin() - 1;
        if (i >= n - 1) i = n - 2;
        double h = x_[i + 1] - x_[i];
        double t = (x - x_[i]) / h;
        double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * m_[i] +
               (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * m_[i + 1];
    }

    // Inverse for data strictly monotone in y.  Locates the segment by
    // binary search on the node values, then runs a safeguarded Newton on the
    // cubic within it.
    double inverse(double y) const {
        const std::size_t n = x_.size();
        const bool incr = y_.back() > y_.front();
        if (incr ? (y <= y_.front()) : (y >= y_.front())) return x_.front();
        if (incr ? (y >= y_.back()) : (y <= y_.back())) return x_.back();
        std::size_t lo = 0, hi = n - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if ((y_[mid] <= y) == incr) lo = mid; else hi = mid;
        }
        const std::size_t i = lo;
        const double h = x_[i + 1] - x_[i];
        auto val = [&](double t) {
            double t2 = t * t, t3 = t2 * t;
            return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * m_[i] +
                   (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * m_[i + 1];
        };
        auto deriv = [&](double t) {
            double t2 = t * t;
            return (6 * t2 - 6 * t) * y_[i] + (3 * t2 - 4 * t + 1) * h * m_[i] +
                   (-6 * t2 + 6 * t) * y_[i + 1] + (3 * t2 - 2 * t) * h * m_[i + 1];
        };
        double tlo = 0.0, thi = 1.0, t = 0.5;
        double span = std::abs(y_[i + 1] - y_[i]) + 1e-300;
        for (int it = 0; it < 60; ++it) {
            double f = val(t) - y;
            if ((f < 0.0) == incr) tlo = t; else thi = t;
            double d = deriv(t);
            double tn = (d != 0.0) ? t - f / d : 0.5 * (tlo + thi);
            if (!(tn > tlo && tn < thi)) tn = 0.5 * (tlo + thi);
            if (std::abs(f) <= 1e-14 * span && it >= 4) break;
            t = tn;
        }
        return x_[i] + t * h;
    }

  private:
    std::vector<double> x_, y_, m_;
};

// Piecewise-linear interpolant in log-log coordinates: exactly representable
// power-law segments, exactly invertible when strictly monotone.
class LogLogInterp {
  public:
    LogLogInterp() = default;
    LogLogInterp(std::vector<double> x, std::vector<double> y) {
        if (x.size() < 2 || x.size() != y.size())
            throw Error(ErrorCode::invalid_argument, "LogLogInterp: need >= 2 matching nodes");
        lx_.reserve(x.size());
        ly_.reserve(y.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!(x[i] > 0.0) || !(y[i] > 0.0))
                throw Error(ErrorCode::invalid_argument, "LogLogInterp: nodes must be positive");
            lx_.push_back(std::log(x[i]));
            ly_.push_back(std::log(y[i]));
        }
        for (std::size_t i = 0; i + 1 < lx_.size(); ++i)
            if (!(lx_[i] < lx_[i + 1]))
                throw Error(ErrorCode::invalid_argument, "LogLogInterp: x must be increasing");
    }

    bool strictly_increasing() const {
        for (std::size_t i = 0; i + 1 < ly_.size(); ++i)
            if (!(ly_[i] < ly_[i + 1])) return false;
        return true;
    }
    bool strictly_decreasing() const {
        for (std::size_t i = 0; i + 1 < ly_.size(); ++i)
            if (!(ly_[i] > ly_[i + 1])) return false;
        return true;
    }

    double x_front() const { return std::exp(lx_.front()); }
    double x_back() const { return std::exp(lx_.back()); }

    // Evaluate; extrapolates with the end-segment power laws.
    double operator()(double x) const {
        double lx = std::log(x);
        std::size_t i;
        if (lx <= lx_.front()) i = 0;
        else if (lx >= lx_.back()) i = lx_.size() - 2;
        else i = std::upper_bound(lx_.begin(), lx_.end(), lx) - lx_.begin() - 1;
        double s = (ly_[i + 1] - ly_[i]) / (lx_[i + 1] - lx_[i]);
        return std::exp(ly_[i] + s * (lx - lx_[i]));
    }

    // Exact inverse (requires strictly monotone values); extrapolates with the
    // end-segment power laws.
    double inverse(double y) const {
        double ly = std::log(y);
        bool incr = ly_.back() > ly_.front();
        std::size_t n = ly_.size(), i;
        auto below = [&](std::size_t k) { return incr ? ly_[k] <= ly : ly_[k] >= ly; };
        if (incr ? (ly <= ly_.front()) : (ly >= ly_.front())) i = 0;
        else if (incr ? (ly >= ly_.back()) : (ly <= ly_.back())) i = n - 2;
        else {
            std::size_t lo = 0, hi = n - 1;
            while (hi - lo > 1) {
                std::size_t mid = (lo + hi) / 2;
                if (below(mid)) lo = mid; else hi = mid;
            }
            i = lo;
        }
        double s = (ly_[i + 1] - ly_[i]) / (lx_[i + 1] - lx_[i]);
        if (s == 0.0) throw Error(ErrorCode::numeric, "LogLogInterp: flat segment not invertible");
        return std::exp(lx_[i] + (ly - ly_[i]) / s);
    }

  private:
    std::vector<double> lx_, ly_;
};

inline std::vector<double> geomspace(double a, double b, std::size_t n) {
    if (!(a > 0.0) || !(b > a) || n < 2)
        throw Error(ErrorCode::invalid_argument, "geomspace: need 0 < a < b and n >= 2");
    std::vector<double> g(n);
    double la = std::log(a), lb = std::log(b);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
    g.front() = a;
    g.back() = b;
    return g;
}

}  // namespace levy
