#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "error.hpp"

namespace levy {

// Points and directions in R^d are plain coordinate vectors; d stays small in
// practice so no linear-algebra package is pulled in.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec scaled(const Vec& a, double c) {
    Vec r(a);
    for (double& v : r) v *= c;
    return r;
}

inline void add_scaled(Vec& acc, const Vec& a, double c) {
    for (std::size_t i = 0; i < a.size(); ++i) acc[i] += c * a[i];
}

inline Vec zero_vec(std::size_t d) { return Vec(d, 0.0); }

// Unit vector on S^{d-1}; renormalized on construction.
class Direction {
  public:
    explicit Direction(Vec u) : u_(std::move(u)) {
        double n = norm(u_);
        if (!(n > 0.0) || !std::isfinite(n))
            throw Error(ErrorCode::invalid_argument, "direction must be a nonzero finite vector");
        for (double& v : u_) v /= n;
    }

    const Vec& coords() const noexcept { return u_; }
    std::size_t dim() const noexcept { return u_.size(); }
    double operator[](std::size_t i) const { return u_[i]; }

  private:
    Vec u_;
};

inline Direction direction_of(const Vec& x) { return Direction(x); }

}  // namespace levy
