#pragma once

#include <cmath>
#include <vector>

#include "vec.hpp"

namespace levy {

// Spherical cap {u : <u, center> >= cos(half_angle)}.  Caps (and finite
// unions of caps) are the only Borel subsets of the sphere we test against;
// membership is exact and boundary mass is easy to reason about.
struct Cap {
    Direction center;
    double half_angle;  // radians, in (0, pi]

    Cap(Direction c, double ha) : center(std::move(c)), half_angle(ha) {
        if (!(ha > 0.0) || !(ha <= M_PI + 1e-12))
            throw Error(ErrorCode::invalid_argument, "cap half-angle must lie in (0, pi]");
    }

    bool contains(const Vec& unit) const {
        return dot(unit, center.coords()) >= std::cos(half_angle) - 1e-15;
    }
};

// A finite union of caps; empty set of caps means the full sphere.
class DirectionSet {
  public:
    DirectionSet() = default;  // full sphere
    explicit DirectionSet(std::vector<Cap> caps) : caps_(std::move(caps)) {}

    bool full_sphere() const { return caps_.empty(); }
    const std::vector<Cap>& caps() const { return caps_; }

    bool contains(const Vec& unit) const {
        if (caps_.empty()) return true;
        for (const Cap& c : caps_)
            if (c.contains(unit)) return true;
        return false;
    }

  private:
    std::vector<Cap> caps_;
};

// Finite measure on the unit sphere given by weighted unit-vector atoms.
class SphericalMeasure {
  public:
    struct Atom {
        Direction u;
        double w;
    };

    SphericalMeasure() = default;
    explicit SphericalMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
        for (const Atom& a : atoms_) {
            if (!(a.w > 0.0) || !std::isfinite(a.w))
                throw Error(ErrorCode::invalid_argument, "spherical atom weights must be > 0");
            if (a.u.dim() != atoms_.front().u.dim())
                throw Error(ErrorCode::invalid_argument, "spherical atoms must share a dimension");
        }
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    std::size_t dim() const { return atoms_.empty() ? 0 : atoms_.front().u.dim(); }

    double total_mass() const {
        double s = 0.0;
        for (const Atom& a : atoms_) s += a.w;
        return s;
    }

    double mass(const DirectionSet& d) const {
        double s = 0.0;
        for (const Atom& a : atoms_)
            if (d.contains(a.u.coords())) s += a.w;
        return s;
    }

    SphericalMeasure scaled(double c) const {
        if (!(c > 0.0) || !std::isfinite(c))
            throw Error(ErrorCode::invalid_argument, "scaling factor must be positive");
        std::vector<Atom> out = atoms_;
        for (Atom& a : out) a.w *= c;
        return SphericalMeasure(std::move(out));
    }

    SphericalMeasure normalized() const {
        double t = total_mass();
        if (!(t > 0.0))
            throw Error(ErrorCode::invalid_argument, "cannot normalize an empty spherical measure");
        return scaled(1.0 / t);
    }

    // Symmetric under u -> -u (atoms pair up with equal weights).
    bool is_symmetric(double tol = 1e-12) const;

  private:
    std::vector<Atom> atoms_;
};

// The default cap partition used for directional estimates: caps of
// half-angle pi/4 around +/- each coordinate axis (for d = 1, the two points).
// Cap centers are rotated by `jitter` radians in the (axis, next-axis) plane
// so that atoms sitting exactly on cap boundaries do not flip membership.
std::vector<Cap> default_cap_partition(std::size_t dim, double jitter = 1e-9);

}  // namespace levy
