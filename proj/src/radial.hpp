#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "quadrature.hpp"

namespace levy {

// Radial density rho(r) against dr, shared by every direction of a polar
// measure.  Power-law pieces are handled in closed form; tabulated densities
// interpolate log-linearly between nodes (segments with a zero endpoint fall
// back to linear interpolation).
struct PowerLawProfile {
    double index;  // rho(r) = r^index on [r_lo, r_hi]
    double r_lo;   // >= 0
    double r_hi;   // may be +infinity
};

struct TableProfile {
    std::vector<double> r;        // strictly increasing, > 0
    std::vector<double> density;  // >= 0
};

class RadialProfile {
  public:
    explicit RadialProfile(PowerLawProfile p);
    explicit RadialProfile(TableProfile t);

    bool is_powerlaw() const { return std::holds_alternative<PowerLawProfile>(rep_); }
    const PowerLawProfile& powerlaw() const { return std::get<PowerLawProfile>(rep_); }
    const TableProfile& table() const { return std::get<TableProfile>(rep_); }

    double support_lo() const;
    double support_hi() const;

    double density(double r) const;

    // int_{(A,B)} r^k rho(r) dr; divergent pieces are reported as +infinity.
    double moment(double k, double A, double B) const;

    // int_{(A,B)} f(r) rho(r) dr by quadrature (closed-form power segments are
    // not exploited here; use moment() for pure powers).  Throws on
    // divergence.
    double integrate_against(const std::function<double(double)>& f, double A, double B,
                             const quad::Options& opt = {}) const;

    // Pushforward under r -> 1/r with weight r^{2+beta}: the radial profile of
    // a beta-inverted polar measure.  Exact for power-law profiles and for
    // log-linear table segments.
    RadialProfile inverted(double beta) const;

    // Interior breakpoints useful for quadrature (table nodes).
    std::vector<double> breakpoints(double A, double B) const;

  private:
    std::variant<PowerLawProfile, TableProfile> rep_;
};

}  // namespace levy
