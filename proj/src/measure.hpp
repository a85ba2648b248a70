#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "radial.hpp"
#include "specfun.hpp"
#include "spherical.hpp"
#include "vec.hpp"

namespace levy {

struct PointAtom {
    Vec x;     // nonzero point in R^d
    double w;  // > 0
};

// Levy (or Rosinski) measure in one of four concrete representations.
//   atomic:   sum of weighted point masses off the origin
//   polar:    sigma(du) x rho(r) dr with a direction-independent profile
//   stable:   sigma(du) x r^{-1-eta} dr, eta in (0,2)
//   tempered: radial kernel t^{-1-alpha} e^{-t^p} dt composed with a
//             Rosinski measure (itself atomic/polar/stable)
class Measure {
  public:
    enum class Kind { atomic, polar, stable, tempered };

    struct AtomicRep {
        std::vector<PointAtom> atoms;
    };
    struct PolarRep {
        SphericalMeasure sigma;
        RadialProfile radial;
    };
    struct StableRep {
        double eta;
        SphericalMeasure sigma;
    };
    struct TemperedRep {
        TemperingParams params;
        std::shared_ptr<const Measure> rosinski;
    };

    static Measure atomic(std::size_t dim, std::vector<PointAtom> atoms);
    static Measure polar(SphericalMeasure sigma, RadialProfile radial);
    static Measure stable(double eta, SphericalMeasure sigma);
    // Wraps R as the Levy measure of a p-tempered alpha-stable law; rejects
    // R not in the moment class M^gamma (gamma = alpha v 0).
    static Measure tempered(const TemperingParams& params, Measure rosinski);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    const AtomicRep& as_atomic() const { return std::get<AtomicRep>(rep_); }
    const PolarRep& as_polar() const { return std::get<PolarRep>(rep_); }
    const StableRep& as_stable() const { return std::get<StableRep>(rep_); }
    const TemperedRep& as_tempered() const { return std::get<TemperedRep>(rep_); }

    // Total-mass scaling by c > 0.
    Measure scaled(double c) const;

    bool is_zero() const { return kind_ == Kind::atomic && as_atomic().atoms.empty(); }

    // The spherical component carrying directional information (sigma for
    // polar/stable, directions of atoms for atomic, directions of the
    // Rosinski measure for tempered).
    SphericalMeasure directional_weights() const;

  private:
    Measure(Kind k, std::size_t d, std::variant<AtomicRep, PolarRep, StableRep, TemperedRep> rep)
        : kind_(k), dim_(d), rep_(std::move(rep)) {}

    Kind kind_;
    std::size_t dim_;
    std::variant<AtomicRep, PolarRep, StableRep, TemperedRep> rep_;
};

// Infinitely divisible law with zero Gaussian part: ID_0(M, b).
struct ID0Law {
    Measure measure;
    Vec shift;

    ID0Law(Measure m, Vec b);
};

struct MomentClassReport {
    double beta = 0.0;
    bool member = false;
    double small_ball_integral = 0.0;  // int_{|x|<=1} |x|^2 M(dx), +inf flagged
    double tail_integral = 0.0;        // int_{|x|>1} |x|^beta M(dx), +inf flagged
};

// int_{A<|x|<B, x/|x| in D} |x|^k M(dx); +infinity signals divergence.
// This single primitive backs tail masses, moment-class checks and the
// tail of the beta-inverted measure.
double annulus_power_moment(const Measure& m, double k, double A, double B,
                            const DirectionSet& D = {});

// M(|x| > r, x/|x| in D).
double tail_mass(const Measure& m, double r, const DirectionSet& D = {});

// int 1{r_lo<|x|<r_hi} f(x) M(dx).  Throws Error(divergence) when the
// integral fails to converge (f not vanishing fast enough near an open
// endpoint with infinite activity).
double integrate(const Measure& m, const std::function<double(const Vec&)>& f, double r_lo,
                 double r_hi, const quad::Options& opt = {});

// Coordinate-wise version for vector-valued integrands.
Vec integrate_vec(const Measure& m, const std::function<Vec(const Vec&)>& f, double r_lo,
                  double r_hi, const quad::Options& opt = {});

MomentClassReport moment_class_check(const Measure& m, double beta);

// C_mu(z) of Eq-style triplet (0, M, b) with centering x/(1+|x|^2).
std::complex<double> char_exponent(const ID0Law& law, const Vec& z);

// Rosinski-to-Levy wrapper (free-function spelling of Measure::tempered).
Measure rosinski_to_levy(Measure rosinski, double p, double alpha);

}  // namespace levy
