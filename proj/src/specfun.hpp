#pragma once

#include <memory>
#include <vector>

#include "interp.hpp"

namespace levy {

// Tempering parameters (p, alpha) with gamma = alpha v 0 derived.
struct TemperingParams {
    double p;
    double alpha;

    TemperingParams(double p_, double alpha_);
    double gamma() const noexcept { return alpha > 0.0 ? alpha : 0.0; }
};

namespace specfun {

// K_{eta,alpha,p} = int_0^inf t^{eta-alpha-1} e^{-t^p} dt = Gamma((eta-alpha)/p)/p.
// Requires eta > alpha.
double k_const(double eta, const TemperingParams& tp);

// G_{alpha,p}(u) = int_u^inf x^{-1-alpha} e^{-x^p} dx, by adaptive quadrature.
// u = 0 is allowed for alpha < 0 (returns c_{alpha,p}); for alpha >= 0 it
// returns +infinity as the divergence flag.
double g_tail(double u, const TemperingParams& tp);

// c_{alpha,p} = G_{alpha,p}(0), finite only for alpha < 0.
double c_const(const TemperingParams& tp);

// Inverse of G: the u > 0 with |G(u) - t| <= 1e-12 * max(1, t).  Throws when
// t is outside the range of G.
double g_tail_inverse(double t, const TemperingParams& tp);

// Raw-parameter variants; these accept any alpha < 2 including 0 (the class
// restriction alpha != 0 applies to tempered-stable laws, not to G itself,
// and shifted parameters alpha - k show up in moment calculations).
double g_tail_raw(double u, double alpha, double p);
double c_const_raw(double alpha, double p);

// Cached evaluator for G on a log grid (monotone cubic in log-log), built
// once and then cheap enough for per-jump use in samplers and for the radial
// integrands of tempered-stable measures.  Relative accuracy ~1e-10 inside
// the table; evaluations outside fall back to quadrature.
class GTable {
  public:
    GTable(double alpha, double p, double u_min, double u_max);

    double operator()(double u) const;  // G(u)
    double inverse(double w) const;     // u with G(u) = w
    double u_min() const { return u_min_; }
    double u_max() const { return u_max_; }
    double alpha() const { return alpha_; }
    double p() const { return p_; }
    double g_at_min() const { return g_at_min_; }

  private:
    double alpha_, p_;
    double u_min_, u_max_;
    double g_at_min_, g_at_max_;
    MonotoneCubic loglog_;  // log G vs log u
};

// Shared per-(alpha,p) table covering at least [u_min, u_max]; widened and
// rebuilt when a caller needs a larger range.
std::shared_ptr<const GTable> shared_g_table(double alpha, double p, double u_min,
                                             double u_max);

}  // namespace specfun
}  // namespace levy
