#include "measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace levy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using cplx = std::complex<double>;

double power_integral(double e, double a, double b) {
    if (!(a < b)) return 0.0;
    const double e1 = e + 1.0;
    if (std::abs(e1) < 1e-14) {
        if (a == 0.0 || std::isinf(b)) return kInf;
        return std::log(b / a);
    }
    double hi = std::isinf(b) ? (e1 > 0.0 ? kInf : 0.0) : std::pow(b, e1);
    double lo = (a == 0.0) ? (e1 < 0.0 ? kInf : 0.0) : std::pow(a, e1);
    if (std::isinf(hi) || std::isinf(lo)) return kInf;
    return (hi - lo) / e1;
}

// int_a^b t^{k-1-alpha} e^{-t^p} dt through the shared G tables, with a
// direct-quadrature guard when the difference G(a)-G(b) cancels badly.
class TemperedRadialMoment {
  public:
    TemperedRadialMoment(double k, double alpha, double p)
        : k_(k), ashift_(alpha - k), p_(p),
          table_(specfun::shared_g_table(ashift_, p_, 1e-9, 1e9)) {}

    double operator()(double a, double b) const {
        if (!(a < b)) return 0.0;
        if (a == 0.0 && ashift_ >= 0.0) return kInf;
        double ga = (a == 0.0) ? specfun::c_const_raw(ashift_, p_) : (*table_)(a);
        double gb = std::isinf(b) ? 0.0 : (*table_)(b);
        double diff = ga - gb;
        if (diff <= 1e-6 * ga && diff != ga) {
            // Thin shell: difference of tails loses precision, integrate directly.
            quad::Options o;
            o.abs_tol = 1e-14 * std::max(1.0, ga);
            o.rel_tol = 1e-11;
            const double expo = -1.0 - ashift_;  // = k - 1 - alpha
            auto f = [&](double t) { return std::pow(t, expo) * std::exp(-std::pow(t, p_)); };
            double cap = std::pow(745.0, 1.0 / p_);
            double bb = std::isinf(b) ? cap : std::min(b, cap);
            if (!(a < bb)) return 0.0;
            return quad::integrate_improper(f, a, bb, o).value;
        }
        return diff;
    }

  private:
    double k_, ashift_, p_;
    std::shared_ptr<const specfun::GTable> table_;
};

// Outer integral of `inner` against the radial structure of a non-tempered
// measure restricted to directions in D.  `inner(radius)` must be smooth.
double integrate_radial_against(const Measure& m, const DirectionSet& D,
                                const std::function<double(double)>& inner,
                                const quad::Options& opt) {
    switch (m.kind()) {
        case Measure::Kind::atomic: {
            double s = 0.0;
            for (const PointAtom& a : m.as_atomic().atoms) {
                double r = norm(a.x);
                if (D.contains(scaled(a.x, 1.0 / r))) s += a.w * inner(r);
            }
            return s;
        }
        case Measure::Kind::polar: {
            const auto& rep = m.as_polar();
            double s = rep.sigma.mass(D);
            if (s == 0.0) return 0.0;
            return s * rep.radial.integrate_against(inner, 0.0, kInf, opt);
        }
        case Measure::Kind::stable: {
            const auto& rep = m.as_stable();
            double s = rep.sigma.mass(D);
            if (s == 0.0) return 0.0;
            auto f = [&](double r) { return inner(r) * std::pow(r, -1.0 - rep.eta); };
            return s * quad::integrate_improper(f, 0.0, kInf, opt).value;
        }
        case Measure::Kind::tempered:
            throw Error(ErrorCode::unsupported, "nested tempering is not representable");
    }
    throw Error(ErrorCode::invalid_argument, "corrupt measure kind");
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction and validation

Measure Measure::atomic(std::size_t dim, std::vector<PointAtom> atoms) {
    if (dim == 0) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
    for (const PointAtom& a : atoms) {
        if (a.x.size() != dim)
            throw Error(ErrorCode::invalid_argument, "atom dimension mismatch");
        double r = norm(a.x);
        if (!(r > 0.0) || !std::isfinite(r))
            throw Error(ErrorCode::invalid_argument,
                        "atoms must be nonzero finite points (no mass at the origin)");
        if (!(a.w > 0.0) || !std::isfinite(a.w))
            throw Error(ErrorCode::invalid_argument, "atom weights must be positive");
    }
    return Measure(Kind::atomic, dim, AtomicRep{std::move(atoms)});
}

Measure Measure::polar(SphericalMeasure sigma, RadialProfile radial) {
    if (sigma.empty())
        throw Error(ErrorCode::invalid_argument, "polar measure needs a nonzero sigma");
    double small = radial.moment(2.0, 0.0, 1.0);
    double tail = radial.moment(0.0, 1.0, kInf);
    if (std::isinf(small))
        throw Error(ErrorCode::invalid_argument,
                    "polar profile violates int r^2 rho(dr) < infinity near 0");
    if (std::isinf(tail))
        throw Error(ErrorCode::invalid_argument,
                    "polar profile violates finite mass away from 0 (tail diverges)");
    std::size_t d = sigma.dim();
    return Measure(Kind::polar, d, PolarRep{std::move(sigma), std::move(radial)});
}

Measure Measure::stable(double eta, SphericalMeasure sigma) {
    if (!(eta > 0.0) || !(eta < 2.0))
        throw Error(ErrorCode::invalid_argument, "stable index eta must lie in (0,2)");
    if (sigma.empty())
        throw Error(ErrorCode::invalid_argument, "stable measure needs a nonzero sigma");
    std::size_t d = sigma.dim();
    return Measure(Kind::stable, d, StableRep{eta, std::move(sigma)});
}

Measure Measure::tempered(const TemperingParams& params, Measure rosinski) {
    if (rosinski.kind() == Kind::tempered)
        throw Error(ErrorCode::invalid_argument,
                    "Rosinski measures cannot themselves be tempered-stable");
    if (rosinski.is_zero())
        throw Error(ErrorCode::invalid_argument, "Rosinski measure must be nonzero");
    MomentClassReport rep = moment_class_check(rosinski, params.gamma());
    if (!rep.member) {
        std::string which = std::isinf(rep.small_ball_integral)
                                ? "int_{|x|<=1}|x|^2 R(dx)"
                                : "int_{|x|>1}|x|^gamma R(dx)";
        throw Error(ErrorCode::domain,
                    "Rosinski measure is not in M^gamma: " + which + " diverges");
    }
    std::size_t d = rosinski.dim();
    return Measure(Kind::tempered, d,
                   TemperedRep{params, std::make_shared<const Measure>(std::move(rosinski))});
}

Measure rosinski_to_levy(Measure rosinski, double p, double alpha) {
    return Measure::tempered(TemperingParams(p, alpha), std::move(rosinski));
}

ID0Law::ID0Law(Measure m, Vec b) : measure(std::move(m)), shift(std::move(b)) {
    if (shift.size() != measure.dim())
        throw Error(ErrorCode::invalid_argument, "shift dimension must match the measure");
}

Measure Measure::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c))
        throw Error(ErrorCode::invalid_argument, "measure scaling must be positive");
    switch (kind_) {
        case Kind::atomic: {
            AtomicRep rep = as_atomic();
            for (PointAtom& a : rep.atoms) a.w *= c;
            return Measure(kind_, dim_, std::move(rep));
        }
        case Kind::polar: {
            PolarRep rep = as_polar();
            rep.sigma = rep.sigma.scaled(c);
            return Measure(kind_, dim_, std::move(rep));
        }
        case Kind::stable: {
            StableRep rep = as_stable();
            rep.sigma = rep.sigma.scaled(c);
            return Measure(kind_, dim_, std::move(rep));
        }
        case Kind::tempered: {
            const TemperedRep& rep = as_tempered();
            return Measure(kind_, dim_,
                           TemperedRep{rep.params, std::make_shared<const Measure>(
                                                       rep.rosinski->scaled(c))});
        }
    }
    throw Error(ErrorCode::invalid_argument, "corrupt measure kind");
}

SphericalMeasure Measure::directional_weights() const {
    switch (kind_) {
        case Kind::atomic: {
            std::vector<SphericalMeasure::Atom> atoms;
            for (const PointAtom& a : as_atomic().atoms)
                atoms.push_back({Direction(a.x), a.w});
            if (atoms.empty())
                throw Error(ErrorCode::invalid_argument, "zero measure has no directions");
            return SphericalMeasure(std::move(atoms));
        }
        case Kind::polar: return as_polar().sigma;
        case Kind::stable: return as_stable().sigma;
        case Kind::tempered: return as_tempered().rosinski->directional_weights();
    }
    throw Error(ErrorCode::invalid_argument, "corrupt measure kind");
}

// ---------------------------------------------------------------------------
// Annulus moments (the workhorse): int_{A<|x|<=B, dir in D} |x|^k M(dx)

double annulus_power_moment(const Measure& m, double k, double A, double B,
                            const DirectionSet& D) {
    if (A < 0.0 || !(A < B))
        throw Error(ErrorCode::invalid_argument, "annulus_power_moment: need 0 <= A < B");
    switch (m.kind()) {
        case Measure::Kind::atomic: {
            double s = 0.0;
            for (const PointAtom& a : m.as_atomic().atoms) {
                double r = norm(a.x);
                if (r > A && r <= B && D.contains(scaled(a.x, 1.0 / r)))
                    s += a.w * std::pow(r, k);
            }
            return s;
        }
        case Measure::Kind::polar: {
            const auto& rep = m.as_polar();
            double s = rep.sigma.mass(D);
            return s == 0.0 ? 0.0 : s * rep.radial.moment(k, A, B);
        }
        case Measure::Kind::stable: {
            const auto& rep = m.as_stable();
            double s = rep.sigma.mass(D);
            return s == 0.0 ? 0.0 : s * power_integral(k - 1.0 - rep.eta, A, B);
        }
        case Measure::Kind::tempered: {
            const auto& rep = m.as_tempered();
            const Measure& R = *rep.rosinski;
            TemperedRadialMoment tk(k, rep.params.alpha, rep.params.p);
            if (A == 0.0 && rep.params.alpha - k >= 0.0) return kInf;
            auto per_radius = [&](double rho) {
                double a = A / rho;
                double b = std::isinf(B) ? kInf : B / rho;
                return std::pow(rho, k) * tk(a, b);
            };
            quad::Options opt;
            opt.abs_tol = 1e-12;
            opt.rel_tol = 1e-9;
            try {
                return integrate_radial_against(R, D, per_radius, opt);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::divergence) return kInf;
                throw;
            }
        }
    }
    throw Error(ErrorCode::invalid_argument, "corrupt measure kind");
}

double tail_mass(const Measure& m, double r, const DirectionSet& D) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw Error(ErrorCode::invalid_argument, "tail_mass: radius must be positive and finite");
    return annulus_power_moment(m, 0.0, r, kInf, D);
}

MomentClassReport moment_class_check(const Measure& m, double beta) {
    if (!(beta >= 0.0) || !(beta <= 2.0))
        throw Error(ErrorCode::invalid_argument, "moment class order beta must lie in [0,2]");
    MomentClassReport rep;
    rep.beta = beta;
    rep.small_ball_integral = annulus_power_moment(m, 2.0, 0.0, 1.0);
    rep.tail_integral = annulus_power_moment(m, beta, 1.0, kInf);
    rep.member = std::isfinite(rep.small_ball_integral) && std::isfinite(rep.tail_integral);
    return rep;
}

// ---------------------------------------------------------------------------
// Generic annulus integrals of bounded test functions

namespace {

double cap_for_p(double p) { return std::pow(745.0, 1.0 / p); }

double integrate_impl(const Measure& m, const std::function<double(const Vec&)>& f, double r_lo,
                      double r_hi, const quad::Options& opt) {
    switch (m.kind()) {
        case Measure::Kind::atomic: {
            double s = 0.0;
            for (const PointAtom& a : m.as_atomic().atoms) {
                double r = norm(a.x);
                if (r > r_lo && r < r_hi) s += a.w * f(a.x);
            }
            return s;
        }
        case Measure::Kind::polar: {
            const auto& rep = m.as_polar();
            double total = 0.0;
            for (const auto& atom : rep.sigma.atoms()) {
                auto g = [&](double r) { return f(scaled(atom.u.coords(), r)); };
                total += atom.w * rep.radial.integrate_against(g, r_lo, r_hi, opt);
            }
            return total;
        }
        case Measure::Kind::stable: {
            const auto& rep = m.as_stable();
            double total = 0.0;
            for (const auto& atom : rep.sigma.atoms()) {
                auto g = [&](double r) {
                    return f(scaled(atom.u.coords(), r)) * std::pow(r, -1.0 - rep.eta);
                };
                total += atom.w * quad::integrate_improper(g, r_lo, r_hi, opt).value;
            }
            return total;
        }
        case Measure::Kind::tempered: {
            const auto& rep = m.as_tempered();
            const Measure& R = *rep.rosinski;
            const double alpha = rep.params.alpha, p = rep.params.p;
            const double tcap = cap_for_p(p);
            // Per Rosinski point x: int f(t x) t^{-1-alpha} e^{-t^p} dt over
            // t in (r_lo/|x|, r_hi/|x|).
            auto per_point = [&](const Vec& x, double w) {
                double rho = norm(x);
                double a = r_lo / rho;
                double b = std::min(std::isinf(r_hi) ? kInf : r_hi / rho, tcap);
                if (!(a < b)) return 0.0;
                auto g = [&](double t) {
                    return f(scaled(x, t)) * std::pow(t, -1.0 - alpha) * std::exp(-std::pow(t, p));
                };
                return w * quad::integrate_improper(g, a, b, opt).value;
            };
            if (R.kind() == Measure::Kind::atomic) {
                double total = 0.0;
                for (const PointAtom& a : R.as_atomic().atoms) total += per_point(a.x, a.w);
                return total;
            }
            // Polar/stable Rosinski measure: nested radial integral.
            double total = 0.0;
            const SphericalMeasure sig = R.directional_weights();
            quad::Options outer = opt;
            outer.abs_tol = std::max(opt.abs_tol, 1e-11);
            outer.rel_tol = std::max(opt.rel_tol, 1e-7);
            for (const auto& atom : sig.atoms()) {
                auto inner = [&](double s) { return per_point(scaled(atom.u.coords(), s), 1.0); };
                if (R.kind() == Measure::Kind::polar) {
                    total += atom.w *
                             R.as_polar().radial.integrate_against(inner, 0.0, kInf, outer);
                } else {
                    double eta = R.as_stable().eta;
                    auto g = [&](double s) { return inner(s) * std::pow(s, -1.0 - eta); };
                    total += atom.w * quad::integrate_improper(g, 0.0, kInf, outer).value;
                }
            }
            return total;
        }
    }
    throw Error(ErrorCode::invalid_argument, "corrupt measure kind");
}

}  // namespace

double integrate(const Measure& m, const std::function<double(const Vec&)>& f, double r_lo,
                 double r_hi, const quad::Options& opt) {
    if (r_lo < 0.0 || !(r_lo < r_hi))
        throw Error(ErrorCode::invalid_argument, "integrate: need 0 <= r_lo < r_hi");
    return integrate_impl(m, f, r_lo, r_hi, opt);
}

Vec integrate_vec(const Measure& m, const std::function<Vec(const Vec&)>& f, double r_lo,
                  double r_hi, const quad::Options& opt) {
    Vec out(m.dim(), 0.0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        auto fi = [&](const Vec& x) { return f(x)[i]; };
        out[i] = integrate(m, fi, r_lo, r_hi, opt);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Characteristic exponent

namespace {

// Oscillation-aware breakpoints for kernels containing e^{isr} on (lo, hi).
std::vector<double> osc_breakpoints(double lo, double hi, double s) {
    std::vector<double> pts;
    if (s <= 0.0) return pts;
    const double period = 2.0 * M_PI / s;
    const double step = 6.0 * period;
    double start = std::max(lo, step);
    for (double x = start; x < hi && pts.size() < 4000; x += step) pts.push_back(x);
    // A few geometric points resolve the power-law stretch below one period.
    for (double x = std::max(lo * 2.0, hi * 1e-14); x < std::min(hi, step); x *= 4.0)
        pts.push_back(x);
    return pts;
}

// int_(lo,hi) (e^{isr} - 1 - isr/(1+r^2)) w r^q dr for s > 0.
cplx char_radial_power(double s, double w, double q, double lo, double hi,
                       const quad::Options& opt) {
    const bool unbounded = std::isinf(hi);
    double r0 = unbounded ? std::max({lo * 2.0, 48.0 / s, 1.0}) : hi;

    for (int attempt = 0;; ++attempt) {
        // Numeric core on (lo, r0].
        auto re_f = [&](double r) { return (std::cos(s * r) - 1.0) * w * std::pow(r, q); };
        auto im_f = [&](double r) {
            return (std::sin(s * r) - s * r / (1.0 + r * r)) * w * std::pow(r, q);
        };
        auto pts = osc_breakpoints(lo, r0, s);
        double re = quad::integrate_improper_pts(re_f, lo, r0, pts, opt).value;
        double im = quad::integrate_improper_pts(im_f, lo, r0, pts, opt).value;
        cplx total(re, im);
        if (!unbounded) return total;

        // Tail pieces on (r0, inf), q < -1 guaranteed by Levy integrability.
        // T1: the constant -1 in the kernel, exactly.
        total += cplx(w * std::pow(r0, q + 1.0) / (q + 1.0), 0.0);
        // T2: the centering term, smooth and absolutely convergent.
        auto cent = [&](double r) { return w * std::pow(r, q + 1.0) / (1.0 + r * r); };
        total += cplx(0.0, -s * quad::integrate_improper(cent, r0, kInf, opt).value);
        // T3: oscillatory tail by repeated integration by parts.
        cplx is(0.0, s);
        cplx phase = std::exp(cplx(0.0, s * r0));
        cplx series = 0.0;
        double fall = 1.0;  // (q)_j falling factorial
        bool converged = false;
        double prev_mag = kInf;
        for (int j = 0; j < 14; ++j) {
            cplx term = -phase * ((j % 2 == 0) ? 1.0 : -1.0) * fall *
                        std::pow(r0, q - j) / std::pow(is, j + 1);
            double mag = std::abs(term);
            if (mag > prev_mag) { converged = mag < 16.0 * opt.abs_tol; break; }
            series += term;
            prev_mag = mag;
            if (mag * std::abs(w) <= opt.abs_tol) { converged = true; break; }
            fall *= (q - j);
        }
        if (converged) return total + w * series;
        if (attempt >= 8)
            throw Error(ErrorCode::quadrature,
                        "char_exponent: oscillatory tail failed to converge", std::abs(total),
                        prev_mag);
        r0 *= 2.0;
    }
}

// Same kernel against a bounded table profile.
cplx char_radial_table(double s, double w, const RadialProfile& prof, const quad::Options& opt) {
    double lo = prof.support_lo(), hi = prof.support_hi();
    auto re_f = [&](double r) { return (std::cos(s * r) - 1.0) * w * prof.density(r); };
    auto im_f = [&](double r) {
        return (std::sin(s * r) - s * r / (1.0 + r * r)) * w * prof.density(r);
    };
    auto pts = prof.breakpoints(lo, hi);
    for (double x : osc_breakpoints(lo, hi, s)) pts.push_back(x);
    double re = quad::integrate_improper_pts(re_f, lo, hi, pts, opt).value;
    double im = quad::integrate_improper_pts(im_f, lo, hi, pts, opt).value;
    return {re, im};
}

// Tempered radial kernel for one Rosinski point at radius m_norm:
// int_0^inf (e^{ist} - 1 - ist/(1+m^2 t^2)) t^{-1-alpha} e^{-t^p} dt, s > 0.
cplx char_ts_radial(double s, double m_norm, double alpha, double p, const quad::Options& opt) {
    const double tcap = cap_for_p(p);
    auto dens = [&](double t) { return std::pow(t, -1.0 - alpha) * std::exp(-std::pow(t, p)); };
    auto re_f = [&](double t) { return (std::cos(s * t) - 1.0) * dens(t); };
    auto im_f = [&](double t) {
        double mt = m_norm * t;
        return (std::sin(s * t) - s * t / (1.0 + mt * mt)) * dens(t);
    };
    auto pts = osc_breakpoints(0.0, tcap, s);
    double re = quad::integrate_improper_pts(re_f, 0.0, tcap, pts, opt).value;
    double im = quad::integrate_improper_pts(im_f, 0.0, tcap, pts, opt).value;
    return {re, im};
}

cplx signed_eval(double s, const std::function<cplx(double)>& eval_pos) {
    if (s == 0.0) return 0.0;
    cplx v = eval_pos(std::abs(s));
    return s > 0.0 ? v : std::conj(v);
}

}  // namespace

cplx char_exponent(const ID0Law& law, const Vec& z) {
    if (z.size() != law.measure.dim())
        throw Error(ErrorCode::invalid_argument, "char_exponent: z dimension mismatch");
    for (double v : z)
        if (!std::isfinite(v))
            throw Error(ErrorCode::invalid_argument, "char_exponent: z must be finite");

    quad::Options opt;
    opt.abs_tol = 1e-11;
    opt.rel_tol = 1e-9;

    cplx total(0.0, dot(law.shift, z));
    const Measure& m = law.measure;
    switch (m.kind()) {
        case Measure::Kind::atomic: {
            for (const PointAtom& a : m.as_atomic().atoms) {
                double th = dot(z, a.x);
                double r2 = dot(a.x, a.x);
                total += a.w * (std::exp(cplx(0.0, th)) - 1.0 - cplx(0.0, th / (1.0 + r2)));
            }
            return total;
        }
        case Measure::Kind::polar: {
            const auto& rep = m.as_polar();
            for (const auto& atom : rep.sigma.atoms()) {
                double s = dot(z, atom.u.coords());
                if (rep.radial.is_powerlaw()) {
                    const auto& pl = rep.radial.powerlaw();
                    total += signed_eval(s, [&](double sp) {
                        return char_radial_power(sp, atom.w, pl.index, pl.r_lo, pl.r_hi, opt);
                    });
                } else {
                    total += signed_eval(s, [&](double sp) {
                        return char_radial_table(sp, atom.w, rep.radial, opt);
                    });
                }
            }
            return total;
        }
        case Measure::Kind::stable: {
            const auto& rep = m.as_stable();
            for (const auto& atom : rep.sigma.atoms()) {
                double s = dot(z, atom.u.coords());
                total += signed_eval(s, [&](double sp) {
                    return char_radial_power(sp, atom.w, -1.0 - rep.eta, 0.0, kInf, opt);
                });
            }
            return total;
        }
        case Measure::Kind::tempered: {
            const auto& rep = m.as_tempered();
            const Measure& R = *rep.rosinski;
            const double alpha = rep.params.alpha, p = rep.params.p;
            if (R.kind() == Measure::Kind::atomic) {
                for (const PointAtom& a : R.as_atomic().atoms) {
                    double s = dot(z, a.x);
                    double rho = norm(a.x);
                    total += a.w * signed_eval(s, [&](double sp) {
                        return char_ts_radial(sp, rho, alpha, p, opt);
                    });
                }
                return total;
            }
            // Nested quadrature over the Rosinski radial structure.
            quad::Options outer;
            outer.abs_tol = 1e-9;
            outer.rel_tol = 1e-7;
            const SphericalMeasure sig = R.directional_weights();
            for (const auto& atom : sig.atoms()) {
                double su = dot(z, atom.u.coords());
                for (int part = 0; part < 2; ++part) {
                    auto inner = [&](double srad) {
                        cplx v = signed_eval(su * srad, [&](double sp) {
                            return char_ts_radial(sp, srad, alpha, p, opt);
                        });
                        return part == 0 ? v.real() : v.imag();
                    };
                    double piece;
                    if (R.kind() == Measure::Kind::polar) {
                        piece = R.as_polar().radial.integrate_against(inner, 0.0, kInf, outer);
                    } else {
                        double eta = R.as_stable().eta;
                        auto g = [&](double srad) {
                            return inner(srad) * std::pow(srad, -1.0 - eta);
                        };
                        piece = quad::integrate_improper(g, 0.0, kInf, outer).value;
                    }
                    total += atom.w * (part == 0 ? cplx(piece, 0.0) : cplx(0.0, piece));
                }
            }
            return total;
        }
    }
    throw Error(ErrorCode::invalid_argument, "corrupt measure kind");
}

}  // namespace levy
