#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "error.hpp"
#include "measure.hpp"
#include "oracle.hpp"

using namespace levy;
using cplx = std::complex<double>;

namespace {

const double inf = std::numeric_limits<double>::infinity();

Measure unit_stable(double eta, double d = 1) {
    std::vector<SphericalMeasure::Atom> atoms;
    Vec e(static_cast<std::size_t>(d), 0.0);
    e[0] = 1.0;
    atoms.push_back({Direction(e), 1.0});
    return Measure::stable(eta, SphericalMeasure(std::move(atoms)));
}

Measure symmetric_stable(double eta, double wplus = 0.5, double wminus = 0.5) {
    std::vector<SphericalMeasure::Atom> atoms;
    atoms.push_back({Direction(Vec{1.0}), wplus});
    atoms.push_back({Direction(Vec{-1.0}), wminus});
    return Measure::stable(eta, SphericalMeasure(std::move(atoms)));
}

}  // namespace

TEST_CASE("tail mass: atomic, stable closed form, tempered vs G oracle") {
    Measure a = Measure::atomic(2, {{Vec{2.0, 0.0}, 3.0}});
    CHECK(tail_mass(a, 1.0) == 3.0);
    CHECK(tail_mass(a, 2.0) == 0.0);  // tail is M(|x| > r), boundary excluded
    CHECK(tail_mass(a, 1.999) == 3.0);

    Measure s = unit_stable(1.2, 2);
    CHECK(tail_mass(s, 2.0) ==
          doctest::Approx(std::pow(2.0, -1.2) / 1.2).epsilon(1e-13));

    Measure r = Measure::atomic(2, {{Vec{1.0, 0.0}, 1.0}});
    Measure ts = rosinski_to_levy(r, 1.0, 0.5);
    auto g = [](double u) {
        return oracle::tanh_sinh_to_inf(
            [](double x) { return std::pow(x, -1.5) * std::exp(-x); }, u);
    };
    for (double u : {0.5, 1.0, 2.0})
        CHECK(tail_mass(ts, u) == doctest::Approx(g(u)).epsilon(1e-9));
}

TEST_CASE("tail mass restricted to direction cones") {
    Measure a = Measure::atomic(2, {{Vec{2.0, 0.0}, 3.0}, {Vec{-2.0, 0.0}, 5.0}});
    DirectionSet plus({Cap(Direction(Vec{1.0, 0.0}), M_PI / 4)});
    DirectionSet minus({Cap(Direction(Vec{-1.0, 0.0}), M_PI / 4)});
    CHECK(tail_mass(a, 1.0, plus) == 3.0);
    CHECK(tail_mass(a, 1.0, minus) == 5.0);
    CHECK(tail_mass(a, 1.0) == 8.0);
}

TEST_CASE("tail mass is nonincreasing in r across representations") {
    std::vector<Measure> ms;
    ms.push_back(Measure::atomic(1, {{Vec{0.3}, 1.0}, {Vec{-2.0}, 0.5}, {Vec{7.0}, 0.1}}));
    ms.push_back(unit_stable(0.7));
    ms.push_back(Measure::polar(
        SphericalMeasure({{Direction(Vec{1.0}), 2.0}}),
        RadialProfile(PowerLawProfile{-1.5, 0.0, 10.0})));
    ms.push_back(Measure::polar(
        SphericalMeasure({{Direction(Vec{1.0}), 1.0}}),
        RadialProfile(TableProfile{{0.1, 1.0, 5.0, 20.0}, {4.0, 1.0, 0.2, 0.01}})));
    ms.push_back(rosinski_to_levy(Measure::atomic(1, {{Vec{1.0}, 1.0}, {Vec{-0.5}, 2.0}}),
                                  1.0, 0.5));
    for (const Measure& m : ms) {
        double prev = inf;
        for (double r = 1e-3; r < 1e3; r *= 2.7) {
            double cur = tail_mass(m, r);
            CHECK(cur <= prev * (1.0 + 1e-12));
            prev = cur;
        }
    }
}

TEST_CASE("annulus integrals and divergence reporting") {
    Measure a = Measure::atomic(2, {{Vec{1.0, 0.0}, 2.0}});
    auto one = [](const Vec&) { return 1.0; };
    CHECK(integrate(a, one, 0.5, 2.0) == 2.0);

    Measure s1 = unit_stable(1.0);
    auto sq = [](const Vec& x) { return dot(x, x); };
    CHECK(integrate(s1, sq, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(integrate(s1, one, 0.0, 1.0), Error);
}

TEST_CASE("moment class membership") {
    Measure a = Measure::atomic(1, {{Vec{0.5}, 1.0}, {Vec{3.0}, 2.0}});
    for (double beta : {0.0, 0.5, 1.3, 2.0}) {
        auto rep = moment_class_check(a, beta);
        CHECK(rep.member);
    }

    Measure s = unit_stable(1.5);
    CHECK(moment_class_check(s, 1.0).member);
    CHECK_FALSE(moment_class_check(s, 1.5).member);
    CHECK(std::isinf(moment_class_check(s, 1.5).tail_integral));
    CHECK(moment_class_check(s, 1.0).tail_integral == doctest::Approx(1.0 / 0.5).epsilon(1e-12));
    CHECK(moment_class_check(s, 1.0).small_ball_integral ==
          doctest::Approx(1.0 / 0.5).epsilon(1e-12));

    CHECK(moment_class_check(unit_stable(0.5), 0.0).member);

    // Monotonicity: member at beta2 implies member at beta1 < beta2.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ue(0.1, 1.9);
    for (int i = 0; i < 10; ++i) {
        double eta = ue(rng);
        Measure m = unit_stable(eta);
        bool prev_member = true;
        for (double beta : {0.0, 0.3, 0.8, 1.2, 1.7, 2.0}) {
            bool mem = moment_class_check(m, beta).member;
            if (!prev_member) CHECK_FALSE(mem);
            prev_member = mem;
        }
    }
}

TEST_CASE("char exponent: exact atomic values and Hermitian symmetry") {
    ID0Law law(Measure::atomic(2, {{Vec{1.0, 0.0}, 2.0}}), Vec{0.0, 0.0});
    cplx c = char_exponent(law, Vec{M_PI, 0.0});
    CHECK(c.real() == doctest::Approx(-4.0).epsilon(1e-14));
    CHECK(c.imag() == doctest::Approx(-M_PI).epsilon(1e-14));
    CHECK(std::abs(char_exponent(law, Vec{0.0, 0.0})) == 0.0);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<PointAtom> atoms;
    for (int i = 0; i < 6; ++i) {
        Vec x{u(rng), u(rng)};
        if (norm(x) > 1e-3) atoms.push_back({x, std::abs(u(rng)) + 0.1});
    }
    ID0Law rnd(Measure::atomic(2, atoms), Vec{0.3, -0.2});
    for (int i = 0; i < 5; ++i) {
        Vec z{u(rng), u(rng)};
        cplx a = char_exponent(rnd, z);
        cplx b = char_exponent(rnd, scaled(z, -1.0));
        CHECK(std::abs(a - std::conj(b)) <= 1e-13 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("char exponent: stable radial integral against the closed form") {
    // One-sided eta-stable on the line: the exact exponent is
    // Gamma(-eta) (-iz)^eta - iz (pi/2) sec(pi eta/2).
    for (double eta : {0.8, 1.2, 1.7}) {
        ID0Law law(unit_stable(eta), Vec{0.0});
        for (double z : {0.6, 1.0, 3.1}) {
            cplx got = char_exponent(law, Vec{z});
            cplx miz = cplx(0.0, -z);
            cplx expect = std::tgamma(-eta) * std::pow(miz, eta) -
                          cplx(0.0, z * 0.5 * M_PI / std::cos(0.5 * M_PI * eta));
            CHECK(std::abs(got - expect) <= 1e-8 * (1.0 + std::abs(expect)));
        }
    }
}

TEST_CASE("char exponent: symmetric stable is real") {
    ID0Law law(symmetric_stable(1.3), Vec{0.0});
    for (double z : {0.5, 2.0, 7.0}) {
        cplx c = char_exponent(law, Vec{z});
        CHECK(std::abs(c.imag()) <= 1e-9 * (1.0 + std::abs(c.real())));
        CHECK(c.real() < 0.0);
    }
}

TEST_CASE("rosinski_to_levy: total mass for alpha < 0 and class rejection") {
    Measure r = Measure::atomic(1, {{Vec{1.0}, 1.0}, {Vec{-2.0}, 0.5}});
    double p = 1.0, alpha = -0.8;
    Measure ts = rosinski_to_levy(r, p, alpha);
    double total = tail_mass(ts, 1e-9);
    double expect = 1.5 * std::tgamma(-alpha / p) / p;
    CHECK(total == doctest::Approx(expect).epsilon(1e-8));

    // alpha in (0,2): mass blows up toward 0.
    Measure ts2 = rosinski_to_levy(r, 1.0, 0.5);
    CHECK(tail_mass(ts2, 1e-6) > 1e2 * tail_mass(ts2, 1e-2));

    // R not in M^gamma: stable 0.4 tails are too heavy for gamma = 0.5.
    CHECK_THROWS_AS(rosinski_to_levy(unit_stable(0.4), 1.0, 0.5), Error);
}

TEST_CASE("tempered wrapping of a stable Rosinski measure reproduces stable tails") {
    // S_eta(sigma, b) = TS(R, b) with R = K^{-1} M_stable.
    double eta = 1.3, alpha = 0.5, p = 1.0;
    TemperingParams tp(p, alpha);
    double K = specfun::k_const(eta, tp);
    Measure m_stable = symmetric_stable(eta);
    Measure r = m_stable.scaled(1.0 / K);
    Measure ts = rosinski_to_levy(r, p, alpha);
    for (double rad : {0.01, 0.1, 1.0, 10.0}) {
        double a = tail_mass(ts, rad);
        double b = tail_mass(m_stable, rad);
        CHECK(std::abs(a - b) <= 1e-7 * b);
    }
}
