#include "doctest.h"

#include <cmath>
#include <random>

#include "error.hpp"
#include "oracle.hpp"
#include "specfun.hpp"

using namespace levy;

namespace {
double oracle_k(double eta, double alpha, double p) {
    return oracle::tanh_sinh_0_inf(
        [&](double t) { return std::pow(t, eta - alpha - 1.0) * std::exp(-std::pow(t, p)); });
}

double oracle_g(double u, double alpha, double p) {
    auto f = [&](double x) { return std::pow(x, -1.0 - alpha) * std::exp(-std::pow(x, p)); };
    if (u == 0.0) return oracle::tanh_sinh_0_inf(f);
    if (u >= 1.0) return oracle::tanh_sinh_to_inf(f, u);
    return oracle::tanh_sinh(f, u, 1.0, 1e-14) + oracle::tanh_sinh_to_inf(f, 1.0);
}
}  // namespace

TEST_CASE("K constant: Gamma reduction against quadrature oracle") {
    TemperingParams tp(1.0, 0.5);
    CHECK(specfun::k_const(1.5, tp) == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ua(-1.5, 1.9), ue(0.0, 2.0), up(0.3, 2.5);
    for (int i = 0; i < 25; ++i) {
        double alpha = ua(rng);
        if (std::abs(alpha) < 1e-3) alpha = 0.5;
        double p = up(rng);
        double eta = alpha + 0.05 + ue(rng);  // ensures eta > alpha
        TemperingParams t(p, alpha);
        double k = specfun::k_const(eta, t);
        double q = oracle_k(eta, alpha, p);
        CHECK(std::abs(k - q) <= 1e-10 * std::abs(k));
    }
}

TEST_CASE("K constant diverges at eta <= alpha") {
    TemperingParams tp(1.0, 0.5);
    CHECK_THROWS_AS(specfun::k_const(0.5, tp), Error);
    CHECK_THROWS_AS(specfun::k_const(0.2, tp), Error);
}

TEST_CASE("G tail values") {
    TemperingParams exp1(1.0, -1.0);
    // alpha = -1, p = 1: G(0) = int_0^inf e^{-x} dx = 1.
    CHECK(specfun::g_tail(0.0, exp1) == doctest::Approx(1.0).epsilon(1e-12));

    // Golden value, frozen from the tanh-sinh oracle (and mpmath):
    // G_{0.5,1}(1) = 0.17814771178156069.
    TemperingParams half(1.0, 0.5);
    CHECK(specfun::g_tail(1.0, half) == doctest::Approx(0.17814771178156069).epsilon(1e-12));
    CHECK(specfun::g_tail(1.0, half) == doctest::Approx(oracle_g(1.0, 0.5, 1.0)).epsilon(1e-12));

    // Divergence flag at u = 0 for alpha >= 0.
    CHECK(std::isinf(specfun::g_tail(0.0, half)));

    // Strictly decreasing.
    double prev = specfun::g_tail(0.05, half);
    for (double u : {0.2, 0.7, 1.9, 4.0}) {
        double cur = specfun::g_tail(u, half);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("G small-u asymptote u^{-alpha}/alpha for alpha > 0") {
    for (auto [alpha, p] : {std::pair{0.5, 1.0}, {1.5, 1.0}, {0.8, 2.0}}) {
        TemperingParams tp(p, alpha);
        double u = 1e-6;
        double g = specfun::g_tail(u, tp);
        double asym = std::pow(u, -alpha) / alpha;
        CHECK(std::abs(g / asym - 1.0) < 0.01);
    }
}

TEST_CASE("G inverse: identity, range errors, monotonicity") {
    TemperingParams tp(1.0, 0.5);
    for (double u : {0.1, 1.0, 10.0}) {
        double t = specfun::g_tail(u, tp);
        double back = specfun::g_tail_inverse(t, tp);
        CHECK(std::abs(back - u) <= 1e-9 * u);
    }

    TemperingParams neg(1.0, -0.7);
    double c = specfun::c_const(neg);
    CHECK_THROWS_AS(specfun::g_tail_inverse(c * 1.0001, neg), Error);
    CHECK_THROWS_AS(specfun::g_tail_inverse(c, neg), Error);
    // Inside the range it works.
    double u1 = specfun::g_tail_inverse(0.5 * c, neg);
    double u2 = specfun::g_tail_inverse(0.1 * c, neg);
    CHECK(u1 < u2);  // G decreasing => larger t maps to smaller u
}

TEST_CASE("cached G table tracks the rigorous path") {
    auto tab = specfun::shared_g_table(0.8, 1.0, 1e-8, 1e3);
    TemperingParams tp(1.0, 0.8);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lu(std::log(1e-8), std::log(50.0));
    for (int i = 0; i < 40; ++i) {
        double u = std::exp(lu(rng));
        double fast = (*tab)(u);
        double slow = specfun::g_tail(u, tp);
        CHECK(std::abs(fast - slow) <= 1e-9 * slow);
        double back = tab->inverse(fast);
        CHECK(std::abs(back - u) <= 1e-8 * u);
    }
}
