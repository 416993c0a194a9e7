#include <cmath>
#include <vector>

#include "alpharoot/lyapunov.hpp"
#include "alpharoot/params.hpp"
#include "alpharoot/simulate.hpp"
#include "doctest.h"
#include "test_support.hpp"

using alpharoot::LyapunovSpec;
using alpharoot::ModelParams;

namespace {

ModelParams params(double b = 1.0, double theta = 1.0) {
    ModelParams p;
    p.a = 1.0;
    p.b = b;
    p.alpha = 1.5;
    p.m = 0.0;
    p.theta = theta;
    return p;
}

}  // namespace

TEST_CASE("weight function equals |x| outside the mollified well") {
    for (double x : {2.0, 2.3, 2.5, 3.0, 7.25, -2.7, -100.0, 1e6}) {
        CHECK(alpharoot::lyapunov_h(x) == std::abs(x));
    }
}

TEST_CASE("weight function is even, bounded below and smooth at the origin") {
    CHECK(alpharoot::lyapunov_h_prime(0.0) == 0.0);
    for (double x = 0.0; x <= 3.0; x += 0.05) {
        CHECK(alpharoot::lyapunov_h(x) >= 1.5);
        CHECK(alpharoot::lyapunov_h(-x) == alpharoot::lyapunov_h(x));
        CHECK(alpharoot::lyapunov_h_prime(-x) == -alpharoot::lyapunov_h_prime(x));
    }
    // flat inside |x| <= 1
    CHECK(alpharoot::lyapunov_h(0.5) == 1.5);
    CHECK(alpharoot::lyapunov_h_prime(0.99) == 0.0);
    CHECK(alpharoot::lyapunov_h_second(0.5) == 0.0);
    CHECK(alpharoot::lyapunov_h_second(2.5) == 0.0);
}

TEST_CASE("ramp transitions symmetrically from 0 to 1") {
    CHECK(alpharoot::lyapunov_rho(1.0) == 0.0);
    CHECK(alpharoot::lyapunov_rho(2.0) == 1.0);
    CHECK(alpharoot::lyapunov_rho(1.5) == doctest::Approx(0.5).epsilon(1e-14));
    for (double s : {0.1, 0.25, 0.4}) {
        CHECK(alpharoot::lyapunov_rho(1.0 + s) + alpharoot::lyapunov_rho(2.0 - s) ==
              doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("derivatives match finite differences") {
    const double h = 1e-6;
    for (double x : {1.1, 1.37, 1.5, 1.82, 2.4, -1.6, 0.3}) {
        const double fd1 =
            (alpharoot::lyapunov_h(x + h) - alpharoot::lyapunov_h(x - h)) / (2.0 * h);
        CHECK(std::abs(fd1 - alpharoot::lyapunov_h_prime(x)) <= 1e-5);
        const double fd2 = (alpharoot::lyapunov_h_prime(x + h) -
                            alpharoot::lyapunov_h_prime(x - h)) /
                           (2.0 * h);
        CHECK(std::abs(fd2 - alpharoot::lyapunov_h_second(x)) <= 1e-4);
    }
}

TEST_CASE("affine dependence on y cancels every jump term") {
    // V(y + u, x) - V(y, x) - u dV/dy is identically zero, which is why the
    // generator reduces to drift plus the Brownian term
    LyapunovSpec spec;
    spec.beta = 3.7;
    spec.c = 0.5;
    spec.M = 5.0;
    spec.sup_h_second = 2.1;
    for (double y : {0.0, 1.0, 10.0}) {
        for (double u : {0.1, 5.0, 1e6}) {
            const double jump = alpharoot::lyapunov_v(y + u, 2.5, spec) -
                                alpharoot::lyapunov_v(y, 2.5, spec) - u * spec.beta;
            CHECK(std::abs(jump) <= 1e-12 * (1.0 + spec.beta * (y + u)));
        }
    }
}

TEST_CASE("jump generator on exponentials matches the closed form") {
    // direct jump-measure evaluation against e^{-l y} l^alpha y / alpha; this
    // certifies the compensation convention used throughout
    for (double alpha : {1.3, 1.7}) {
        for (auto [y, lambda] : {std::pair{0.5, 1.0}, std::pair{2.0, 0.7}}) {
            const double direct = testsupport::jump_generator_on_exp(y, lambda, alpha);
            const double closed =
                std::exp(-lambda * y) * std::pow(lambda, alpha) * y / alpha;
            CHECK(direct == doctest::Approx(closed).epsilon(1e-6));
        }
    }
}

TEST_CASE("truncating the linear weight leaves a vanishing jump remainder") {
    // W_R(y) = beta y cutoff(y / R) is no longer affine, but its jump integral
    // is bounded by the mass the measure puts past the cutoff shoulder and
    // dies like R^{1-alpha}
    const double alpha = 1.5, beta = 4.0, y = 1.0;
    const double c = testsupport::levy_constant(alpha);
    const double scale = std::pow(y, 1.0 / alpha);
    auto bound = [&](double R) {
        const double z_on = (R - y) / scale;
        return 2.0 * beta * c * scale * std::pow(z_on, 1.0 - alpha) / (alpha - 1.0);
    };
    const double j3 = testsupport::jump_generator_on_truncated(y, beta, 1e3, alpha);
    const double j6 = testsupport::jump_generator_on_truncated(y, beta, 1e6, alpha);
    CHECK(std::abs(j3) <= bound(1e3));
    CHECK(std::abs(j6) <= bound(1e6));
    CHECK(std::abs(j6) < std::abs(j3));
    // asymptotic rate: |J(R)| ~ K R^{1-alpha}
    const double rate = std::abs(j6) / std::abs(j3);
    CHECK(rate == doctest::Approx(std::pow(1e3, 1.0 - alpha)).epsilon(0.2));
}

TEST_CASE("drift constants satisfy their defining inequalities") {
    const ModelParams p = params();
    const LyapunovSpec spec = alpharoot::choose_beta_c_M(p);
    CHECK_NOTHROW(spec.validate());
    CHECK(spec.beta >= 1.0);
    CHECK(spec.c == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(spec.sup_h_second > 0.0);
    CHECK(spec.M > 0.0);

    // c = min(b/2, theta) on both sides of the crossover
    CHECK(alpharoot::choose_beta_c_M(params(1.0, 10.0)).c ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(alpharoot::choose_beta_c_M(params(4.0, 1.0)).c ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pointwise certificate holds on and off the grid") {
    const ModelParams p = params();
    const LyapunovSpec spec = alpharoot::choose_beta_c_M(p);
    const auto cert = alpharoot::certify_drift(spec, p);
    CHECK(cert.grid_ok);
    CHECK(cert.y_coefficient_ok);
    CHECK(cert.x_tail_ok);
    CHECK(cert.worst_slack <= 0.0);
    CHECK(cert.pass());
}

TEST_CASE("ensemble expectation obeys the drift inequality") {
    const ModelParams p = params();
    const LyapunovSpec spec = alpharoot::choose_beta_c_M(p);
    alpharoot::SimConfig base;
    base.params = p;
    base.dt = 0.005;
    base.n_paths = 4000;
    base.seed = 1234;
    const auto check = alpharoot::drift_mc_check(1.0, 0.0, 1.0, spec, base);
    CHECK(check.pass);
    CHECK(check.lhs > 0.0);
    CHECK(check.se > 0.0);
    CHECK(check.lhs <= check.rhs + 3.0 * check.se + check.bias_allowance);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(alpharoot::choose_beta_c_M(params(1.0, 0.0)),
                    alpharoot::validation_error);
    CHECK_THROWS_AS(alpharoot::choose_beta_c_M(params(1.0, -2.0)),
                    alpharoot::validation_error);
    const ModelParams p = params();
    const LyapunovSpec spec = alpharoot::choose_beta_c_M(p);
    CHECK_THROWS_AS(alpharoot::generator_on_V(-1.0, 0.0, spec, p),
                    alpharoot::validation_error);
    LyapunovSpec bad = spec;
    bad.c = 0.0;
    CHECK_THROWS_AS(bad.validate(), alpharoot::validation_error);
    CHECK_THROWS_AS(alpharoot::certify_drift(bad, p), alpharoot::validation_error);
}
