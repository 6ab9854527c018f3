#include <doctest.h>

#include <cmath>
#include <complex>

#include "whitconv/interp.hpp"
#include "whitconv/quadrature.hpp"
#include "whitconv/rng.hpp"
#include "whitconv/stats.hpp"

using namespace whitconv;

TEST_CASE("gk15 adaptive: smooth, peaked and improper integrands") {
    QuadConfig cfg;
    auto r1 = integrate<double>([](double x) { return std::sin(x); }, 0.0, M_PI, cfg);
    CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-13));

    // narrow bump needs refinement
    auto r2 = integrate<double>(
        [](double x) { return std::exp(-1e4 * (x - 0.3) * (x - 0.3)); }, 0.0, 1.0, cfg);
    CHECK(r2.value == doctest::Approx(std::sqrt(M_PI / 1e4)).epsilon(1e-10));

    // tail integrator: int_0^inf e^{-t} = 1
    auto r3 = integrate_tail<double>([](double t) { return std::exp(-t); }, 0.0, 0.5, cfg);
    CHECK(r3.value == doctest::Approx(1.0).epsilon(1e-12));

    // divergent tail must throw
    CHECK_THROWS_AS(integrate_tail<double>([](double t) { return 1.0 / (1.0 + t * 0.01); }, 0.0,
                                           0.5, cfg),
                    TailError);
}

TEST_CASE("complex-valued panels") {
    QuadConfig cfg;
    using C = std::complex<double>;
    auto r = integrate<C>([](double t) { return std::exp(C(0, 3.0) * t); }, 0.0, 1.0, cfg);
    C expect = (std::exp(C(0, 3.0)) - 1.0) / C(0, 3.0);
    CHECK(std::abs(r.value - expect) < 1e-13);
}

TEST_CASE("chebyshev interpolant hits analytic values") {
    Chebyshev c([](double x) { return std::exp(-x) * std::cos(3 * x); }, 0.0, 4.0, 64);
    for (double x : {0.1, 1.7, 3.9})
        CHECK(c(x) == doctest::Approx(std::exp(-x) * std::cos(3 * x)).epsilon(1e-12));
}

TEST_CASE("pchip is monotone and invertible on monotone data") {
    std::vector<double> xs, ys;
    for (int i = 0; i <= 40; ++i) {
        double x = i / 10.0;
        xs.push_back(x);
        ys.push_back(std::tanh(x));
    }
    Pchip f(xs, ys);
    double prev = -1;
    for (double x = 0; x <= 4.0; x += 0.003) {
        double v = f(x);
        CHECK(v >= prev - 1e-14);
        prev = v;
    }
    double xstar = f.invert(std::tanh(1.234));
    CHECK(xstar == doctest::Approx(1.234).epsilon(1e-4));
}

TEST_CASE("rng streams: reproducible, order-independent, correct normal tails") {
    RngStream a(42, 7), b(42, 7), c(42, 8);
    std::vector<double> va, vb;
    for (int i = 0; i < 1000; ++i) {
        va.push_back(a.normal());
        vb.push_back(b.normal());
    }
    CHECK(va == vb);
    CHECK(c.normal() != va[0]);

    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0));
    CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK(inverse_normal_cdf(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-9));
}

TEST_CASE("pairwise sum and mean/se") {
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
    auto ms = mean_se(v);
    CHECK(ms.mean == doctest::Approx(0.1));
    CHECK(ms.se == doctest::Approx(0.0));
}

TEST_CASE("chi2 quantile approximation") {
    // exact chi2_{0.99}(49) = 74.919; Wilson-Hilferty should be within 0.2
    CHECK(chi2_quantile(0.99, 49) == doctest::Approx(74.919).epsilon(0.005));
}
