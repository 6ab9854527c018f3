#pragma once

// Test-only independent oracles. Everything here evaluates the defining
// integrals by plain quadrature, independent of the library's production
// evaluation paths.

#include <cmath>
#include <functional>

#include "whitconv/quadrature.hpp"

namespace oracles {

inline whitconv::QuadConfig tight() {
    whitconv::QuadConfig cfg;
    cfg.abs_tol = 1e-14;
    cfg.rel_tol = 1e-12;
    return cfg;
}

// Gamma(a,x) = int_x^inf t^{a-1} e^{-t} dt by direct adaptive quadrature.
inline double upper_gamma(double a, double x) {
    auto f = [&](double t) { return std::exp((a - 1) * std::log(t) - t); };
    auto r = whitconv::integrate_tail<double>(f, x, std::max(0.5, x * 0.5), tight());
    return r.value;
}

// D_mu(t) for mu < 0 by the classic representation
//   D_mu(t) = e^{-t^2/4}/Gamma(-mu) int_0^inf s^{-mu-1} e^{-s^2/2 - t s} ds,
// then raised by the recurrence D_{mu+1}(t) = t D_mu(t) - mu D_{mu-1}(t).
inline double cylinder_D_neg(double mu, double t) {
    auto f = [&](double s) {
        return std::exp((-mu - 1) * std::log(s) - s * s / 2 - t * s);
    };
    auto r = whitconv::integrate_tail<double>(f, 0.0, 0.5, tight());
    return std::exp(-t * t / 4) / std::tgamma(-mu) * r.value;
}

inline double cylinder_D(double mu, double t) {
    if (mu < 0) return cylinder_D_neg(mu, t);
    // climb with the three-term recurrence from two negative orders
    double lo = mu - std::ceil(mu + 1); // in [-2,-1)
    double d0 = cylinder_D_neg(lo - 1, t);
    double d1 = cylinder_D_neg(lo, t);
    double nu = lo;
    while (nu < mu - 0.5) {
        double d2 = t * d1 - nu * d0;
        d0 = d1;
        d1 = d2;
        nu += 1;
    }
    return d1;
}

} // namespace oracles
