#pragma once

#include <cmath>
#include <string>

#include "whitconv/errors.hpp"

namespace whitconv {

// Model parameter alpha < 1/2, held fixed through a computation.
struct Params {
    double alpha;
    double half_minus_alpha;

    explicit Params(double a) : alpha(a), half_minus_alpha(0.5 - a) {
        if (!(a < 0.5))
            throw DomainError("Params: alpha must be < 1/2, got " + std::to_string(a));
    }
};

// Order nu of the kernel: either real nu = value or purely imaginary nu = i*value.
struct Order {
    enum class Kind { Real, Imaginary };
    Kind kind;
    double value; // magnitude, >= 0

    static Order real(double v) {
        if (v < 0) throw DomainError("Order: magnitude must be >= 0");
        return Order{Kind::Real, v};
    }
    static Order imaginary(double v) {
        if (v < 0) throw DomainError("Order: magnitude must be >= 0");
        return Order{Kind::Imaginary, v};
    }
    bool is_real() const { return kind == Kind::Real; }

    // (1/2-alpha)^2 - nu^2, the eigenvalue this order corresponds to
    double lambda_of(const Params& p) const {
        double c = p.half_minus_alpha;
        return is_real() ? c * c - value * value : c * c + value * value;
    }
};

// Spectral point: lambda >= 0 with its order Delta_lambda = sqrt((1/2-a)^2 - lambda).
struct SpectralPoint {
    double lambda;
    Order order;

    static SpectralPoint from_lambda(const Params& p, double lam) {
        if (lam < 0) throw DomainError("SpectralPoint: lambda must be >= 0");
        double c2 = p.half_minus_alpha * p.half_minus_alpha;
        if (lam == 0.0)
            return {0.0, Order::real(p.half_minus_alpha)}; // exact, so the kernel is exactly 1
        if (lam <= c2)
            return {lam, Order::real(std::sqrt(c2 - lam))};
        return {lam, Order::imaginary(std::sqrt(lam - c2))};
    }
};

// Tolerances shared by the quadrature-backed operations.
struct QuadConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    double truncation_tail_tol = 1e-12;

    void validate() const {
        if (!(abs_tol > 0) || !(rel_tol > 0) || !(truncation_tail_tol > 0))
            throw DomainError("QuadConfig: tolerances must be > 0");
        if (max_subdivisions < 8)
            throw DomainError("QuadConfig: max_subdivisions must be >= 8");
    }
};

} // namespace whitconv
