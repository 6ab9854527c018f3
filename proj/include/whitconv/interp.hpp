#pragma once

// Interpolation utilities: Chebyshev interpolants (smooth functions, fast
// evaluation in hot loops) and monotone pchip (CDF tables, inversion).

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "whitconv/errors.hpp"

namespace whitconv {

// Chebyshev interpolant of f on [a,b] at n+1 Chebyshev-Lobatto points,
// evaluated by Clenshaw recurrence on the coefficient form.
class Chebyshev {
public:
    Chebyshev() = default;

    Chebyshev(const std::function<double(double)>& f, double a, double b, int n)
        : a_(a), b_(b) {
        std::vector<double> fv(n + 1);
        for (int k = 0; k <= n; ++k) {
            double xk = std::cos(M_PI * k / n); // Lobatto node in [-1,1]
            fv[k] = f(0.5 * (a + b) + 0.5 * (b - a) * xk);
        }
        // coefficients by the discrete cosine transform (direct O(n^2); n here is small)
        coef_.assign(n + 1, 0.0);
        for (int j = 0; j <= n; ++j) {
            double s = 0;
            for (int k = 0; k <= n; ++k) {
                double w = (k == 0 || k == n) ? 0.5 : 1.0;
                s += w * fv[k] * std::cos(M_PI * j * k / n);
            }
            coef_[j] = 2.0 * s / n;
        }
        coef_[0] *= 0.5;
        coef_[n] *= 0.5;
    }

    double operator()(double x) const {
        double t = (2 * x - a_ - b_) / (b_ - a_);
        double b1 = 0, b2 = 0;
        for (int j = static_cast<int>(coef_.size()) - 1; j >= 1; --j) {
            double tmp = 2 * t * b1 - b2 + coef_[j];
            b2 = b1;
            b1 = tmp;
        }
        return t * b1 - b2 + coef_[0];
    }

    double lo() const { return a_; }
    double hi() const { return b_; }
    // magnitude of the last two coefficients, a cheap convergence indicator
    double tail_coef() const {
        size_t n = coef_.size();
        return n >= 2 ? std::max(std::abs(coef_[n - 1]), std::abs(coef_[n - 2])) : 0.0;
    }

private:
    double a_ = 0, b_ = 1;
    std::vector<double> coef_;
};

// Piecewise Chebyshev over contiguous panels.
class PiecewiseCheb {
public:
    PiecewiseCheb() = default;
    PiecewiseCheb(const std::function<double(double)>& f, std::vector<double> breaks, int n) {
        breaks_ = std::move(breaks);
        for (size_t i = 0; i + 1 < breaks_.size(); ++i)
            pieces_.emplace_back(f, breaks_[i], breaks_[i + 1], n);
    }
    double operator()(double x) const {
        size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin();
        if (i == 0) i = 1;
        if (i >= breaks_.size()) i = breaks_.size() - 1;
        return pieces_[i - 1](x);
    }
    double lo() const { return breaks_.front(); }
    double hi() const { return breaks_.back(); }

private:
    std::vector<double> breaks_;
    std::vector<Chebyshev> pieces_;
};

// Monotone piecewise-cubic Hermite (Fritsch-Carlson). Preserves monotone data,
// so CDF tables stay invertible.
class Pchip {
public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
        size_t n = x_.size();
        if (n < 2 || y_.size() != n) throw DomainError("Pchip: need >= 2 matching points");
        d_.assign(n, 0.0);
        std::vector<double> h(n - 1), del(n - 1);
        for (size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            if (!(h[i] > 0)) throw DomainError("Pchip: x must be strictly increasing");
            del[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        if (n == 2) {
            d_[0] = d_[1] = del[0];
        } else {
            for (size_t i = 1; i + 1 < n; ++i) {
                if (del[i - 1] * del[i] <= 0) {
                    d_[i] = 0;
                } else {
                    double w1 = 2 * h[i] + h[i - 1], w2 = h[i] + 2 * h[i - 1];
                    d_[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
                }
            }
            d_[0] = edge(h[0], h[1], del[0], del[1]);
            d_[n - 1] = edge(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
        }
    }

    double operator()(double x) const {
        size_t i = locate(x);
        double h = x_[i + 1] - x_[i], t = (x - x_[i]) / h;
        double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
        double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
        return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
    }

    double derivative(double x) const {
        size_t i = locate(x);
        double h = x_[i + 1] - x_[i], t = (x - x_[i]) / h;
        double g00 = 6 * t * (t - 1) / h, g10 = (1 - t) * (1 - 3 * t);
        double g01 = -6 * t * (t - 1) / h, g11 = t * (3 * t - 2);
        return g00 * y_[i] + g10 * d_[i] + g01 * y_[i + 1] + g11 * d_[i + 1];
    }

    double lo() const { return x_.front(); }
    double hi() const { return x_.back(); }
    const std::vector<double>& xs() const { return x_; }
    const std::vector<double>& ys() const { return y_; }

    // inverse of a nondecreasing interpolant by bisection on [lo,hi]
    double invert(double target, double tol = 1e-12) const {
        double a = lo(), b = hi();
        double fa = y_.front(), fb = y_.back();
        if (target <= fa) return a;
        if (target >= fb) return b;
        for (int it = 0; it < 200 && b - a > tol * std::max(1.0, std::abs(a)); ++it) {
            double m = 0.5 * (a + b);
            ((*this)(m) < target ? a : b) = m;
        }
        return 0.5 * (a + b);
    }

private:
    static double edge(double h0, double h1, double d0, double d1) {
        double d = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (d * d0 <= 0) return 0.0;
        if (d0 * d1 < 0 && std::abs(d) > 3 * std::abs(d0)) return 3 * d0;
        return d;
    }
    size_t locate(double x) const {
        size_t i = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
        if (i == 0) return 0;
        if (i >= x_.size()) return x_.size() - 2;
        return i - 1;
    }
    std::vector<double> x_, y_, d_;
};

} // namespace whitconv
